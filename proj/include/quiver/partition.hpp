#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace quiver {

/// Integer partition, stored as its positive parts in weakly decreasing order.
/// Trailing zeros are dropped on construction, so (2,1,0) == (2,1).
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int weight() const noexcept;

    /// Part i (0-based); zero past the end.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// True when the Young diagram of `this` lies inside that of `outer`.
    bool contained_in(const Partition& outer) const noexcept;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Row lengths of a composed diagram; arbitrary integers before straightening.
using IntSeq = std::vector<int>;

/// Zero, or +/- a Schur function s_lambda.
struct SignedSchur {
    int sign = 0;  // 0 encodes Zero
    Partition shape;

    static SignedSchur zero() { return {}; }
    bool is_zero() const noexcept { return sign == 0; }
    SignedSchur negated() const { return {-sign, shape}; }

    bool operator==(const SignedSchur&) const = default;
};

std::ostream& operator<<(std::ostream& os, const SignedSchur& s);

/// Rewrites the Jacobi-Trudi determinant s_I = det(h_{a_i + j - i}) as 0 or +/- s_lambda.
SignedSchur straighten(std::span<const int> seq);

/// All partitions of `n`, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

/// All partitions contained in `outer` (including the empty one and `outer`).
std::vector<Partition> subpartitions(const Partition& outer);

/// All partitions of weight at most `n`.
std::vector<Partition> partitions_up_to(int n);

}  // namespace quiver
