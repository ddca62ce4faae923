#pragma once

#include <functional>
#include <map>
#include <ostream>
#include <span>
#include <vector>

#include "quiver/checked.hpp"
#include "quiver/partition.hpp"

namespace quiver {

/// Basis key of Lambda^{(x) arity}: one partition per tensor factor.
using ShapeTuple = std::vector<Partition>;

/// Sparse integer combination of tensor products of Schur functions.
/// No stored key ever maps to zero.
class TensorElement {
public:
    explicit TensorElement(std::size_t arity) : arity_(arity) {}

    /// The element 1 (x) ... (x) 1.
    static TensorElement unit(std::size_t arity);

    std::size_t arity() const noexcept { return arity_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::map<ShapeTuple, Coeff>& terms() const noexcept { return terms_; }

    Coeff coefficient(const ShapeTuple& key) const;
    void add(const ShapeTuple& key, Coeff c);

    TensorElement& operator+=(const TensorElement& other);
    bool operator==(const TensorElement&) const = default;

private:
    std::size_t arity_;
    std::map<ShapeTuple, Coeff> terms_;
};

std::ostream& operator<<(std::ostream& os, const TensorElement& e);

/// Replaces the factors at [position, position + width) of every basis key by
/// `replace(those factors)`, scaled by the key's coefficient. Every replacement
/// must have the same arity.
TensorElement tensor_replace_block(const TensorElement& e, std::size_t position, std::size_t width,
                                   const std::function<TensorElement(std::span<const Partition>)>& replace);

/// Linear substitution of the factor at `position` using a lookup table.
/// Throws MissingExpansion when a partition at `position` has no entry.
TensorElement tensor_substitute(const TensorElement& e, std::size_t position,
                                const std::map<Partition, TensorElement>& expansion);

}  // namespace quiver
