#include "quiver/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quiver/error.hpp"

namespace quiver {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
            parts_.clear();
            throw PreconditionError("not a partition: parts must be positive and weakly decreasing");
        }
    }
}

int Partition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contained_in(const Partition& outer) const noexcept {
    if (length() > outer.length()) return false;
    for (std::size_t i = 0; i < length(); ++i)
        if (parts_[i] > outer.parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '(';
    for (std::size_t i = 0; i < p.length(); ++i) os << (i ? "," : "") << p[i];
    return os << ')';
}

std::ostream& operator<<(std::ostream& os, const SignedSchur& s) {
    if (s.is_zero()) return os << "0";
    return os << (s.sign > 0 ? "+s" : "-s") << s.shape;
}

SignedSchur straighten(std::span<const int> seq) {
    const auto p = static_cast<int>(seq.size());
    std::vector<int> c(seq.size());
    for (int k = 0; k < p; ++k) c[k] = seq[k] - (k + 1);

    // Sign of the sorting permutation is the parity of the inversion count.
    int inversions = 0;
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            if (c[i] == c[j]) return SignedSchur::zero();
            if (c[i] < c[j]) ++inversions;
        }
    }
    std::sort(c.begin(), c.end(), std::greater<>());

    std::vector<int> lambda(seq.size());
    for (int k = 0; k < p; ++k) {
        lambda[k] = c[k] + (k + 1);
        if (lambda[k] < 0) return SignedSchur::zero();
    }
    return {inversions % 2 == 0 ? 1 : -1, Partition(std::move(lambda))};
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    auto rec = [&](auto& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Partition> subpartitions(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto& self, std::size_t row, int max_part) -> void {
        out.emplace_back(cur);
        if (row >= outer.length()) return;
        for (int part = std::min(outer[row], max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, row + 1, part);
            cur.pop_back();
        }
    };
    rec(rec, 0, outer[0]);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto ps = partitions_of(k);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

}  // namespace quiver
