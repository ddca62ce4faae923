#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "quiver/diagram.hpp"
#include "quiver/rng.hpp"
#include "quiver/tableau.hpp"
#include "quiver/tensor.hpp"

namespace quiver {

/// Filling of a rectangle diagram by rectangular tableaux T_ij.
class TableauDiagram {
public:
    explicit TableauDiagram(int n);

    int n() const noexcept { return n_; }
    const RectTableau& at(int i, int j) const;
    void set(int i, int j, RectTableau t);

    /// The underlying rectangle dimensions.
    RectDiagram shape() const;

    bool operator==(const TableauDiagram&) const = default;

private:
    int n_;
    std::vector<std::vector<RectTableau>> fill_;
};

/// Fills R_ij in order of increasing j - i; row t of R_ij holds the constant
/// m + t, where m exceeds every entry of the tableaux above it within the cone.
TableauDiagram canonical_filling(const RectDiagram& rd);

/// Random semistandard refill of each rectangle with entries drawn from
/// [m, m + rows - 1 + slack], m one more than the largest entry in its cone.
TableauDiagram random_filling(const RectDiagram& rd, Rng& rng, int slack = 2);

/// Entries of T_ij strictly exceed those of every T_kl with i <= k < l <= j, (k,l) != (i,j).
bool validate_filling(const TableauDiagram& td);

/// One tableau per path segment, left to right.
using Labels = std::vector<Tableau>;

struct FactorSequence {
    Path path;
    Labels labels;
    bool operator==(const FactorSequence&) const = default;
};

/// The set of factor sequences for gamma, built by the same lowering
/// recursion as compute_P.
std::set<Labels> enumerate_factor_sequences(const Path& gamma, const TableauDiagram& td,
                                            ReductionOrder order = ReductionOrder::Leftmost);

/// Membership test: at each Flat step the label is split by its canonical
/// factorization around T; at each peak the two labels are multiplied; the
/// lowest path accepts only empty labels.
bool is_factor_sequence(const FactorSequence& fs, const TableauDiagram& td);

/// Builds a factor sequence by raising the lowest path to gamma, choosing
/// each factorization at random.
FactorSequence sample_factor_sequence(const Path& gamma, const TableauDiagram& td, Rng& rng);
FactorSequence sample_factor_sequence(const Path& gamma, const TableauDiagram& td, std::uint64_t seed);

using Census = std::map<ShapeTuple, Coeff>;

/// Number of sequences for each tuple of label shapes.
Census shape_census(const std::set<Labels>& seqs);

}  // namespace quiver
