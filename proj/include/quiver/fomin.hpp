#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "quiver/partition.hpp"
#include "quiver/tableau.hpp"

namespace quiver {

/// Rows of weakly increasing positive integers, top row first. Rows may be
/// empty and there is no shape constraint.
struct WeakRowDiagram {
    std::vector<Row> rows;

    IntSeq row_lengths() const;
    bool operator==(const WeakRowDiagram&) const = default;
};

std::ostream& operator<<(std::ostream& os, const WeakRowDiagram& d);

/// A box in row >= 2 with no box directly above, or whose upper neighbour is
/// not strictly smaller. Rows and columns are 1-based.
struct Violation {
    int row;
    int col;
    bool operator==(const Violation&) const = default;
};

/// (row, col) < (row', col') iff col-row < col'-row', or equal and row < row'.
bool violation_less(const Violation& x, const Violation& y);

/// All violations, ascending in the order above.
std::vector<Violation> violations(const WeakRowDiagram& d);

/// Product of the rows from bottom to top.
Tableau rect_of(const WeakRowDiagram& d);

/// s_I for the row lengths I, top to bottom.
SignedSchur s_of(const WeakRowDiagram& d);

/// The unique two-row diagram with the same rect and opposite S. Requires a
/// violation in the bottom row; rows of lengths (p, q) become (q-1, p+1).
std::pair<Row, Row> two_row_exchange(const Row& top, const Row& bottom);

/// Exchange operation between rows `upper` and `upper + 1` (1-based) in place.
void exchange_rows(WeakRowDiagram& d, int upper);

/// The diagram with p in rows 1..a (padded with empty rows) and q below.
WeakRowDiagram stack_pair(const Tableau& q, const Tableau& p, int a);

struct FominResult {
    Tableau q;
    Tableau p;
    /// Diagram after each exchange operation, in order.
    std::vector<WeakRowDiagram> trace;
};

inline constexpr long kExchangeCap = 1'000'000;

/// Throws NotInDomain naming the failed condition when (q, p) is not in P_a:
/// p must have at most a rows, S(p/q) must be nonzero, and p over q must not
/// already be a tableau.
void check_in_domain(const Tableau& q, const Tableau& p, int a);

/// Fomin's sign-reversing involution on P_a. Preserves q * p, negates S(p/q)
/// and keeps the first column of q.
FominResult fomin_involution(const Tableau& q, const Tableau& p, int a);

/// S of the diagram with t * y in the top a rows and x below:
/// straighten(b + y_1, ..., b + y_a, x_1, x_2, ...).
SignedSchur attach_S(const RectTableau& t, const Tableau& x, const Tableau& y);

/// The involution around a rectangle: with x = x0 * xr the vertical cut after
/// column b, applies the involution to (xr, y) and returns (x0 * xr', y').
std::pair<Tableau, Tableau> involute_around_rect(const RectTableau& t, const Tableau& x, const Tableau& y);

}  // namespace quiver
