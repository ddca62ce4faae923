#pragma once

#include <compare>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "quiver/partition.hpp"

namespace quiver {

using Row = std::vector<int>;

/// Semistandard Young tableau in English convention (row 0 on top).
/// Rows are weakly increasing, columns strictly increasing, no empty rows.
class Tableau {
public:
    Tableau() = default;
    Tableau(std::initializer_list<Row> rows);
    /// Validates; throws PreconditionError on a non-semistandard filling.
    /// Trailing empty rows are dropped.
    explicit Tableau(std::vector<Row> rows);

    /// Single-row tableau; `row` must be weakly increasing.
    static Tableau from_row(Row row);

    const std::vector<Row>& rows() const noexcept { return rows_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    std::size_t width() const noexcept { return rows_.empty() ? 0 : rows_[0].size(); }
    bool empty() const noexcept { return rows_.empty(); }
    int size() const noexcept;
    Partition shape() const;
    int max_entry() const noexcept;
    int min_entry() const noexcept;
    /// Sorted multiset of entries.
    std::vector<int> content() const;
    /// Row reading word: rows bottom to top, each left to right.
    std::vector<int> reading_word() const;

    /// Schensted row insertion of one letter.
    void row_insert(int x);
    /// Removes the box at the end of `row` (which must be a corner) by reverse
    /// row bumping and returns the letter ejected from the top row.
    int reverse_bump(std::size_t row);
    /// Rows whose last box is an outer corner.
    std::vector<std::size_t> corners() const;

    std::string to_string() const;

    auto operator<=>(const Tableau&) const = default;
    bool operator==(const Tableau&) const = default;

    /// Skips validation; for rows already known to be semistandard.
    static Tableau trusted(std::vector<Row> rows) {
        Tableau t;
        t.rows_ = std::move(rows);
        return t;
    }

private:
    std::vector<Row> rows_;
};

std::ostream& operator<<(std::ostream& os, const Tableau& t);

/// True iff `rows` (no empty rows in the middle) is a semistandard tableau.
bool is_semistandard(const std::vector<Row>& rows);

/// Plactic product t * u: row-inserts u's reading word into t.
Tableau product(const Tableau& t, const Tableau& u);

/// Horizontal cut after row a: returns (bottom, top) with product(bottom, top) == t.
std::pair<Tableau, Tableau> horizontal_cut(const Tableau& t, std::size_t a);

/// Vertical cut after column b: returns (left, right) with product(left, right) == t.
std::pair<Tableau, Tableau> vertical_cut(const Tableau& t, std::size_t b);

/// A tableau of rectangular shape (b)^a. The dimensions are kept even when the
/// body is empty, because a still matters when b == 0.
class RectTableau {
public:
    RectTableau() = default;
    /// Throws PreconditionError unless body has shape (b)^a (empty when a or b is zero).
    RectTableau(int a, int b, Tableau body);
    static RectTableau empty(int a, int b) { return RectTableau(a, b, Tableau{}); }

    int rows() const noexcept { return a_; }
    int cols() const noexcept { return b_; }
    const Tableau& body() const noexcept { return body_; }

    bool operator==(const RectTableau&) const = default;

private:
    int a_ = 0;
    int b_ = 0;
    Tableau body_;
};

/// True iff rows 0..a-1, columns 0..b-1 of w exist and equal t's body.
bool contains_rectangle(const Tableau& w, const RectTableau& t);

/// Canonical factorization w = q * t * p around the rectangle: q is everything
/// below row a, p the part of the top a rows right of column b.
std::pair<Tableau, Tableau> canonical_factorization(const Tableau& w, const RectTableau& t);

/// True iff t's body with p attached on its right in rows 1..a, and q below, is a tableau.
bool fits_around(const Tableau& q, const Tableau& p, const RectTableau& t);

}  // namespace quiver
