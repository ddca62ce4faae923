#include "quiver/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "quiver/error.hpp"

namespace quiver {

bool is_semistandard(const std::vector<Row>& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) return false;
        if (!std::is_sorted(rows[r].begin(), rows[r].end())) return false;
        if (rows[r].front() < 1) return false;
        if (r > 0) {
            if (rows[r].size() > rows[r - 1].size()) return false;
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                if (rows[r - 1][c] >= rows[r][c]) return false;
        }
    }
    return true;
}

Tableau::Tableau(std::initializer_list<Row> rows) : Tableau(std::vector<Row>(rows)) {}

Tableau::Tableau(std::vector<Row> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    if (!is_semistandard(rows_)) {
        rows_.clear();
        throw PreconditionError("not a semistandard tableau");
    }
}

Tableau Tableau::from_row(Row row) {
    if (row.empty()) return {};
    return Tableau(std::vector<Row>{std::move(row)});
}

int Tableau::size() const noexcept {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

int Tableau::max_entry() const noexcept {
    int m = 0;
    for (const auto& row : rows_) m = std::max(m, row.back());
    return m;
}

int Tableau::min_entry() const noexcept { return rows_.empty() ? 0 : rows_[0][0]; }

std::vector<int> Tableau::content() const {
    std::vector<int> out;
    for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> out;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
    return out;
}

void Tableau::row_insert(int x) {
    for (auto& row : rows_) {
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return;
        }
        std::swap(*it, x);
    }
    rows_.push_back(Row{x});
}

int Tableau::reverse_bump(std::size_t r) {
    int y = rows_[r].back();
    rows_[r].pop_back();
    if (rows_[r].empty()) rows_.pop_back();
    for (std::size_t k = r; k-- > 0;) {
        auto& row = rows_[k];
        // rightmost entry strictly smaller than y
        auto it = std::lower_bound(row.begin(), row.end(), y);
        --it;
        std::swap(*it, y);
    }
    return y;
}

std::vector<std::size_t> Tableau::corners() const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (r + 1 == rows_.size() || rows_[r + 1].size() < rows_[r].size()) out.push_back(r);
    return out;
}

std::string Tableau::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Tableau& t) {
    os << '[';
    for (std::size_t r = 0; r < t.row_count(); ++r) {
        os << (r ? "," : "") << '[';
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c) os << (c ? "," : "") << t.rows()[r][c];
        os << ']';
    }
    return os << ']';
}

Tableau product(const Tableau& t, const Tableau& u) {
    Tableau out = t;
    for (auto it = u.rows().rbegin(); it != u.rows().rend(); ++it)
        for (int x : *it) out.row_insert(x);
    return out;
}

std::pair<Tableau, Tableau> horizontal_cut(const Tableau& t, std::size_t a) {
    const auto& rows = t.rows();
    const auto split = std::min(a, rows.size());
    std::vector<Row> top(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(split));
    std::vector<Row> bottom(rows.begin() + static_cast<std::ptrdiff_t>(split), rows.end());
    return {Tableau::trusted(std::move(bottom)), Tableau::trusted(std::move(top))};
}

std::pair<Tableau, Tableau> vertical_cut(const Tableau& t, std::size_t b) {
    std::vector<Row> left, right;
    for (const auto& row : t.rows()) {
        const auto split = std::min(b, row.size());
        if (split > 0) left.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(split));
        if (split < row.size()) right.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(split), row.end());
    }
    return {Tableau::trusted(std::move(left)), Tableau::trusted(std::move(right))};
}

RectTableau::RectTableau(int a, int b, Tableau body) : a_(a), b_(b), body_(std::move(body)) {
    if (a < 0 || b < 0) throw PreconditionError("rectangle dimensions must be nonnegative");
    const bool degenerate = a == 0 || b == 0;
    bool ok = degenerate ? body_.empty() : body_.row_count() == static_cast<std::size_t>(a);
    if (ok && !degenerate)
        for (const auto& row : body_.rows()) ok = ok && row.size() == static_cast<std::size_t>(b);
    if (!ok) throw PreconditionError("rectangular tableau body does not have shape (b)^a");
}

bool contains_rectangle(const Tableau& w, const RectTableau& t) {
    const auto a = static_cast<std::size_t>(t.rows());
    const auto b = static_cast<std::size_t>(t.cols());
    if (a == 0 || b == 0) return true;
    if (w.row_count() < a) return false;
    for (std::size_t r = 0; r < a; ++r) {
        const auto& row = w.rows()[r];
        if (row.size() < b) return false;
        if (!std::equal(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(b), t.body().rows()[r].begin()))
            return false;
    }
    return true;
}

std::pair<Tableau, Tableau> canonical_factorization(const Tableau& w, const RectTableau& t) {
    if (!contains_rectangle(w, t))
        throw RectangleNotContained("tableau " + w.to_string() + " does not contain the rectangle in its corner");
    auto [below, top] = horizontal_cut(w, static_cast<std::size_t>(t.rows()));
    auto [left, right] = vertical_cut(top, static_cast<std::size_t>(t.cols()));
    return {std::move(below), std::move(right)};
}

bool fits_around(const Tableau& q, const Tableau& p, const RectTableau& t) {
    const auto a = static_cast<std::size_t>(t.rows());
    const auto b = static_cast<std::size_t>(t.cols());
    if (p.row_count() > a) return false;
    std::vector<Row> rows;
    for (std::size_t r = 0; r < a; ++r) {
        Row row = b > 0 ? t.body().rows()[r] : Row{};
        if (r < p.row_count()) row.insert(row.end(), p.rows()[r].begin(), p.rows()[r].end());
        rows.push_back(std::move(row));
    }
    rows.insert(rows.end(), q.rows().begin(), q.rows().end());
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return is_semistandard(rows);
}

}  // namespace quiver
