#include "quiver/fomin.hpp"

#include <algorithm>

#include "quiver/error.hpp"

namespace quiver {
namespace {

bool has_violation_below(const Row& top, const Row& bottom) {
    for (std::size_t c = 0; c < bottom.size(); ++c)
        if (c >= top.size() || top[c] >= bottom[c]) return true;
    return false;
}

void check_entries_above(const RectTableau& t, const Tableau& x, const Tableau& y) {
    const int floor = t.body().max_entry();
    if ((!x.empty() && x.min_entry() <= floor) || (!y.empty() && y.min_entry() <= floor))
        throw PreconditionError("entries of x and y must exceed every entry of the rectangle");
    if (static_cast<int>(y.row_count()) > t.rows())
        throw PreconditionError("y has more rows than the rectangle");
}

}  // namespace

IntSeq WeakRowDiagram::row_lengths() const {
    IntSeq out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(static_cast<int>(row.size()));
    return out;
}

std::ostream& operator<<(std::ostream& os, const WeakRowDiagram& d) {
    os << '[';
    for (std::size_t r = 0; r < d.rows.size(); ++r) {
        os << (r ? "," : "") << '[';
        for (std::size_t c = 0; c < d.rows[r].size(); ++c) os << (c ? "," : "") << d.rows[r][c];
        os << ']';
    }
    return os << ']';
}

bool violation_less(const Violation& x, const Violation& y) {
    const int dx = x.col - x.row, dy = y.col - y.row;
    return dx != dy ? dx < dy : x.row < y.row;
}

std::vector<Violation> violations(const WeakRowDiagram& d) {
    std::vector<Violation> out;
    for (std::size_t r = 1; r < d.rows.size(); ++r) {
        const Row& above = d.rows[r - 1];
        const Row& row = d.rows[r];
        for (std::size_t c = 0; c < row.size(); ++c)
            if (c >= above.size() || above[c] >= row[c])
                out.push_back({static_cast<int>(r) + 1, static_cast<int>(c) + 1});
    }
    std::sort(out.begin(), out.end(), violation_less);
    return out;
}

Tableau rect_of(const WeakRowDiagram& d) {
    Tableau out;
    for (auto it = d.rows.rbegin(); it != d.rows.rend(); ++it)
        for (int x : *it) out.row_insert(x);
    return out;
}

SignedSchur s_of(const WeakRowDiagram& d) { return straighten(d.row_lengths()); }

std::pair<Row, Row> two_row_exchange(const Row& top, const Row& bottom) {
    if (!std::is_sorted(top.begin(), top.end()) || !std::is_sorted(bottom.begin(), bottom.end()))
        throw PreconditionError("rows must be weakly increasing");
    if (!has_violation_below(top, bottom)) throw PreconditionError("no violation in the second row");

    Tableau r = product(Tableau::from_row(bottom), Tableau::from_row(top));
    const std::size_t q = bottom.size();
    const std::size_t second = r.row_count() > 1 ? r.rows()[1].size() : 0;
    // Bump out a horizontal strip of q-1 boxes containing the whole second row, right to left.
    Row removed;
    removed.reserve(q - 1);
    for (std::size_t k = 0; k + 1 + second < q; ++k) removed.push_back(r.reverse_bump(0));
    for (std::size_t k = 0; k < second; ++k) removed.push_back(r.reverse_bump(1));
    std::reverse(removed.begin(), removed.end());
    Row new_bottom = r.empty() ? Row{} : r.rows()[0];
    return {std::move(removed), std::move(new_bottom)};
}

void exchange_rows(WeakRowDiagram& d, int upper) {
    if (upper < 1 || upper >= static_cast<int>(d.rows.size())) throw PreconditionError("exchange rows out of range");
    auto [top, bottom] = two_row_exchange(d.rows[upper - 1], d.rows[upper]);
    d.rows[upper - 1] = std::move(top);
    d.rows[upper] = std::move(bottom);
}

WeakRowDiagram stack_pair(const Tableau& q, const Tableau& p, int a) {
    WeakRowDiagram d;
    d.rows = p.rows();
    d.rows.resize(std::max<std::size_t>(static_cast<std::size_t>(a), d.rows.size()));
    d.rows.insert(d.rows.end(), q.rows().begin(), q.rows().end());
    return d;
}

void check_in_domain(const Tableau& q, const Tableau& p, int a) {
    if (a < 0) throw NotInDomain("a must be nonnegative");
    if (static_cast<int>(p.row_count()) > a) throw NotInDomain("p has more than a rows");
    const WeakRowDiagram d = stack_pair(q, p, a);
    if (s_of(d).is_zero()) throw NotInDomain("S vanishes");
    if (violations(d).empty()) throw NotInDomain("p and q fit together as a tableau");
}

FominResult fomin_involution(const Tableau& q, const Tableau& p, int a) {
    check_in_domain(q, p, a);
    FominResult out;
    WeakRowDiagram d = stack_pair(q, p, a);
    exchange_rows(d, a);
    out.trace.push_back(d);
    long exchanges = 1;
    for (;;) {
        const auto vs = violations(d);
        auto outside = std::find_if(vs.begin(), vs.end(), [&](const Violation& v) { return v.row != a + 1; });
        if (outside == vs.end()) break;
        exchanges += 2;
        if (exchanges > kExchangeCap) throw LoopCapExceeded("involution exceeded the exchange-operation cap");
        exchange_rows(d, outside->row - 1);
        out.trace.push_back(d);
        exchange_rows(d, a);
        out.trace.push_back(d);
    }
    std::vector<Row> top(d.rows.begin(), d.rows.begin() + a);
    std::vector<Row> rest(d.rows.begin() + a, d.rows.end());
    out.p = Tableau(std::move(top));
    out.q = Tableau(std::move(rest));
    return out;
}

SignedSchur attach_S(const RectTableau& t, const Tableau& x, const Tableau& y) {
    check_entries_above(t, x, y);
    IntSeq seq;
    for (int k = 0; k < t.rows(); ++k)
        seq.push_back(t.cols() + (static_cast<std::size_t>(k) < y.row_count() ? static_cast<int>(y.rows()[k].size()) : 0));
    for (const auto& row : x.rows()) seq.push_back(static_cast<int>(row.size()));
    return straighten(seq);
}

std::pair<Tableau, Tableau> involute_around_rect(const RectTableau& t, const Tableau& x, const Tableau& y) {
    check_entries_above(t, x, y);
    if (fits_around(x, y, t)) throw PreconditionError("(x, y) fits around the rectangle");
    if (attach_S(t, x, y).is_zero()) throw PreconditionError("S(T; x, y) vanishes");
    auto [x0, xr] = vertical_cut(x, static_cast<std::size_t>(t.cols()));
    FominResult res = fomin_involution(xr, y, t.rows());
    return {product(x0, res.q), std::move(res.p)};
}

}  // namespace quiver
