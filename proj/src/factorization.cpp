#include "quiver/factorization.hpp"

#include <algorithm>

#include "quiver/error.hpp"

namespace quiver {
namespace {

// Depth-first search over reverse row bumps. Undoing the insertion of q's
// reading word into p ejects q's rows top row first, each right to left, so a
// strict ascent between consecutive ejected letters marks a row break of q.
class FactorWalk {
public:
    explicit FactorWalk(const Tableau& w) : t_(w) {}

    template <typename Visit>
    bool run(Visit& visit) {
        Tableau q;
        if (candidate(q) && !visit(t_, q)) return false;
        for (std::size_t r : t_.corners()) {
            const Tableau saved_t = t_;
            const auto saved_done = done_;
            const Row saved_cur = cur_rev_;
            const int x = t_.reverse_bump(r);
            bool keep = true;
            if (push_letter(x)) keep = run(visit);
            t_ = saved_t;
            done_ = saved_done;
            cur_rev_ = saved_cur;
            if (!keep) return false;
        }
        return true;
    }

    /// Randomized variant: explores options in random order and stops at the first result.
    bool random_descent(Rng& rng, TableauPair& out) {
        std::vector<std::ptrdiff_t> options{-1};
        for (std::size_t r : t_.corners()) options.push_back(static_cast<std::ptrdiff_t>(r));
        rng.shuffle(options);
        for (auto opt : options) {
            if (opt < 0) {
                Tableau q;
                if (candidate(q)) {
                    out = {t_, q};
                    return true;
                }
                continue;
            }
            const Tableau saved_t = t_;
            const auto saved_done = done_;
            const Row saved_cur = cur_rev_;
            const int x = t_.reverse_bump(static_cast<std::size_t>(opt));
            if (push_letter(x) && random_descent(rng, out)) return true;
            t_ = saved_t;
            done_ = saved_done;
            cur_rev_ = saved_cur;
        }
        return false;
    }

private:
    bool row_fits(const Row& row) const {
        if (done_.empty()) return true;
        const Row& above = done_.back();
        if (row.size() > above.size()) return false;
        for (std::size_t c = 0; c < row.size(); ++c)
            if (above[c] >= row[c]) return false;
        return true;
    }

    bool push_letter(int x) {
        if (cur_rev_.empty() || x <= cur_rev_.back()) {
            cur_rev_.push_back(x);
            return done_.empty() || cur_rev_.size() <= done_.back().size();
        }
        Row row(cur_rev_.rbegin(), cur_rev_.rend());
        if (!row_fits(row)) return false;
        done_.push_back(std::move(row));
        cur_rev_.assign(1, x);
        return true;
    }

    bool candidate(Tableau& q) const {
        if (cur_rev_.empty()) {
            q = Tableau::trusted(done_);
            return true;
        }
        Row row(cur_rev_.rbegin(), cur_rev_.rend());
        if (!row_fits(row)) return false;
        auto rows = done_;
        rows.push_back(std::move(row));
        q = Tableau::trusted(std::move(rows));
        return true;
    }

    Tableau t_;
    std::vector<Row> done_;
    Row cur_rev_;
};

}  // namespace

bool for_each_factorization(const Tableau& w, const std::function<bool(const Tableau&, const Tableau&)>& visit) {
    FactorWalk walk(w);
    return walk.run(visit);
}

std::vector<TableauPair> all_factorizations(const Tableau& w) {
    std::vector<TableauPair> out;
    for_each_factorization(w, [&](const Tableau& p, const Tableau& q) {
        out.emplace_back(p, q);
        return true;
    });
    return out;
}

std::set<TableauPair> factorizations(const Tableau& w, const Partition& sigma, const Partition& tau) {
    std::set<TableauPair> out;
    if (sigma.weight() + tau.weight() != w.size()) return out;
    for_each_factorization(w, [&](const Tableau& p, const Tableau& q) {
        if (p.shape() == sigma && q.shape() == tau) out.emplace(p, q);
        return true;
    });
    return out;
}

TableauPair sample_factorization(const Tableau& w, Rng& rng, std::size_t cap) {
    std::vector<TableauPair> found;
    const bool complete = for_each_factorization(w, [&](const Tableau& p, const Tableau& q) {
        found.emplace_back(p, q);
        return found.size() <= cap;
    });
    if (complete) return found[rng.below(found.size())];
    FactorWalk walk(w);
    TableauPair out;
    walk.random_descent(rng, out);  // always succeeds: (w, empty) is a factorization
    return out;
}

std::set<TableauPair> simple_factorizations(const Tableau& w, const RectTableau& t) {
    if (!contains_rectangle(w, t))
        throw RectangleNotContained("tableau " + w.to_string() + " does not contain the rectangle in its corner");
    const auto a = static_cast<std::size_t>(t.rows());
    const auto b = static_cast<std::size_t>(t.cols());
    auto [below, top] = horizontal_cut(w, a);
    auto [q0, z] = vertical_cut(below, b);
    const Tableau p0 = vertical_cut(top, b).second;
    std::set<TableauPair> out;
    for_each_factorization(z, [&](const Tableau& zq, const Tableau& zp) {
        out.emplace(product(q0, zq), product(zp, p0));
        return true;
    });
    return out;
}

std::set<TableauPair> models_pairs(const Tableau& x, const Tableau& y, const RectTableau& t) {
    const int floor = t.body().max_entry();
    if ((!x.empty() && x.min_entry() <= floor) || (!y.empty() && y.min_entry() <= floor))
        throw PreconditionError("entries of x and y must exceed every entry of the rectangle");
    std::set<TableauPair> out;
    auto [x0, xr] = vertical_cut(x, static_cast<std::size_t>(t.cols()));
    for_each_factorization(xr, [&](const Tableau& m, const Tableau& n) {
        out.emplace(product(x0, m), product(n, y));
        return true;
    });
    auto [yb, y0] = horizontal_cut(y, static_cast<std::size_t>(t.rows()));
    for_each_factorization(yb, [&](const Tableau& m, const Tableau& n) {
        out.emplace(product(x, m), product(n, y0));
        return true;
    });
    return out;
}

}  // namespace quiver
