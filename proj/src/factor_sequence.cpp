#include "quiver/factor_sequence.hpp"

#include <algorithm>

#include "quiver/error.hpp"
#include "quiver/factorization.hpp"

namespace quiver {
namespace {

// Highest entry among the tableaux in the cone above (i,j); 0 when all are empty.
int cone_max(const TableauDiagram& td, int i, int j) {
    int m = 0;
    for (int k = i; k <= j; ++k)
        for (int l = k + 1; l <= j; ++l)
            if (k != i || l != j) m = std::max(m, td.at(k, l).body().max_entry());
    return m;
}

std::vector<Reduction> lowering_chain(const Path& gamma, ReductionOrder order) {
    std::vector<Reduction> chain;
    Path cur = gamma;
    while (auto red = find_reduction(cur, order)) {
        cur = red->lower;
        chain.push_back(std::move(*red));
    }
    return chain;
}

Labels splice(const Labels& labels, std::size_t pos, std::size_t width, std::initializer_list<Tableau> middle) {
    Labels out;
    out.reserve(labels.size() - width + middle.size());
    out.insert(out.end(), labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(pos));
    out.insert(out.end(), middle.begin(), middle.end());
    out.insert(out.end(), labels.begin() + static_cast<std::ptrdiff_t>(pos + width), labels.end());
    return out;
}

void check_inputs(const Path& gamma, const TableauDiagram& td) {
    if (gamma.n() != td.n()) throw InvalidPath("path and tableau diagram have different n");
}

}  // namespace

TableauDiagram::TableauDiagram(int n) : n_(n), fill_(n + 1, std::vector<RectTableau>(n + 1)) {
    if (n < 1) throw PreconditionError("tableau diagram needs n >= 1");
}

const RectTableau& TableauDiagram::at(int i, int j) const {
    if (i < 0 || i >= j || j > n_) throw PreconditionError("tableau index out of range");
    return fill_[i][j];
}

void TableauDiagram::set(int i, int j, RectTableau t) {
    if (i < 0 || i >= j || j > n_) throw PreconditionError("tableau index out of range");
    fill_[i][j] = std::move(t);
}

RectDiagram TableauDiagram::shape() const {
    RectDiagram rd(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j <= n_; ++j) rd.set(i, j, {fill_[i][j].rows(), fill_[i][j].cols()});
    return rd;
}

TableauDiagram canonical_filling(const RectDiagram& rd) {
    TableauDiagram td(rd.n());
    for (int d = 1; d <= rd.n(); ++d) {
        for (int i = 0; i + d <= rd.n(); ++i) {
            const int j = i + d;
            const auto [a, b] = rd.at(i, j);
            const int m = cone_max(td, i, j) + 1;
            std::vector<Row> rows;
            if (b > 0)
                for (int t = 0; t < a; ++t) rows.emplace_back(b, m + t);
            td.set(i, j, RectTableau(a, b, Tableau::trusted(std::move(rows))));
        }
    }
    return td;
}

TableauDiagram random_filling(const RectDiagram& rd, Rng& rng, int slack) {
    TableauDiagram td(rd.n());
    for (int d = 1; d <= rd.n(); ++d) {
        for (int i = 0; i + d <= rd.n(); ++i) {
            const int j = i + d;
            const auto [a, b] = rd.at(i, j);
            const int lo = cone_max(td, i, j) + 1;
            const int hi = lo + a - 1 + slack;
            std::vector<Row> rows;
            if (b > 0) {
                rows.assign(a, Row(b, 0));
                for (int r = 0; r < a; ++r) {
                    for (int c = 0; c < b; ++c) {
                        int v_lo = lo;
                        if (c > 0) v_lo = std::max(v_lo, rows[r][c - 1]);
                        if (r > 0) v_lo = std::max(v_lo, rows[r - 1][c] + 1);
                        rows[r][c] = rng.uniform(v_lo, hi - (a - 1 - r));
                    }
                }
            }
            td.set(i, j, RectTableau(a, b, Tableau::trusted(std::move(rows))));
        }
    }
    return td;
}

bool validate_filling(const TableauDiagram& td) {
    for (int i = 0; i < td.n(); ++i) {
        for (int j = i + 1; j <= td.n(); ++j) {
            const Tableau& body = td.at(i, j).body();
            if (!is_semistandard(body.rows())) return false;
            if (!body.empty() && body.min_entry() <= cone_max(td, i, j)) return false;
        }
    }
    return true;
}

std::set<Labels> enumerate_factor_sequences(const Path& gamma, const TableauDiagram& td, ReductionOrder order) {
    check_inputs(gamma, td);
    const auto chain = lowering_chain(gamma, order);
    const std::size_t base_len = chain.empty() ? gamma.length() : chain.back().lower.length();
    std::set<Labels> current{Labels(base_len)};
    std::map<Tableau, std::vector<TableauPair>> split_cache;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const Reduction& red = *it;
        const std::size_t k = red.position;
        std::set<Labels> next;
        if (red.kind == Reduction::Kind::Peak) {
            for (const Labels& labels : current) {
                auto cached = split_cache.find(labels[k]);
                if (cached == split_cache.end())
                    cached = split_cache.emplace(labels[k], all_factorizations(labels[k])).first;
                for (const auto& [p, q] : cached->second) next.insert(splice(labels, k, 1, {p, q}));
            }
        } else {
            const Tableau& t = td.at(red.i, red.j).body();
            for (const Labels& labels : current)
                next.insert(splice(labels, k, 2, {product(labels[k], product(t, labels[k + 1]))}));
        }
        current = std::move(next);
    }
    return current;
}

bool is_factor_sequence(const FactorSequence& fs, const TableauDiagram& td) {
    check_inputs(fs.path, td);
    if (fs.labels.size() != fs.path.length())
        throw ArityMismatch("factor sequence has " + std::to_string(fs.labels.size()) + " labels for a path of length " +
                            std::to_string(fs.path.length()));
    Path cur = fs.path;
    Labels labels = fs.labels;
    while (auto red = find_reduction(cur)) {
        const std::size_t k = red->position;
        if (red->kind == Reduction::Kind::Peak) {
            labels = splice(labels, k, 2, {product(labels[k], labels[k + 1])});
        } else {
            const RectTableau& t = td.at(red->i, red->j);
            if (!contains_rectangle(labels[k], t)) return false;
            auto [q, p] = canonical_factorization(labels[k], t);
            labels = splice(labels, k, 1, {q, p});
        }
        cur = red->lower;
    }
    return std::all_of(labels.begin(), labels.end(), [](const Tableau& t) { return t.empty(); });
}

FactorSequence sample_factor_sequence(const Path& gamma, const TableauDiagram& td, Rng& rng) {
    check_inputs(gamma, td);
    const auto chain = lowering_chain(gamma, ReductionOrder::Leftmost);
    Labels labels(chain.empty() ? gamma.length() : chain.back().lower.length());
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const std::size_t k = it->position;
        if (it->kind == Reduction::Kind::Peak) {
            auto [p, q] = sample_factorization(labels[k], rng);
            labels = splice(labels, k, 1, {p, q});
        } else {
            const Tableau& t = td.at(it->i, it->j).body();
            labels = splice(labels, k, 2, {product(labels[k], product(t, labels[k + 1]))});
        }
    }
    return {gamma, std::move(labels)};
}

FactorSequence sample_factor_sequence(const Path& gamma, const TableauDiagram& td, std::uint64_t seed) {
    Rng rng(seed);
    return sample_factor_sequence(gamma, td, rng);
}

Census shape_census(const std::set<Labels>& seqs) {
    Census out;
    for (const Labels& labels : seqs) {
        ShapeTuple shapes;
        shapes.reserve(labels.size());
        for (const auto& t : labels) shapes.push_back(t.shape());
        ++out[shapes];
    }
    return out;
}

}  // namespace quiver
