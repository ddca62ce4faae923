#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quiver/factor_sequence.hpp"
#include "quiver/littlewood_richardson.hpp"
#include "quiver/p_gamma.hpp"
#include "quiver/schur_poly.hpp"
#include "quiver/verifier.hpp"

namespace support {

using namespace quiver;

namespace {

template <typename T>
std::string str(const T& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::string seq_str(std::span<const int> s) {
    std::string out = "(";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
    return out + ")";
}

std::vector<int> content_of(const Row& a, const Row& b) {
    Row all = a;
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    return all;
}

// All weakly increasing rows of the given length over [1, alphabet].
void rows_of_length(int len, int alphabet, std::vector<Row>& out) {
    Row row(len, 1);
    auto rec = [&](auto& self, int pos, int lo) -> void {
        if (pos == len) {
            out.push_back(row);
            return;
        }
        for (int v = lo; v <= alphabet; ++v) {
            row[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 1);
}

bool has_bottom_violation(const Row& top, const Row& bottom) {
    return !violations(WeakRowDiagram{{top, bottom}}).empty();
}

void all_paths_rec(int n, int i, int j, std::vector<Step>& steps, std::vector<Path>& out) {
    if (i == n && j == n) {
        out.emplace_back(n, steps);
        return;
    }
    if (j < n) {
        steps.push_back(Step::Down);
        all_paths_rec(n, i, j + 1, steps, out);
        steps.pop_back();
    }
    if (i < j) {
        steps.push_back(Step::Up);
        all_paths_rec(n, i + 1, j, steps, out);
        steps.pop_back();
    }
    if (j < n) {
        steps.push_back(Step::Flat);
        all_paths_rec(n, i + 1, j + 1, steps, out);
        steps.pop_back();
    }
}

Labels replace_flat(const Labels& labels, std::size_t k, const Tableau& q, const Tableau& p) {
    Labels out(labels.begin(), labels.begin() + k);
    out.push_back(q);
    out.push_back(p);
    out.insert(out.end(), labels.begin() + k + 1, labels.end());
    return out;
}

Path open_flat(const Path& gamma, std::size_t k) {
    std::vector<Step> steps(gamma.steps().begin(), gamma.steps().begin() + k);
    steps.push_back(Step::Down);
    steps.push_back(Step::Up);
    steps.insert(steps.end(), gamma.steps().begin() + k + 1, gamma.steps().end());
    return Path(gamma.n(), steps);
}

}  // namespace

std::vector<Tableau> all_tableaux(const Partition& shape, int max_entry) {
    std::vector<Tableau> out;
    for_each_ssyt(shape, max_entry, [&](const std::vector<std::vector<int>>& rows) { out.push_back(Tableau::trusted(rows)); });
    return out;
}

std::vector<Tableau> all_tableaux_up_to(int max_boxes, int max_entry) {
    std::vector<Tableau> out;
    for (const auto& shape : partitions_up_to(max_boxes)) {
        auto part = all_tableaux(shape, max_entry);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Tableau random_tableau(Rng& rng, int max_boxes, int max_entry, int max_rows) {
    const int boxes = rng.uniform(0, max_boxes);
    Tableau t;
    for (int k = 0; k < boxes; ++k) t.row_insert(rng.uniform(1, max_entry));
    return horizontal_cut(t, static_cast<std::size_t>(max_rows)).second;
}

std::vector<Path> all_paths(int n) {
    std::vector<Path> out;
    std::vector<Step> steps;
    all_paths_rec(n, 0, 0, steps, out);
    return out;
}

std::vector<RectDiagram> all_rect_diagrams(int n, int max_dim) {
    std::vector<std::pair<int, int>> cells;
    for (int d = 1; d <= n; ++d)
        for (int i = 0; i + d <= n; ++i) cells.emplace_back(i, i + d);
    std::vector<RectDiagram> out;
    RectDiagram rd(n);
    auto rec = [&](auto& self, std::size_t k) -> void {
        if (k == cells.size()) {
            if (rd.is_valid()) out.push_back(rd);
            return;
        }
        for (int r = 0; r <= max_dim; ++r)
            for (int c = 0; c <= max_dim; ++c) {
                rd.set(cells[k].first, cells[k].second, {r, c});
                self(self, k + 1);
            }
    };
    rec(rec, 0);
    return out;
}

std::vector<RectDiagram> rank_derived_diagrams(int n, int max_rank) {
    std::set<RectDiagram> seen;
    for_each_rank_conditions(n, max_rank, [&](const RankConditions& rc) { seen.insert(rect_diagram_of(rc)); });
    return {seen.begin(), seen.end()};
}

Row first_column(const Tableau& t) {
    Row col;
    for (const auto& row : t.rows()) col.push_back(row.front());
    return col;
}

HPoly jacobi_trudi(std::span<const int> seq) {
    const std::size_t len = seq.size();
    HPoly out;
    std::vector<std::size_t> perm(len);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sign = 1;
        for (std::size_t x = 0; x < len; ++x)
            for (std::size_t y = x + 1; y < len; ++y)
                if (perm[x] > perm[y]) sign = -sign;
        std::vector<int> exps(32, 0);
        bool zero = false;
        for (std::size_t k = 0; k < len && !zero; ++k) {
            const int m = seq[k] + static_cast<int>(perm[k]) - static_cast<int>(k);
            if (m < 0) zero = true;
            else if (m > 0) ++exps.at(m);
        }
        if (zero) continue;
        if ((out[exps] += sign) == 0) out.erase(exps);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Coeff standard_count(const Partition& shape) {
    // n! / prod(hooks), computed with exact division step by step.
    const int n = shape.weight();
    std::vector<int> hooks;
    for (std::size_t r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape[r]; ++c) {
            int below = 0;
            for (std::size_t rr = r + 1; rr < shape.length() && shape[rr] > c; ++rr) ++below;
            hooks.push_back(shape[r] - c - 1 + below + 1);
        }
    Coeff num = 1;
    for (int k = 2; k <= n; ++k) num *= k;
    Coeff den = 1;
    for (int h : hooks) den *= h;
    return num / den;
}

std::set<TableauPair> brute_factorizations(const Tableau& w, const Partition& sigma, const Partition& tau) {
    std::set<TableauPair> out;
    if (sigma.weight() + tau.weight() != w.size()) return out;
    const int top = w.empty() ? 1 : w.max_entry();
    const auto target = w.content();
    std::map<std::vector<int>, std::vector<Tableau>> ps_by_content;
    for (auto& p : all_tableaux(sigma, top)) ps_by_content[p.content()].push_back(p);
    for (const auto& q : all_tableaux(tau, top)) {
        std::vector<int> rest;
        const auto qc = q.content();
        if (!std::includes(target.begin(), target.end(), qc.begin(), qc.end())) continue;
        std::set_difference(target.begin(), target.end(), qc.begin(), qc.end(), std::back_inserter(rest));
        auto it = ps_by_content.find(rest);
        if (it == ps_by_content.end()) continue;
        for (const auto& p : it->second)
            if (product(p, q) == w) out.insert({p, q});
    }
    return out;
}

std::vector<std::pair<Row, Row>> two_row_partners(const Row& top, const Row& bottom) {
    const auto content = content_of(top, bottom);
    const Tableau target = rect_of(WeakRowDiagram{{top, bottom}});
    const std::size_t new_top = bottom.size() - 1;
    std::vector<std::pair<Row, Row>> out;
    // Choose new_top positions of the sorted content, skipping repeated choices of equal letters.
    Row chosen, rest;
    auto rec = [&](auto& self, std::size_t pos) -> void {
        if (chosen.size() == new_top) {
            Row b = rest;
            b.insert(b.end(), content.begin() + pos, content.end());
            if (rect_of(WeakRowDiagram{{chosen, b}}) == target) out.emplace_back(chosen, b);
            return;
        }
        if (pos == content.size()) return;
        // take content[pos]
        chosen.push_back(content[pos]);
        self(self, pos + 1);
        chosen.pop_back();
        // skip every copy of this letter
        std::size_t next = pos;
        const std::size_t rest_size = rest.size();
        while (next < content.size() && content[next] == content[pos]) rest.push_back(content[next++]);
        self(self, next);
        rest.resize(rest_size);
    };
    // Enumerate multisets by "take one more copy or move past the letter".
    rec(rec, 0);
    return out;
}

SuiteResult straighten_vs_jacobi_trudi(int max_len, int max_entry) {
    SuiteResult r;
    for (int len = 0; len <= max_len; ++len) {
        std::vector<int> seq(len, 0);
        auto rec = [&](auto& self, int pos) -> void {
            if (pos == len) {
                ++r.checks;
                const SignedSchur s = straighten(seq);
                const HPoly det = jacobi_trudi(seq);
                if (s.is_zero()) {
                    if (!det.empty()) r.fail("straighten" + seq_str(seq) + " is zero but the determinant is not");
                    return;
                }
                HPoly expected = jacobi_trudi(s.shape.parts());
                for (auto& [k, c] : expected) c *= s.sign;
                if (det != expected) r.fail("straighten" + seq_str(seq) + " = " + str(s) + " disagrees with the determinant");
                return;
            }
            for (int v = 0; v <= max_entry; ++v) {
                seq[pos] = v;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
    }
    return r;
}

SuiteResult lr_vs_schur_products(int max_weight, int variables) {
    SuiteResult r;
    std::map<Partition, Polynomial> cache;
    auto s = [&](const Partition& p) -> const Polynomial& {
        auto it = cache.find(p);
        if (it == cache.end()) it = cache.emplace(p, schur_eval(p, variables)).first;
        return it->second;
    };
    const auto parts = partitions_up_to(max_weight);
    for (const auto& sigma : parts)
        for (const auto& tau : parts) {
            ++r.checks;
            Polynomial rhs(variables);
            for (const auto& mu : partitions_of(sigma.weight() + tau.weight())) {
                const Coeff c = lr_coeff(sigma, tau, mu);
                if (c != lr_coeff(tau, sigma, mu))
                    r.fail("lr_coeff not symmetric at " + str(sigma) + "," + str(tau) + "," + str(mu));
                if (c != 0) rhs += s(mu).scaled(c);
            }
            if (!(s(sigma) * s(tau) == rhs)) r.fail("s" + str(sigma) + " * s" + str(tau) + " disagrees with lr_coeff");
        }
    return r;
}

SuiteResult lr_vs_standard_counts(int max_weight) {
    SuiteResult r;
    const auto parts = partitions_up_to(max_weight);
    for (const auto& sigma : parts)
        for (const auto& tau : parts) {
            ++r.checks;
            const int a = sigma.weight(), b = tau.weight();
            Coeff lhs = 0;
            for (const auto& mu : partitions_of(a + b)) lhs += lr_coeff(sigma, tau, mu) * standard_count(mu);
            Coeff binom = 1;
            for (int k = 1; k <= a; ++k) binom = binom * (b + k) / k;
            if (lhs != binom * standard_count(sigma) * standard_count(tau))
                r.fail("standard tableau count identity fails for " + str(sigma) + "," + str(tau));
        }
    return r;
}

SuiteResult factorization_count_vs_lr(int max_boxes, int max_entry) {
    SuiteResult r;
    std::map<Partition, Coproduct> coproducts;
    for (const auto& w : all_tableaux_up_to(max_boxes, max_entry)) {
        ++r.checks;
        const Partition mu = w.shape();
        auto it = coproducts.find(mu);
        if (it == coproducts.end()) it = coproducts.emplace(mu, coproduct(mu)).first;
        Coproduct counted;
        std::set<TableauPair> seen;
        for (const auto& [p, q] : all_factorizations(w)) {
            if (product(p, q) != w) r.fail("factorization of " + str(w) + " does not recompose");
            if (!seen.insert({p, q}).second) r.fail("duplicate factorization of " + str(w));
            ++counted[{p.shape(), q.shape()}];
        }
        if (counted != it->second) r.fail("factorization counts of " + str(w) + " disagree with lr_coeff");
    }
    return r;
}

SuiteResult factorizations_vs_brute_force(int max_boxes, int max_entry) {
    SuiteResult r;
    for (const auto& w : all_tableaux_up_to(max_boxes, max_entry)) {
        const int n = w.size();
        for (int k = 0; k <= n; ++k)
            for (const auto& sigma : partitions_of(k))
                for (const auto& tau : partitions_of(n - k)) {
                    ++r.checks;
                    if (factorizations(w, sigma, tau) != brute_factorizations(w, sigma, tau))
                        r.fail("factorizations(" + str(w) + ", " + str(sigma) + ", " + str(tau) + ") disagree with brute force");
                }
    }
    return r;
}

SuiteResult two_row_uniqueness(int max_boxes, int alphabet) {
    SuiteResult r;
    std::vector<std::vector<Row>> by_len(max_boxes + 1);
    for (int len = 0; len <= max_boxes; ++len) rows_of_length(len, alphabet, by_len[len]);
    for (int p = 0; p < max_boxes; ++p)
        for (int q = 1; p + q <= max_boxes; ++q)
            for (const auto& top : by_len[p])
                for (const auto& bottom : by_len[q]) {
                    if (!has_bottom_violation(top, bottom)) continue;
                    ++r.checks;
                    const std::string where = "(" + str(WeakRowDiagram{{top, bottom}}) + ")";
                    const auto result = two_row_exchange(top, bottom);
                    const auto partners = two_row_partners(top, bottom);
                    if (partners.size() != 1 || partners.front() != result) {
                        r.fail("two-row exchange of " + where + " is not the unique partner");
                        continue;
                    }
                    const WeakRowDiagram before{{top, bottom}}, after{{result.first, result.second}};
                    if (s_of(after) != s_of(before).negated()) r.fail("S not negated for " + where);
                    const auto v0 = violations(before), v1 = violations(after);
                    if (v1.empty() || v0.front().col != v1.front().col ||
                        before.rows[1][v0.front().col - 1] != after.rows[1][v1.front().col - 1])
                        r.fail("leftmost violation moved for " + where);
                    const std::size_t keep = static_cast<std::size_t>(v0.front().col - 1);
                    for (std::size_t row = 0; row < 2; ++row)
                        for (std::size_t c = 0; c < keep && c < before.rows[row].size(); ++c)
                            if (c >= after.rows[row].size() || after.rows[row][c] != before.rows[row][c])
                                r.fail("entries left of the leftmost violation changed for " + where);
                    if (two_row_exchange(result.first, result.second) != std::pair(top, bottom))
                        r.fail("two-row exchange is not an involution at " + where);
                }
    return r;
}

SuiteResult order_independence(const std::vector<RectDiagram>& diagrams) {
    SuiteResult r;
    for (const auto& rd : diagrams)
        for (const auto& gamma : all_paths(rd.n())) {
            ++r.checks;
            if (compute_P(gamma, rd, ReductionOrder::Leftmost) != compute_P(gamma, rd, ReductionOrder::Rightmost))
                r.fail("P_" + gamma.word() + " depends on the reduction order for " + json_io::to_json(rd).dump());
        }
    return r;
}

SuiteResult homogeneity_and_sides(const std::vector<RectDiagram>& diagrams) {
    SuiteResult r;
    for (const auto& rd : diagrams) {
        const int codim = expected_codim(rd);
        for (const auto& gamma : all_paths(rd.n())) {
            ++r.checks;
            const TensorElement P = compute_P(gamma, rd);
            const bool top = gamma == Path::top(rd.n());
            for (const auto& [key, c] : P.terms()) {
                int weight = 0;
                for (const auto& part : key) weight += part.weight();
                if (top && weight != codim) r.fail("term of P_top has weight " + std::to_string(weight) + " != codim");
                for (std::size_t k = 0; k < gamma.length(); ++k) {
                    auto [i, j] = gamma.vertex(k);
                    const bool side = (gamma[k] == Step::Down && i == 0) || (gamma[k] == Step::Up && j == rd.n());
                    if (side && !key[k].empty()) r.fail("side segment " + std::to_string(k) + " of " + gamma.word() + " is labelled");
                }
            }
        }
    }
    return r;
}

SuiteResult fomin_properties(int pairs, int max_boxes, int max_a, std::uint64_t seed) {
    SuiteResult r;
    Rng rng(seed);
    while (r.checks < pairs) {
        const int a = rng.uniform(1, max_a);
        const Tableau p = random_tableau(rng, max_boxes, 8, a);
        const Tableau q = random_tableau(rng, max_boxes - p.size(), 8);
        try {
            check_in_domain(q, p, a);
        } catch (const NotInDomain&) {
            continue;
        }
        ++r.checks;
        const std::string where = "(q=" + str(q) + ", p=" + str(p) + ", a=" + std::to_string(a) + ")";
        const FominResult out = fomin_involution(q, p, a);
        if (product(out.q, out.p) != product(q, p)) r.fail("(i) fails at " + where);
        const WeakRowDiagram start = stack_pair(q, p, a);
        if (s_of(stack_pair(out.q, out.p, a)) != s_of(start).negated()) r.fail("(ii) fails at " + where);
        if (first_column(out.q) != first_column(q)) r.fail("(iii) fails at " + where);
        try {
            check_in_domain(out.q, out.p, a);
            const FominResult back = fomin_involution(out.q, out.p, a);
            if (back.q != q || back.p != p) r.fail("not an involution at " + where);
        } catch (const NotInDomain& e) {
            r.fail(std::string("output leaves the domain (") + e.what() + ") at " + where);
        }
        const WeakRowDiagram* prev = &start;
        const Violation least = violations(start).front();
        for (const auto& d : out.trace) {
            if (rect_of(d) != rect_of(*prev) || s_of(d) != s_of(*prev).negated())
                r.fail("an exchange changed rect or kept S at " + where);
            const auto vs = violations(d);
            if (vs.empty() || vs.front() != least) r.fail("minimal violation moved at " + where);
            prev = &d;
        }
    }
    return r;
}

SuiteResult factor_shift_closure(const std::vector<RectDiagram>& diagrams) {
    SuiteResult r;
    for (const auto& rd : diagrams) {
        const TableauDiagram td = canonical_filling(rd);
        for (const auto& gamma : all_paths(rd.n())) {
            const auto members = enumerate_factor_sequences(gamma, td);
            for (const auto& labels : members)
                for (std::size_t k = 0; k < gamma.length(); ++k) {
                    if (gamma[k] == Step::Down && k > 0) {
                        for (const auto& [b, c] : all_factorizations(labels[k])) {
                            ++r.checks;
                            Labels moved = labels;
                            moved[k - 1] = product(labels[k - 1], b);
                            moved[k] = c;
                            if (!members.count(moved)) r.fail("moving a left factor off a Down label of " + gamma.word() + " leaves the set");
                        }
                    }
                    if (gamma[k] == Step::Up && k + 1 < gamma.length()) {
                        for (const auto& [a, b] : all_factorizations(labels[k])) {
                            ++r.checks;
                            Labels moved = labels;
                            moved[k] = a;
                            moved[k + 1] = product(b, labels[k + 1]);
                            if (!members.count(moved)) r.fail("moving a right factor off an Up label of " + gamma.word() + " leaves the set");
                        }
                    }
                }
        }
    }
    return r;
}

SuiteResult flat_opening_closure(const std::vector<RectDiagram>& diagrams) {
    SuiteResult r;
    for (const auto& rd : diagrams) {
        const TableauDiagram td = canonical_filling(rd);
        for (const auto& gamma : all_paths(rd.n())) {
            const auto members = enumerate_factor_sequences(gamma, td);
            for (std::size_t k = 0; k < gamma.length(); ++k) {
                if (gamma[k] != Step::Flat) continue;
                const Path lower = open_flat(gamma, k);
                const auto lower_members = enumerate_factor_sequences(lower, td);
                auto [i, j] = gamma.vertex(k);
                const RectTableau& t = td.at(i, j + 1);
                for (const auto& labels : members) {
                    if (!contains_rectangle(labels[k], t)) {
                        r.fail("Flat label of " + gamma.word() + " does not contain its rectangle");
                        continue;
                    }
                    for (const auto& [q, p] : simple_factorizations(labels[k], t)) {
                        ++r.checks;
                        if (!lower_members.count(replace_flat(labels, k, q, p)))
                            r.fail("simple factorization on " + gamma.word() + " does not give a factor sequence of " + lower.word());
                    }
                }
            }
        }
    }
    return r;
}

}  // namespace support
