#include "quiver/verifier.hpp"

#include "quiver/error.hpp"
#include "quiver/fomin.hpp"
#include "quiver/p_gamma.hpp"

namespace quiver {
namespace {

using json_io::json;

json shapes_json(const ShapeTuple& key) {
    json out = json::array();
    for (const auto& p : key) out.push_back(json_io::to_json(p));
    return out;
}

RectDiagram load_diagram(const InstanceOptions& opt) {
    if (opt.rank_file.empty() == opt.rect_file.empty())
        throw json_io::MalformedInput("exactly one of --rank-file and --rect-file is required");
    if (!opt.rank_file.empty()) return rect_diagram_of(json_io::rank_from(json_io::read_file(opt.rank_file)));
    return json_io::rect_diagram_from(json_io::read_file(opt.rect_file));
}

Path load_path(const InstanceOptions& opt, const RectDiagram& rd) {
    Path gamma = Path::parse(opt.path);
    if (gamma.n() != rd.n())
        throw InvalidPath("path " + opt.path + " has n = " + std::to_string(gamma.n()) + " but the diagram has n = " +
                          std::to_string(rd.n()));
    return gamma;
}

TableauDiagram load_filling(const InstanceOptions& opt, const RectDiagram& rd) {
    if (opt.filling == "canonical") return canonical_filling(rd);
    if (opt.filling == "random") {
        Rng rng(opt.seed);
        return random_filling(rd, rng);
    }
    if (opt.filling.rfind("file:", 0) == 0) {
        TableauDiagram td = json_io::tableau_diagram_from(json_io::read_file(opt.filling.substr(5)));
        if (td.shape() != rd) throw json_io::MalformedInput("filling does not match the rectangle diagram");
        if (!validate_filling(td)) throw json_io::MalformedInput("filling violates the cone condition");
        return td;
    }
    throw json_io::MalformedInput("unknown filling mode " + opt.filling);
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const InvalidPath& e) {
        err << "invalid path: " << e.what() << '\n';
        return 3;
    } catch (const NotInDomain& e) {
        err << "not in P_a: " << e.what() << '\n';
        return 4;
    } catch (const InvalidRankConditions& e) {
        err << "invalid rank conditions: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        err << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

std::optional<Path> path_with_valley(int n, Rng& rng) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        Path gamma = random_path(n, rng);
        for (std::size_t k = 0; k + 1 < gamma.length(); ++k)
            if (gamma[k] == Step::Down && gamma[k + 1] == Step::Up) return gamma;
    }
    return std::nullopt;
}

bool meets_preconditions(const RectTableau& t, const Tableau& x, const Tableau& y) {
    if (static_cast<int>(y.row_count()) > t.rows()) return false;
    if (!t.body().empty()) {
        const int floor = t.body().max_entry();
        if ((!x.empty() && x.min_entry() <= floor) || (!y.empty() && y.min_entry() <= floor)) return false;
    }
    if (fits_around(x, y, t)) return false;
    return !attach_S(t, x, y).is_zero();
}

}  // namespace

Conj1Report verify_conj1(const Path& gamma, const TableauDiagram& td) {
    const RectDiagram rd = td.shape();
    Conj1Report r;
    r.instance = {{"path", gamma.word()}, {"diagram", json_io::to_json(rd)}};
    r.coefficients = compute_P(gamma, rd);
    r.census = shape_census(enumerate_factor_sequences(gamma, td));
    std::map<ShapeTuple, std::pair<Coeff, Coeff>> both;
    for (const auto& [key, c] : r.coefficients.terms()) both[key].first = c;
    for (const auto& [key, c] : r.census) both[key].second = c;
    for (const auto& [key, cc] : both)
        if (cc.first != cc.second) r.discrepancies.push_back({key, cc.first, cc.second});
    r.match = r.discrepancies.empty();
    return r;
}

json to_json(const Conj1Report& r) {
    json disc = json::array();
    for (const auto& d : r.discrepancies)
        disc.push_back({{"shapes", shapes_json(d.shapes)}, {"coefficient", d.coefficient}, {"count", d.count}});
    return {{"instance", r.instance},
            {"coefficients", json_io::to_json(r.coefficients)},
            {"census", json_io::to_json(r.census)},
            {"match", r.match},
            {"discrepancies", disc}};
}

void for_each_rank_conditions(int n, int max_rank, const std::function<void(const RankConditions&)>& visit) {
    std::vector<std::vector<int>> diag(n + 1);
    for (int d = 0; d <= n; ++d) diag[d].assign(n + 1 - d, 0);
    // Fill diagonal by diagonal; r_{i,i+d} is bounded by r_{i,i+d-1} and r_{i+1,i+d}.
    std::function<void(int, int)> fill = [&](int d, int i) {
        if (d > n) {
            RankConditions rc = RankConditions::from_diagonals(diag);
            if (rc.can_occur()) visit(rc);
            return;
        }
        if (i > n - d) return fill(d + 1, 0);
        const int hi = d == 0 ? max_rank : std::min(diag[d - 1][i], diag[d - 1][i + 1]);
        for (int v = 0; v <= hi; ++v) {
            diag[d][i] = v;
            fill(d, i + 1);
        }
    };
    fill(0, 0);
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Ok: return "ok";
        case Verdict::Counterexample: return "counterexample";
        case Verdict::Skipped: return "skipped-precondition";
    }
    return "?";
}

TrialReport run_trial(std::uint64_t trial_seed, int max_rows, int max_dim) {
    if (max_rows < 1 || max_dim < 0) throw PreconditionError("max-rows must be positive and max-dim nonnegative");
    Rng rng(trial_seed);
    TrialReport r;
    r.seed = trial_seed;
    const int n = rng.uniform(1, max_rows);
    r.diagram = random_rect_diagram(n, max_dim, rng);
    TableauDiagram td = random_filling(r.diagram, rng);
    for (r.draws = 1; r.draws <= kDrawsPerTrial; ++r.draws) {
        r.path = path_with_valley(n, rng);
        if (!r.path) r.path = Path::lowest(n);
        const Path& gamma = *r.path;
        FactorSequence seq = sample_factor_sequence(gamma, td, rng);

        for (std::size_t k = 0; k + 1 < gamma.length(); ++k) {
            if (gamma[k] != Step::Down || gamma[k + 1] != Step::Up) continue;
            auto [i, j] = gamma.vertex(k);
            const RectTableau& t = td.at(i, j + 1);
            const Tableau& x = seq.labels[k];
            const Tableau& y = seq.labels[k + 1];
            if (!meets_preconditions(t, x, y)) continue;
            ++r.valleys_checked;
            FactorSequence flipped = seq;
            std::tie(flipped.labels[k], flipped.labels[k + 1]) = involute_around_rect(t, x, y);
            if (!is_factor_sequence(flipped, td)) {
                r.verdict = Verdict::Counterexample;
                r.witness = Witness{k, seq, std::move(flipped)};
                r.filling = std::move(td);
                return r;
            }
        }
        if (r.valleys_checked > 0) {
            r.verdict = Verdict::Ok;
            return r;
        }
    }
    r.draws = kDrawsPerTrial;
    r.verdict = Verdict::Skipped;
    return r;
}

json to_json(const TrialReport& r) {
    json out = {{"trial", r.index},
                {"seed", r.seed},
                {"n", r.diagram.n()},
                {"dims", json_io::to_json(r.diagram)["rects"]},
                {"path", r.path ? r.path->word() : ""},
                {"verdict", verdict_name(r.verdict)},
                {"draws", r.draws},
                {"valleys_checked", r.valleys_checked}};
    if (r.witness) {
        out["witness"] = {{"valley", r.witness->valley},
                          {"diagram", json_io::to_json(r.diagram)},
                          {"filling", json_io::to_json(*r.filling)},
                          {"sequence", json_io::to_json(r.witness->sequence)},
                          {"involuted", json_io::to_json(r.witness->involuted)}};
    }
    return out;
}

FuzzSummary fuzz_conj2(const FuzzOptions& opt, std::ostream& out) {
    FuzzSummary s;
    const std::uint64_t count = opt.replay ? 1 : opt.trials;
    for (std::uint64_t t = 0; t < count; ++t) {
        const std::uint64_t seed = opt.replay ? *opt.replay : derive_seed(opt.seed, t);
        TrialReport r = run_trial(seed, opt.max_rows, opt.max_dim);
        r.index = opt.replay ? 0 : t;
        ++s.trials;
        switch (r.verdict) {
            case Verdict::Ok: ++s.ok; break;
            case Verdict::Skipped: ++s.skipped; break;
            case Verdict::Counterexample: ++s.counterexamples; break;
        }
        out << to_json(r).dump() << '\n';
    }
    json summary = {{"trials", s.trials},
                    {"ok", s.ok},
                    {"skipped", s.skipped},
                    {"counterexamples", s.counterexamples},
                    {"seed", opt.seed},
                    {"max_rows", opt.max_rows},
                    {"max_dim", opt.max_dim},
                    {"rng", std::string(Rng::kAlgorithm)}};
    if (opt.replay) summary["replay"] = *opt.replay;
    out << json{{"summary", summary}}.dump() << '\n';
    return s;
}

int run_coeffs(const InstanceOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const RectDiagram rd = load_diagram(opt);
        const Path gamma = load_path(opt, rd);
        out << json_io::to_json(compute_P(gamma, rd)).dump() << '\n';
        return 0;
    });
}

int run_factor_seqs(const InstanceOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const RectDiagram rd = load_diagram(opt);
        const Path gamma = load_path(opt, rd);
        const TableauDiagram td = load_filling(opt, rd);
        const auto seqs = enumerate_factor_sequences(gamma, td);
        json list = json::array();
        for (const auto& labels : seqs) list.push_back(json_io::to_json(FactorSequence{gamma, labels}));
        out << json{{"path", gamma.word()}, {"filling", json_io::to_json(td)}, {"sequences", list},
                    {"census", json_io::to_json(shape_census(seqs))}}
                   .dump()
            << '\n';
        return 0;
    });
}

int run_verify_conj1(const InstanceOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const RectDiagram rd = load_diagram(opt);
        const Path gamma = load_path(opt, rd);
        Conj1Report r = verify_conj1(gamma, load_filling(opt, rd));
        r.instance["filling"] = opt.filling;
        out << to_json(r).dump() << '\n';
        return r.match ? 0 : 1;
    });
}

int run_fuzz_conj2(const FuzzOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opt.trials < 1 && !opt.replay) throw PreconditionError("--trials must be at least 1");
        return fuzz_conj2(opt, out).counterexamples == 0 ? 0 : 1;
    });
}

int run_involution(const InvolutionOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto pair = json_io::pair_from(json_io::read_file(opt.pair_file));
        const FominResult r = fomin_involution(pair.q, pair.p, pair.a);
        json result = {{"q", json_io::to_json(r.q)}, {"p", json_io::to_json(r.p)}, {"a", pair.a},
                       {"exchanges", r.trace.size()}};
        if (opt.trace) {
            json trace = json::array({json_io::to_json(stack_pair(pair.q, pair.p, pair.a))});
            for (const auto& d : r.trace) trace.push_back(json_io::to_json(d));
            result["trace"] = trace;
        }
        out << result.dump() << '\n';
        return 0;
    });
}

}  // namespace quiver
