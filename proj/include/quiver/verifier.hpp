#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "quiver/diagram.hpp"
#include "quiver/factor_sequence.hpp"
#include "quiver/json_io.hpp"
#include "quiver/tensor.hpp"

namespace quiver {

struct Discrepancy {
    ShapeTuple shapes;
    Coeff coefficient = 0;
    Coeff count = 0;
};

/// Coefficients of P_gamma against the census of factor sequences.
struct Conj1Report {
    json_io::json instance;
    TensorElement coefficients{0};
    Census census;
    bool match = false;
    std::vector<Discrepancy> discrepancies;
};

Conj1Report verify_conj1(const Path& gamma, const TableauDiagram& td);
json_io::json to_json(const Conj1Report& r);

/// Calls visit on every rank table with n + 1 rows, entries in [0, max_rank],
/// whose ranks can occur.
void for_each_rank_conditions(int n, int max_rank, const std::function<void(const RankConditions&)>& visit);

enum class Verdict { Ok, Counterexample, Skipped };
const char* verdict_name(Verdict v);

struct Witness {
    std::size_t valley = 0;  // index of the Down step
    FactorSequence sequence;
    FactorSequence involuted;
};

struct TrialReport {
    std::uint64_t index = 0;
    std::uint64_t seed = 0;
    RectDiagram diagram;
    std::optional<TableauDiagram> filling;
    std::optional<Path> path;
    Verdict verdict = Verdict::Skipped;
    int draws = 0;
    int valleys_checked = 0;
    std::optional<Witness> witness;
};

inline constexpr int kDrawsPerTrial = 16;

/// One fuzz trial, fully determined by trial_seed: random diagram with at most
/// max_rows rows of rectangles and a random filling, then up to kDrawsPerTrial
/// draws of a random path with a Down,Up valley and a sampled factor sequence.
/// The first draw with a valley meeting the preconditions has every such
/// valley involuted and the result tested for membership; the trial is
/// skipped when no draw qualifies.
TrialReport run_trial(std::uint64_t trial_seed, int max_rows, int max_dim);
json_io::json to_json(const TrialReport& r);

struct FuzzSummary {
    std::uint64_t trials = 0, ok = 0, skipped = 0, counterexamples = 0;
};

struct FuzzOptions {
    std::uint64_t trials = 1000;
    int max_rows = 5;
    int max_dim = 2;
    std::uint64_t seed = 0;
    /// Replays the single trial with this per-trial seed.
    std::optional<std::uint64_t> replay;
};

/// Streams one JSONL report per trial, then the summary line.
FuzzSummary fuzz_conj2(const FuzzOptions& opt, std::ostream& out);

struct InstanceOptions {
    std::string rank_file;
    std::string rect_file;
    std::string path;
    /// canonical | random | file:F
    std::string filling = "canonical";
    std::uint64_t seed = 0;
};

struct InvolutionOptions {
    std::string pair_file;
    bool trace = false;
};

/// Command entry points. Each writes its JSON result to `out`, diagnostics to
/// `err`, and returns the process exit code: 0 success, 1 mismatch or
/// counterexample, 2 invalid rank conditions or malformed input, 3 invalid
/// path, 4 involution precondition failed.
int run_coeffs(const InstanceOptions& opt, std::ostream& out, std::ostream& err);
int run_factor_seqs(const InstanceOptions& opt, std::ostream& out, std::ostream& err);
int run_verify_conj1(const InstanceOptions& opt, std::ostream& out, std::ostream& err);
int run_fuzz_conj2(const FuzzOptions& opt, std::ostream& out, std::ostream& err);
int run_involution(const InvolutionOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace quiver
