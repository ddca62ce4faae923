#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "quiver/verifier.hpp"

namespace {

struct Sink {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    bool open(const std::string& path) {
        if (path.empty()) return true;
        file.open(path);
        stream = &file;
        return static_cast<bool>(file);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quiver coefficients, factor sequences and Fomin's involution"};
    app.require_subcommand(1);

    quiver::InstanceOptions inst;
    quiver::FuzzOptions fuzz;
    quiver::InvolutionOptions invol;
    std::optional<std::uint64_t> replay;
    std::string out_path;

    auto add_instance = [&](CLI::App* cmd, bool with_filling) {
        auto* rank = cmd->add_option("--rank-file", inst.rank_file, "Rank conditions JSON");
        auto* rect = cmd->add_option("--rect-file", inst.rect_file, "Rectangle diagram JSON");
        rank->excludes(rect);
        cmd->add_option("--path", inst.path, "Path word over U, D, H")->required();
        if (with_filling) {
            cmd->add_option("--filling", inst.filling, "canonical | random | file:F")->capture_default_str();
            cmd->add_option("--seed", inst.seed, "Seed for --filling random")->capture_default_str();
        }
        cmd->add_option("--out", out_path, "Write the result here instead of stdout");
    };

    auto* coeffs = app.add_subcommand("coeffs", "Compute P_gamma");
    add_instance(coeffs, false);
    auto* seqs = app.add_subcommand("factor-seqs", "Enumerate factor sequences and their shape census");
    add_instance(seqs, true);
    auto* conj1 = app.add_subcommand("verify-conj1", "Compare P_gamma with the factor-sequence census");
    add_instance(conj1, true);

    auto* fz = app.add_subcommand("fuzz-conj2", "Randomized check of the involution on factor sequences");
    fz->add_option("--trials", fuzz.trials, "Number of trials")->capture_default_str();
    fz->add_option("--max-rows", fuzz.max_rows, "Largest n of a random diagram")->capture_default_str();
    fz->add_option("--max-dim", fuzz.max_dim, "Largest rectangle side")->capture_default_str();
    fz->add_option("--seed", fuzz.seed, "Campaign seed")->capture_default_str();
    fz->add_option("--replay", replay, "Rerun the single trial with this per-trial seed");
    fz->add_option("--out", out_path, "Write the JSONL stream here instead of stdout");

    auto* inv = app.add_subcommand("involution", "Apply Fomin's involution to a pair file");
    inv->add_option("pair-file", invol.pair_file, "{\"q\": tableau, \"p\": tableau, \"a\": int}")->required();
    inv->add_flag("--trace", invol.trace, "Print the diagram after each exchange operation");
    inv->add_option("--out", out_path, "Write the result here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Sink sink;
    if (!sink.open(out_path)) {
        std::cerr << "cannot write " << out_path << '\n';
        return 2;
    }
    std::ostream& out = *sink.stream;

    if (*coeffs) return quiver::run_coeffs(inst, out, std::cerr);
    if (*seqs) return quiver::run_factor_seqs(inst, out, std::cerr);
    if (*conj1) return quiver::run_verify_conj1(inst, out, std::cerr);
    if (*fz) {
        fuzz.replay = replay;
        return quiver::run_fuzz_conj2(fuzz, out, std::cerr);
    }
    return quiver::run_involution(invol, out, std::cerr);
}
