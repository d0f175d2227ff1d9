#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "butson/conjecture.hpp"
#include "butson/matrices.hpp"
#include "butson/search.hpp"
#include "butson/spectra.hpp"
#include "report_json.hpp"

namespace {

using butson::RootMatrix;
using Clock = std::chrono::steady_clock;

// Exit codes, also listed in the README:
//   0  success (command-specific: verified / common k found / conjecture holds)
//   1  matrix is not Butson-Hadamard
//   2  input, configuration, or checkpoint error
//   3  conjecture counterexample found
//   4  spectrum has no common eigenvalue order
//   5  numeric eigensolver failure
constexpr int kExitOk = 0;
constexpr int kExitNotBh = 1;
constexpr int kExitInput = 2;
constexpr int kExitCounterexample = 3;
constexpr int kExitNoCommonK = 4;
constexpr int kExitNumeric = 5;

struct MatrixInput {
    std::string path;
    std::string builtin;
};

void add_matrix_options(CLI::App* cmd, MatrixInput& in) {
    cmd->add_option("input", in.path, "matrix file (bh/circ text format)");
    cmd->add_option("--builtin", in.builtin, "bundled example: ex1, ex2 or ex3");
}

// Loads the requested matrix or prints a diagnostic and returns nullopt.
std::optional<std::pair<std::string, RootMatrix>> load_matrix(const MatrixInput& in) {
    if (in.path.empty() == in.builtin.empty()) {
        std::cerr << "error: give exactly one of <input> or --builtin\n";
        return std::nullopt;
    }
    if (!in.builtin.empty()) {
        auto ex = butson::builtin_examples();
        if (in.builtin == "ex1") return std::make_pair("builtin:ex1", ex.ex1);
        if (in.builtin == "ex2") return std::make_pair("builtin:ex2", ex.ex2);
        if (in.builtin == "ex3") return std::make_pair("builtin:ex3", ex.ex3);
        std::cerr << "error: unknown builtin '" << in.builtin << "' (expected ex1, ex2 or ex3)\n";
        return std::nullopt;
    }
    std::ifstream f(in.path);
    if (!f) {
        std::cerr << "error: cannot open '" << in.path << "'\n";
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    try {
        return std::make_pair("file:" + in.path, butson::parse_matrix(buf.str()));
    } catch (const butson::ParseError& e) {
        std::cerr << "error: " << in.path << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void emit(bool json, const butson::cli::Json& report, const std::string& human) {
    if (json) std::cout << report.dump() << "\n";
    else std::cout << human;
}

int cmd_verify(const MatrixInput& in, bool json) {
    auto loaded = load_matrix(in);
    if (!loaded) return kExitInput;
    const auto& [source, M] = *loaded;
    const auto start = Clock::now();
    butson::cli::VerificationView view{butson::verify_bh(M), butson::is_symmetric(M),
                                       butson::is_circulant(M), butson::is_unreal(M)};
    std::ostringstream human;
    butson::cli::print_verification(human, source, M, view);
    emit(json,
         butson::cli::run_report("verify", butson::cli::matrix_input(source, M),
                                 butson::cli::verification_json(view), ms_since(start)),
         human.str());
    return view.check.is_bh ? kExitOk : kExitNotBh;
}

int cmd_spectrum(const MatrixInput& in, bool json) {
    auto loaded = load_matrix(in);
    if (!loaded) return kExitInput;
    const auto& [source, M] = *loaded;
    const auto start = Clock::now();
    if (!butson::verify_bh(M).is_bh) {
        std::cerr << "error: matrix is not Butson-Hadamard; no spectrum computed\n";
        return kExitNotBh;
    }
    const auto rep = butson::spectrum_report(M);
    std::ostringstream human;
    butson::cli::print_spectrum(human, source, M, rep);
    emit(json,
         butson::cli::run_report("spectrum", butson::cli::matrix_input(source, M),
                                 butson::cli::spectrum_json(rep), ms_since(start)),
         human.str());
    return rep.common_k ? kExitOk : kExitNoCommonK;
}

int cmd_conjecture(const MatrixInput& in, bool json) {
    auto loaded = load_matrix(in);
    if (!loaded) return kExitInput;
    const auto& [source, M] = *loaded;
    const auto start = Clock::now();
    if (!butson::verify_bh(M).is_bh) {
        std::cerr << "error: matrix is not Butson-Hadamard; conjecture not tested\n";
        return kExitNotBh;
    }
    const auto rep = butson::spectrum_report(M);
    if (!rep.common_k) {
        std::cerr << "error: eigenvalues have no common order ("
                  << to_string(rep.failure.value_or(butson::SpectrumFailure::mixed_orders))
                  << ")\n";
        return kExitNoCommonK;
    }
    const auto verdict = butson::conjecture_test(M, *rep.common_k);
    std::ostringstream human;
    butson::cli::print_conjecture(human, source, M, verdict);
    emit(json,
         butson::cli::run_report("conjecture", butson::cli::matrix_input(source, M),
                                 butson::cli::conjecture_json(verdict), ms_since(start)),
         human.str());
    return verdict.holds ? kExitOk : kExitCounterexample;
}

struct SearchArgs {
    unsigned m = 0;
    unsigned l = 0;
    bool dedup = false;
    std::string range;
    std::string checkpoint;
    std::uint64_t checkpoint_every = 1024;
    unsigned workers = 1;
};

int cmd_search(const SearchArgs& args, bool json) {
    butson::SearchConfig cfg;
    cfg.m = args.m;
    cfg.l = args.l;
    cfg.dedup = args.dedup;
    cfg.checkpoint_every = args.checkpoint_every;
    if (!args.range.empty()) {
        const auto dots = args.range.find("..");
        std::uint64_t lo = 0, hi = 0;
        try {
            if (dots == std::string::npos) throw std::invalid_argument("range");
            lo = std::stoull(args.range.substr(0, dots));
            hi = std::stoull(args.range.substr(dots + 2));
        } catch (const std::exception&) {
            std::cerr << "error: --range must look like <lo>..<hi>\n";
            return kExitInput;
        }
        cfg.range = std::make_pair(lo, hi);
    }
    butson::SearchOptions opts;
    opts.workers = args.workers;
    if (!args.checkpoint.empty()) opts.checkpoint_path = args.checkpoint;

    const auto start = Clock::now();
    butson::SearchReport rep;
    try {
        rep = butson::run_search(cfg, opts);
    } catch (const butson::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const butson::CheckpointError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }

    butson::cli::Json input{{"m", cfg.m},
                            {"l", cfg.l},
                            {"dedup", cfg.dedup},
                            {"range", nullptr},
                            {"hash", butson::cli::hex16(butson::config_hash(cfg))}};
    if (cfg.range) input["range"] = {cfg.range->first, cfg.range->second};
    std::ostringstream human;
    butson::cli::print_search(human, cfg, rep);
    emit(json,
         butson::cli::run_report("search", std::move(input), butson::cli::search_json(rep),
                                 ms_since(start)),
         human.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Butson-Hadamard matrices: exact verification, spectra of the associated "
                 "unitary, scaled-power conjecture tests and circulant counterexample search"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit a JSON run report instead of text");

    MatrixInput verify_in, spectrum_in, conjecture_in;
    auto* verify = app.add_subcommand("verify", "exact Butson-Hadamard check (M M* = m I)");
    add_matrix_options(verify, verify_in);
    auto* spectrum =
        app.add_subcommand("spectrum", "eigenvalue orders of the associated unitary M/sqrt(m)");
    add_matrix_options(spectrum, spectrum_in);
    auto* conjecture = app.add_subcommand(
        "conjecture", "test whether scaled powers sqrt(m)^(1-i) M^i stay inside mu_l");
    add_matrix_options(conjecture, conjecture_in);

    SearchArgs sargs;
    auto* search = app.add_subcommand("search", "exhaustive scan of circulant first rows");
    search->add_option("m", sargs.m, "matrix dimension")->required();
    search->add_option("l", sargs.l, "root order")->required();
    search->add_flag("--dedup", sargs.dedup, "process only canonical orbit representatives");
    search->add_option("--range", sargs.range, "rank interval <lo>..<hi> (half-open)");
    search->add_option("--checkpoint", sargs.checkpoint, "checkpoint file to write/resume");
    search->add_option("--checkpoint-every", sargs.checkpoint_every,
                       "rows between checkpoint writes");
    search->add_option("--workers", sargs.workers, "number of scan threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitInput;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_in, json);
        if (spectrum->parsed()) return cmd_spectrum(spectrum_in, json);
        if (conjecture->parsed()) return cmd_conjecture(conjecture_in, json);
        if (search->parsed()) return cmd_search(sargs, json);
    } catch (const butson::NumericFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
