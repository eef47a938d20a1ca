#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlcss/bench.hpp"
#include "mlcss/errors.hpp"
#include "mlcss/ingest.hpp"
#include "mlcss/oracle.hpp"
#include "mlcss/solver.hpp"

namespace {

using namespace mlcss;

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct SolveOpts {
    std::vector<std::string> x_inputs;
    std::vector<std::string> y_inputs;
    std::string format = "plain";
    bool fold_case = false;
    std::string mode = "rolling";
    std::uint64_t max_cells = SolveConfig{}.max_cells;
    bool json = false;
    bool dump = false;
};

struct CheckOpts {
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    std::uint64_t s = 2;
    std::uint64_t t = 2;
    std::string len_x = "0:6";
    std::string len_y = "0:6";
    std::uint64_t alphabet = 2;
    std::uint64_t max_cells = SolveConfig{}.max_cells;
};

struct BenchOpts {
    std::string grid;
    std::string mode = "both";
    std::uint64_t seed = 0;
    std::uint64_t max_cells = SolveConfig{}.max_cells;
    std::uint64_t alphabet = 4;
    std::string out; // empty = stdout
};

SeqFormat parse_format(const std::string& name) {
    if (name == "plain") return SeqFormat::Plain;
    if (name == "fasta") return SeqFormat::Fasta;
    throw InputError("unknown format '" + name + "'");
}

TableMode parse_mode(const std::string& name) {
    if (name == "full") return TableMode::Full;
    if (name == "rolling") return TableMode::Rolling;
    throw InputError("unknown mode '" + name + "'");
}

LenRange parse_len_range(const std::string& text) {
    const std::size_t colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const std::uint64_t v = std::stoull(text);
            return LenRange{v, v};
        }
        LenRange r{std::stoull(text.substr(0, colon)), std::stoull(text.substr(colon + 1))};
        if (r.lo > r.hi) throw InputError("length range '" + text + "' is empty");
        return r;
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("bad length range '" + text + "' (expected lo:hi)");
    }
}

void emit_solution(const Solution& sol, TableMode mode, bool as_json) {
    if (as_json) {
        nlohmann::json j;
        j["length"] = sol.length;
        j["witness"] = sol.witness.to_bytes();
        j["end_in_y1"] = sol.end_in_y1;
        j["cells_computed"] = sol.cells_computed;
        j["elapsed_ms"] = sol.elapsed.count();
        j["mode"] = mode_name(mode);
        std::cout << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace)
                  << '\n';
        return;
    }
    std::cout << "length: " << sol.length << '\n'
              << "witness: " << sol.witness.to_bytes() << '\n'
              << "end_in_y1: " << sol.end_in_y1 << '\n'
              << "cells_computed: " << sol.cells_computed << '\n'
              << "elapsed_ms: " << sol.elapsed.count() << '\n'
              << "mode: " << mode_name(mode) << '\n';
}

int run_solve(const SolveOpts& opts) {
    const SeqFormat format = parse_format(opts.format);
    const TableMode mode = parse_mode(opts.mode);
    if (opts.dump && mode != TableMode::Full)
        throw InputError("--dump-table requires --mode full");

    Instance inst(load_sequences(opts.x_inputs, format, opts.fold_case),
                  load_sequences(opts.y_inputs, format, opts.fold_case));

    Solution sol;
    if (opts.dump && !inst.any_empty_sequence()) {
        const auto start = std::chrono::steady_clock::now();
        const DpTable table = build_full_table(inst, opts.max_cells);
        sol = extract_solution(table, inst);
        sol.elapsed = std::chrono::steady_clock::now() - start;
        dump_table(table, std::cerr);
    } else {
        sol = solve(inst, SolveConfig{mode, opts.max_cells});
    }
    emit_solution(sol, mode, opts.json);
    return kExitOk;
}

// Counterexample rendering: generated symbols are small codes, shown as
// letters when they fit a-z.
std::string render(const Sequence& seq) {
    bool lettered = true;
    for (Symbol s : seq.symbols)
        if (s >= 26) {
            lettered = false;
            break;
        }
    std::string out;
    if (lettered) {
        for (Symbol s : seq.symbols) out.push_back(static_cast<char>('a' + s));
        return out.empty() ? "(empty)" : out;
    }
    for (std::size_t k = 0; k < seq.symbols.size(); ++k) {
        if (k > 0) out.push_back(',');
        out += std::to_string(seq.symbols[k]);
    }
    return out.empty() ? "(empty)" : out;
}

int run_check(const CheckOpts& opts) {
    GenParams params;
    params.s = opts.s;
    params.t = opts.t;
    params.len_x = parse_len_range(opts.len_x);
    params.len_y = parse_len_range(opts.len_y);
    params.alphabet_size = opts.alphabet;
    if (params.s < 1 || params.t < 1) throw InputError("check: --s and --t must be >= 1");
    if (params.alphabet_size < 1) throw InputError("check: --alphabet must be >= 1");
    if (params.len_y.hi > kOracleMaxShortestY)
        throw InputError("check: --len-y upper bound exceeds the oracle guard (" +
                         std::to_string(kOracleMaxShortestY) + ")");

    SplitMix64 seeder(opts.seed);
    std::uint64_t agree = 0;
    bool have_cex = false;

    for (std::uint64_t trial = 0; trial < opts.trials; ++trial) {
        params.seed = seeder.next();
        const Instance inst = gen_random(params);
        const Solution got = solve(inst, SolveConfig{TableMode::Rolling, opts.max_cells});
        const Solution want = oracle_solve(inst);
        const bool ok = got.length == want.length && verify(inst, got.witness).pass();
        if (ok) {
            ++agree;
        } else if (!have_cex) {
            have_cex = true;
            std::cout << "counterexample at trial " << trial << " (seed " << params.seed
                      << "):\n";
            for (std::size_t p = 0; p < inst.s(); ++p)
                std::cout << "  X" << (p + 1) << " = " << render(inst.xs[p]) << '\n';
            for (std::size_t q = 0; q < inst.t(); ++q)
                std::cout << "  Y" << (q + 1) << " = " << render(inst.ys[q]) << '\n';
            std::cout << "  solver: length " << got.length << ", witness "
                      << render(got.witness) << '\n'
                      << "  oracle: length " << want.length << ", witness "
                      << render(want.witness) << '\n';
        }
    }
    std::cout << agree << "/" << opts.trials << " agree\n";
    return agree == opts.trials ? kExitOk : kExitDisagree;
}

int run_bench(const BenchOpts& opts) {
    const GridSpec grid = parse_grid(opts.grid);
    std::vector<TableMode> modes;
    if (opts.mode == "both")
        modes = {TableMode::Full, TableMode::Rolling};
    else
        modes = {parse_mode(opts.mode)};
    if (opts.alphabet < 1) throw InputError("bench: --alphabet must be >= 1");

    const auto points =
        run_grid(grid, modes, opts.seed, opts.max_cells, opts.alphabet, &std::cerr);

    if (opts.out.empty()) {
        write_csv(points, std::cout);
        return kExitOk;
    }
    std::ofstream file(opts.out);
    if (!file) throw InputError("cannot open " + opts.out + " for writing");
    write_csv(points, file);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"longest common subsequence-and-substring solver for multiple strings"};
    app.require_subcommand(1);

    SolveOpts solve_opts;
    CLI::App* solve_cmd =
        app.add_subcommand("solve", "solve one instance given inline strings or files");
    solve_cmd->add_option("--x", solve_opts.x_inputs,
                          "X sequence (subsequence side), inline or @file; repeatable")
        ->required();
    solve_cmd->add_option("--y", solve_opts.y_inputs,
                          "Y sequence (substring side), inline or @file; repeatable")
        ->required();
    solve_cmd->add_option("--format", solve_opts.format, "input file format")
        ->check(CLI::IsMember({"plain", "fasta"}));
    solve_cmd->add_flag("--fold-case", solve_opts.fold_case, "lowercase ASCII before solving");
    solve_cmd->add_option("--mode", solve_opts.mode, "table mode")
        ->check(CLI::IsMember({"full", "rolling"}));
    solve_cmd->add_option("--max-cells", solve_opts.max_cells, "resident-cell budget");
    solve_cmd->add_flag("--json", solve_opts.json, "emit the report as JSON");
    solve_cmd->add_flag("--dump-table", solve_opts.dump,
                        "write every interior cell to stderr (full mode only)");

    CheckOpts check_opts;
    CLI::App* check_cmd =
        app.add_subcommand("check", "differential-test the solver against the oracle");
    check_cmd->add_option("--trials", check_opts.trials, "number of random instances");
    check_cmd->add_option("--seed", check_opts.seed, "master seed");
    check_cmd->add_option("--s", check_opts.s, "number of X sequences");
    check_cmd->add_option("--t", check_opts.t, "number of Y sequences");
    check_cmd->add_option("--len-x", check_opts.len_x, "X length range lo:hi");
    check_cmd->add_option("--len-y", check_opts.len_y, "Y length range lo:hi");
    check_cmd->add_option("--alphabet", check_opts.alphabet, "alphabet size");
    check_cmd->add_option("--max-cells", check_opts.max_cells, "resident-cell budget");

    BenchOpts bench_opts;
    CLI::App* bench_cmd = app.add_subcommand("bench", "measure scaling over a dimension grid");
    bench_cmd->add_option("--grid", bench_opts.grid, "grid spec, e.g. s=1,2;t=1;m=8,16;n=8")
        ->required();
    bench_cmd->add_option("--mode", bench_opts.mode, "table mode")
        ->check(CLI::IsMember({"full", "rolling", "both"}));
    bench_cmd->add_option("--seed", bench_opts.seed, "master seed");
    bench_cmd->add_option("--max-cells", bench_opts.max_cells, "resident-cell budget");
    bench_cmd->add_option("--alphabet", bench_opts.alphabet, "alphabet size");
    bench_cmd->add_option("--out", bench_opts.out, "CSV output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message
        return kExitInput;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_opts);
        if (check_cmd->parsed()) return run_check(check_opts);
        if (bench_cmd->parsed()) return run_bench(bench_opts);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
