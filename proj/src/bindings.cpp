#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "mlcss/errors.hpp"
#include "mlcss/oracle.hpp"
#include "mlcss/solver.hpp"

namespace py = pybind11;

namespace {

using namespace mlcss;

// Python strings map to sequences of Unicode code points, one Symbol each.
Sequence to_sequence(const std::u32string& text) {
    Sequence seq;
    seq.symbols.reserve(text.size());
    for (char32_t c : text) seq.symbols.push_back(static_cast<Symbol>(c));
    return seq;
}

std::u32string to_text(const Sequence& seq) {
    std::u32string out;
    out.reserve(seq.size());
    for (Symbol s : seq.symbols) out.push_back(static_cast<char32_t>(s));
    return out;
}

Instance to_instance(const std::vector<std::u32string>& xs,
                     const std::vector<std::u32string>& ys) {
    std::vector<Sequence> xseqs;
    std::vector<Sequence> yseqs;
    for (const auto& x : xs) xseqs.push_back(to_sequence(x));
    for (const auto& y : ys) yseqs.push_back(to_sequence(y));
    return Instance(std::move(xseqs), std::move(yseqs));
}

py::dict solution_dict(const Solution& sol, const char* mode) {
    py::dict d;
    d["length"] = sol.length;
    d["witness"] = to_text(sol.witness);
    d["end_in_y1"] = sol.end_in_y1;
    d["cells_computed"] = sol.cells_computed;
    d["elapsed_ms"] = sol.elapsed.count();
    d["mode"] = mode;
    return d;
}

// Generated codes must stay valid code points so they round-trip through str.
void check_alphabet(std::uint64_t alphabet_size) {
    if (alphabet_size > 0xD800)
        throw ContractError("alphabet_size too large to map onto str code points");
}

GenParams make_params(std::size_t s, std::size_t t,
                      std::pair<std::uint64_t, std::uint64_t> len_x,
                      std::pair<std::uint64_t, std::uint64_t> len_y,
                      std::uint64_t alphabet_size, std::uint64_t seed) {
    check_alphabet(alphabet_size);
    GenParams params;
    params.s = s;
    params.t = t;
    params.len_x = {len_x.first, len_x.second};
    params.len_y = {len_y.first, len_y.second};
    params.alphabet_size = alphabet_size;
    params.seed = seed;
    return params;
}

std::pair<std::vector<std::u32string>, std::vector<std::u32string>> instance_strings(
    const Instance& inst) {
    std::vector<std::u32string> xs;
    std::vector<std::u32string> ys;
    for (const auto& x : inst.xs) xs.push_back(to_text(x));
    for (const auto& y : inst.ys) ys.push_back(to_text(y));
    return {std::move(xs), std::move(ys)};
}

} // namespace

PYBIND11_MODULE(_mlcss, m) {
    m.doc() = "Longest common subsequence-and-substring solver for multiple strings";

    py::register_exception<BudgetError>(m, "BudgetExceeded");
    py::register_exception<GuardError>(m, "OracleGuardExceeded");

    m.def(
        "solve",
        [](const std::vector<std::u32string>& xs, const std::vector<std::u32string>& ys,
           const std::string& mode, std::uint64_t max_cells) {
            SolveConfig config;
            if (mode == "full")
                config.mode = TableMode::Full;
            else if (mode == "rolling")
                config.mode = TableMode::Rolling;
            else
                throw ContractError("mode must be 'full' or 'rolling'");
            config.max_cells = max_cells;
            const Solution sol = solve(to_instance(xs, ys), config);
            return solution_dict(sol, mode_name(config.mode));
        },
        py::arg("xs"), py::arg("ys"), py::arg("mode") = "rolling",
        py::arg("max_cells") = SolveConfig{}.max_cells,
        "Longest string that is a subsequence of every X and a substring of every Y.");

    m.def(
        "oracle_solve",
        [](const std::vector<std::u32string>& xs, const std::vector<std::u32string>& ys) {
            const Solution sol = oracle_solve(to_instance(xs, ys));
            return solution_dict(sol, "oracle");
        },
        py::arg("xs"), py::arg("ys"),
        "Brute-force reference answer (shortest Y must have at most 64 symbols).");

    m.def(
        "verify",
        [](const std::vector<std::u32string>& xs, const std::vector<std::u32string>& ys,
           const std::u32string& candidate) {
            const VerifyReport report = verify(to_instance(xs, ys), to_sequence(candidate));
            py::dict d;
            d["x_ok"] = report.x_ok;
            d["y_ok"] = report.y_ok;
            d["pass"] = report.pass();
            return d;
        },
        py::arg("xs"), py::arg("ys"), py::arg("candidate"),
        "Per-sequence subsequence/substring checks for a candidate answer.");

    m.def(
        "is_subsequence",
        [](const std::u32string& needle, const std::u32string& haystack) {
            return is_subsequence(to_sequence(needle), to_sequence(haystack));
        },
        py::arg("needle"), py::arg("haystack"));

    m.def(
        "occurs_as_substring",
        [](const std::u32string& needle, const std::u32string& haystack) {
            return occurs_as_substring(to_sequence(needle), to_sequence(haystack));
        },
        py::arg("needle"), py::arg("haystack"));

    m.def(
        "gen_random",
        [](std::size_t s, std::size_t t, std::pair<std::uint64_t, std::uint64_t> len_x,
           std::pair<std::uint64_t, std::uint64_t> len_y, std::uint64_t alphabet_size,
           std::uint64_t seed) {
            return instance_strings(
                gen_random(make_params(s, t, len_x, len_y, alphabet_size, seed)));
        },
        py::arg("s") = 1, py::arg("t") = 1,
        py::arg("len_x") = std::pair<std::uint64_t, std::uint64_t>{0, 8},
        py::arg("len_y") = std::pair<std::uint64_t, std::uint64_t>{0, 8},
        py::arg("alphabet_size") = 2, py::arg("seed") = 0,
        "Seeded random instance; returns (xs, ys).");

    m.def(
        "gen_planted",
        [](std::size_t s, std::size_t t, std::pair<std::uint64_t, std::uint64_t> len_x,
           std::pair<std::uint64_t, std::uint64_t> len_y, std::uint64_t alphabet_size,
           std::uint64_t seed, std::uint64_t planted_len) {
            const PlantedInstance planted = gen_planted(
                make_params(s, t, len_x, len_y, alphabet_size, seed), planted_len);
            auto [xs, ys] = instance_strings(planted.instance);
            py::dict d;
            d["xs"] = xs;
            d["ys"] = ys;
            d["planted"] = to_text(planted.planted);
            return d;
        },
        py::arg("s") = 1, py::arg("t") = 1,
        py::arg("len_x") = std::pair<std::uint64_t, std::uint64_t>{4, 8},
        py::arg("len_y") = std::pair<std::uint64_t, std::uint64_t>{4, 8},
        py::arg("alphabet_size") = 2, py::arg("seed") = 0, py::arg("planted_len") = 2,
        "Seeded instance built around a known common string; returns {xs, ys, planted}.");
}
