#include "mlcss/bench.hpp"

#include <ostream>
#include <sstream>

#include "mlcss/errors.hpp"
#include "mlcss/oracle.hpp"

namespace mlcss {

namespace {

std::vector<std::uint64_t> parse_values(const std::string& part, const std::string& text) {
    std::vector<std::uint64_t> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            values.push_back(v);
        } catch (const std::exception&) {
            throw InputError("grid: bad value '" + item + "' in '" + part + "'");
        }
    }
    if (values.empty()) throw InputError("grid: no values in '" + part + "'");
    return values;
}

} // namespace

GridSpec parse_grid(const std::string& text) {
    GridSpec grid;
    bool seen[4] = {false, false, false, false};
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        const std::size_t eq = part.find('=');
        if (eq == std::string::npos)
            throw InputError("grid: expected key=v1,v2,... in '" + part + "'");
        const std::string key = part.substr(0, eq);
        const std::string rest = part.substr(eq + 1);
        std::size_t slot;
        if (key == "s") slot = 0;
        else if (key == "t") slot = 1;
        else if (key == "m") slot = 2;
        else if (key == "n") slot = 3;
        else throw InputError("grid: unknown key '" + key + "'");
        if (seen[slot]) throw InputError("grid: duplicate key '" + key + "'");
        seen[slot] = true;
        auto values = parse_values(part, rest);
        (slot == 0 ? grid.s : slot == 1 ? grid.t : slot == 2 ? grid.m : grid.n) =
            std::move(values);
    }
    static const char* names[4] = {"s", "t", "m", "n"};
    for (std::size_t k = 0; k < 4; ++k)
        if (!seen[k]) throw InputError(std::string("grid: missing key '") + names[k] + "'");
    for (std::uint64_t v : grid.s)
        if (v == 0) throw InputError("grid: s must be >= 1");
    for (std::uint64_t v : grid.t)
        if (v == 0) throw InputError("grid: t must be >= 1");
    return grid;
}

std::vector<BenchPoint> run_grid(const GridSpec& grid,
                                 const std::vector<TableMode>& modes,
                                 std::uint64_t seed,
                                 std::uint64_t max_cells,
                                 std::uint64_t alphabet_size,
                                 std::ostream* skip_log) {
    std::vector<BenchPoint> points;
    SplitMix64 seeder(seed);
    for (std::uint64_t s : grid.s)
        for (std::uint64_t t : grid.t)
            for (std::uint64_t m : grid.m)
                for (std::uint64_t n : grid.n) {
                    GenParams params;
                    params.s = s;
                    params.t = t;
                    params.len_x = {m, m};
                    params.len_y = {n, n};
                    params.alphabet_size = alphabet_size;
                    params.seed = seeder.next();
                    const Instance inst = gen_random(params);
                    for (TableMode mode : modes) {
                        try {
                            const Solution sol = solve(inst, SolveConfig{mode, max_cells});
                            points.push_back(BenchPoint{s, t, m, n, mode,
                                                        sol.cells_computed,
                                                        sol.elapsed.count(),
                                                        sol.peak_cells_resident});
                        } catch (const BudgetError& e) {
                            if (skip_log)
                                *skip_log << "skip s=" << s << " t=" << t << " m=" << m
                                          << " n=" << n << " mode=" << mode_name(mode)
                                          << ": " << e.what() << '\n';
                        }
                    }
                }
    return points;
}

void write_csv(const std::vector<BenchPoint>& points, std::ostream& os) {
    os << "s,t,m,n,mode,cells,elapsed_ms,peak_cells_resident\n";
    for (const BenchPoint& p : points)
        os << p.s << ',' << p.t << ',' << p.m << ',' << p.n << ','
           << mode_name(p.mode) << ',' << p.cells << ',' << p.elapsed_ms << ','
           << p.peak_cells_resident << '\n';
}

} // namespace mlcss
