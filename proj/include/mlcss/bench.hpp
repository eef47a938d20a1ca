#ifndef MLCSS_BENCH_HPP
#define MLCSS_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mlcss/solver.hpp"

// Scaling harness: work is measured in cells computed (exact and
// machine-independent), wall time is a secondary column.

namespace mlcss {

struct GridSpec {
    std::vector<std::uint64_t> s;
    std::vector<std::uint64_t> t;
    std::vector<std::uint64_t> m; // per-X length
    std::vector<std::uint64_t> n; // per-Y length
};

// "s=1,2;t=1,2;m=8,16,32;n=8,16,32" - all four keys required.
GridSpec parse_grid(const std::string& text);

struct BenchPoint {
    std::uint64_t s = 0;
    std::uint64_t t = 0;
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    TableMode mode = TableMode::Rolling;
    std::uint64_t cells = 0;
    double elapsed_ms = 0.0;
    std::uint64_t peak_cells_resident = 0;
};

// One point per (s, t, m, n, mode) over seeded random instances; the same
// instance is reused across modes at a point. Points whose resident cells
// exceed max_cells are noted on skip_log and omitted; the run continues.
std::vector<BenchPoint> run_grid(const GridSpec& grid,
                                 const std::vector<TableMode>& modes,
                                 std::uint64_t seed,
                                 std::uint64_t max_cells,
                                 std::uint64_t alphabet_size,
                                 std::ostream* skip_log);

// Header exactly: s,t,m,n,mode,cells,elapsed_ms,peak_cells_resident
void write_csv(const std::vector<BenchPoint>& points, std::ostream& os);

} // namespace mlcss

#endif
