#ifndef MLCSS_SOLVER_HPP
#define MLCSS_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mlcss/multi_index.hpp"
#include "mlcss/sequence.hpp"

// Exact solver for the (s,t) longest common subsequence-and-substring
// problem: the longest string that is a subsequence of every X_p and a
// substring of every Y_q.
//
// The DP table cell at (i_1..i_s; j_1..j_t) holds the length of the longest
// string that is a subsequence of each prefix X_p[i_p] and a suffix of each
// prefix Y_q[j_q]. Each interior cell is classified against the shared y-end
// symbol sigma:
//
//   NotSame   - the t y-end symbols disagree; the cell is 0.
//   AllMatch  - every x-end equals sigma; diagonal neighbor + 1.
//   Partial   - some x-ends differ; copy the neighbor with exactly the
//               mismatching i-coordinates decremented.
//
// The answer is the maximum over all interior cells; the witness is a slice
// of Y_1 ending at the recorded j_1 coordinate. Full mode materializes the
// whole table (table dumps, cell-level checks); Rolling mode keeps only the
// current and previous i_1 layers, which is enough because every recurrence
// read stays within those layers.

namespace mlcss {

enum class TableMode { Full, Rolling };

const char* mode_name(TableMode mode);

struct SolveConfig {
    TableMode mode = TableMode::Rolling;
    // Resident-cell budget: the whole table in Full mode, the two-layer slab
    // in Rolling mode. Exceeding it is an error, never a silent fallback.
    std::uint64_t max_cells = 100'000'000;
};

using CellValue = std::uint32_t;

// Materialized DP table. cells is row-major over dims
// (m_1+1, .., m_s+1, n_1+1, .., n_t+1); every index with a zero coordinate
// holds 0.
struct DpTable {
    Strides strides;
    std::vector<CellValue> cells;
    TableMode mode = TableMode::Full;
    std::size_t s = 0;
    std::size_t t = 0;

    CellValue value_at(const MultiIndex& idx) const { return cells[flatten(idx, strides)]; }
};

struct Solution {
    std::uint64_t length = 0;
    Sequence witness;                       // always a slice of Y_1
    std::uint64_t end_in_y1 = 0;            // 0 when length == 0
    std::uint64_t cells_computed = 0;       // product of all m_p and n_q
    std::uint64_t peak_cells_resident = 0;  // live table cells at the peak
    std::chrono::duration<double, std::milli> elapsed{0};
};

// Classify one interior cell. Out-of-range indices are a contract violation,
// never silently clamped.
CellOutcome classify_cell(const Instance& inst, const MultiIndex& idx);

// The recurrence for one interior cell, reading neighbors through lookup.
// lookup must return 0 for any index containing a zero coordinate.
CellValue cell_value(const Instance& inst, const MultiIndex& idx,
                     const std::function<CellValue(const MultiIndex&)>& lookup);

Solution solve(const Instance& inst, const SolveConfig& config = {});

// Full-mode table; the debugging and cell-level-checking surface.
DpTable build_full_table(const Instance& inst, std::uint64_t max_cells = SolveConfig{}.max_cells);

// Answer extraction from a materialized table: max over interior cells, with
// end_in_y1 the j_1 coordinate of the first maximal cell in row-major order.
// elapsed is left zero.
Solution extract_solution(const DpTable& table, const Instance& inst);

// Slice of y1 covering 1-indexed positions end_in_y1 - length + 1 .. end_in_y1.
Sequence reconstruct(const Sequence& y1, std::uint64_t end_in_y1, std::uint64_t length);

// Table extents (m_1+1, .., m_s+1, n_1+1, .., n_t+1).
std::vector<Extent> table_dims(const Instance& inst);

// Number of interior cells, i.e. the work of one solve.
std::uint64_t interior_cell_count(const Instance& inst);

// Cells that must be resident for the given mode; the quantity the budget
// guards.
std::uint64_t resident_cell_bound(const Instance& inst, TableMode mode);

// One line per interior cell in iteration order: "i_1,..,i_s;j_1,..,j_t value".
void dump_table(const DpTable& table, std::ostream& os);

} // namespace mlcss

#endif
