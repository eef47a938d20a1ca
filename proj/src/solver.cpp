#include "mlcss/solver.hpp"

#include <cassert>
#include <ostream>
#include <string>

namespace mlcss {

namespace {

// Same classification as classify_cell, without the per-call contract checks.
// Callers guarantee idx is interior and in range.
CellOutcome classify_unchecked(const Instance& inst, const MultiIndex& idx) {
    const std::size_t s = inst.s();
    const std::size_t t = inst.t();

    const Symbol sigma = inst.ys[0].symbols[idx[s] - 1];
    for (std::size_t q = 1; q < t; ++q)
        if (inst.ys[q].symbols[idx[s + q] - 1] != sigma)
            return CellOutcome{CellKind::NotSame, 0, 0};

    MismatchMask mask = 0;
    for (std::size_t p = 0; p < s; ++p)
        if (inst.xs[p].symbols[idx[p] - 1] != sigma) mask |= MismatchMask{1} << p;

    if (mask == 0) return CellOutcome{CellKind::AllMatch, sigma, 0};
    return CellOutcome{CellKind::Partial, sigma, mask};
}

bool has_interior(const std::vector<Extent>& dims) {
    for (Extent d : dims)
        if (d < 2) return false;
    return true;
}

Solution run_rolling(const Instance& inst, std::uint64_t max_cells) {
    const std::size_t s = inst.s();
    const std::size_t t = inst.t();
    const std::vector<Extent> dims = table_dims(inst);
    assert(s <= 64); // any wider instance overflows the cell-count checks first

    // Layer = all dims but i_1. Every recurrence read lands in the current
    // or the previous i_1 layer.
    const Strides layer = make_strides({dims.begin() + 1, dims.end()});
    const std::uint64_t resident = checked_mul(2, layer.total_cells);
    if (resident > max_cells)
        throw BudgetError("rolling slab needs " + std::to_string(resident) +
                          " cells, budget is " + std::to_string(max_cells));

    Solution sol;
    sol.cells_computed = interior_cell_count(inst);
    sol.peak_cells_resident = resident;

    std::vector<CellValue> prev(layer.total_cells, 0);
    std::vector<CellValue> cur(layer.total_cells, 0);

    // AllMatch decrements every coordinate: prev layer, minus one step along
    // each remaining dimension.
    std::uint64_t diag_delta = 0;
    for (std::uint64_t st : layer.strides) diag_delta += st;

    const std::vector<Extent> inner_dims(dims.begin() + 1, dims.end());
    std::uint64_t max_len = 0;
    std::uint64_t last_j1 = 0;

    for (Coord i1 = 1; i1 < dims[0]; ++i1) {
        // Stale interior values in the recycled buffer are overwritten before
        // any read; boundary positions were zeroed once and are never written.
        std::swap(prev, cur);
        const Symbol x1_end = inst.xs[0].symbols[i1 - 1];

        MultiIndex inner(inner_dims.size(), 1);
        do {
            std::uint64_t off = 0;
            for (std::size_t k = 0; k < inner.size(); ++k)
                off += inner[k] * layer.strides[k];

            // global coordinate k lives at inner[k-1]; j_1 is coordinate s
            const Coord j1 = inner[s - 1];
            const Symbol sigma = inst.ys[0].symbols[j1 - 1];
            bool same = true;
            for (std::size_t q = 1; q < t; ++q)
                if (inst.ys[q].symbols[inner[s - 1 + q] - 1] != sigma) {
                    same = false;
                    break;
                }

            CellValue v = 0;
            if (same) {
                MismatchMask mask = 0;
                if (x1_end != sigma) mask |= 1;
                for (std::size_t p = 1; p < s; ++p)
                    if (inst.xs[p].symbols[inner[p - 1] - 1] != sigma)
                        mask |= MismatchMask{1} << p;

                if (mask == 0) {
                    v = prev[off - diag_delta] + 1;
                } else {
                    std::uint64_t delta = 0;
                    for (std::size_t p = 1; p < s; ++p)
                        if (mask & (MismatchMask{1} << p)) delta += layer.strides[p - 1];
                    const std::vector<CellValue>& src = (mask & 1) ? prev : cur;
                    v = src[off - delta];
                }
            }
            cur[off] = v;
            if (v > max_len) {
                max_len = v;
                last_j1 = j1;
            }
        } while (next_interior(inner, inner_dims));
    }

    sol.length = max_len;
    sol.end_in_y1 = max_len > 0 ? last_j1 : 0;
    sol.witness = reconstruct(inst.ys[0], sol.end_in_y1, sol.length);
    return sol;
}

} // namespace

const char* mode_name(TableMode mode) {
    return mode == TableMode::Full ? "full" : "rolling";
}

std::vector<Extent> table_dims(const Instance& inst) {
    std::vector<Extent> dims;
    dims.reserve(inst.s() + inst.t());
    for (const auto& x : inst.xs) dims.push_back(x.size() + 1);
    for (const auto& y : inst.ys) dims.push_back(y.size() + 1);
    return dims;
}

std::uint64_t interior_cell_count(const Instance& inst) {
    if (inst.any_empty_sequence()) return 0;
    std::uint64_t total = 1;
    for (const auto& x : inst.xs) total = checked_mul(total, x.size());
    for (const auto& y : inst.ys) total = checked_mul(total, y.size());
    return total;
}

std::uint64_t resident_cell_bound(const Instance& inst, TableMode mode) {
    const std::vector<Extent> dims = table_dims(inst);
    if (mode == TableMode::Full) return make_strides(dims).total_cells;
    return checked_mul(2, make_strides({dims.begin() + 1, dims.end()}).total_cells);
}

CellOutcome classify_cell(const Instance& inst, const MultiIndex& idx) {
    const std::size_t s = inst.s();
    const std::size_t t = inst.t();
    if (idx.size() != s + t)
        throw ContractError("classify_cell: index arity does not match s+t");
    for (std::size_t p = 0; p < s; ++p)
        if (idx[p] < 1 || idx[p] > inst.xs[p].size())
            throw ContractError("classify_cell: i-coordinate out of range");
    for (std::size_t q = 0; q < t; ++q)
        if (idx[s + q] < 1 || idx[s + q] > inst.ys[q].size())
            throw ContractError("classify_cell: j-coordinate out of range");
    return classify_unchecked(inst, idx);
}

CellValue cell_value(const Instance& inst, const MultiIndex& idx,
                     const std::function<CellValue(const MultiIndex&)>& lookup) {
    const CellOutcome outcome = classify_cell(inst, idx);
    if (outcome.kind == CellKind::NotSame) return 0;
    const CellValue base = lookup(recurrence_target(idx, outcome, inst.s(), inst.t()));
    return outcome.kind == CellKind::AllMatch ? base + 1 : base;
}

DpTable build_full_table(const Instance& inst, std::uint64_t max_cells) {
    DpTable table;
    table.s = inst.s();
    table.t = inst.t();
    table.mode = TableMode::Full;
    table.strides = make_strides(table_dims(inst));
    if (table.strides.total_cells > max_cells)
        throw BudgetError("full table needs " + std::to_string(table.strides.total_cells) +
                          " cells, budget is " + std::to_string(max_cells));

    table.cells.assign(table.strides.total_cells, 0);
    if (!has_interior(table.strides.dims)) return table;

    MultiIndex idx(table.strides.dims.size(), 1);
    do {
        const CellOutcome outcome = classify_unchecked(inst, idx);
        CellValue v = 0;
        if (outcome.kind != CellKind::NotSame) {
            const MultiIndex target = recurrence_target(idx, outcome, table.s, table.t);
            v = table.cells[flatten(target, table.strides)];
            if (outcome.kind == CellKind::AllMatch) ++v;
        }
        table.cells[flatten(idx, table.strides)] = v;
    } while (next_interior(idx, table.strides.dims));
    return table;
}

Solution extract_solution(const DpTable& table, const Instance& inst) {
    Solution sol;
    sol.cells_computed = interior_cell_count(inst);
    sol.peak_cells_resident = table.cells.size();
    if (!has_interior(table.strides.dims)) return sol;

    std::uint64_t max_len = 0;
    std::uint64_t last_j1 = 0;
    MultiIndex idx(table.strides.dims.size(), 1);
    do {
        const CellValue v = table.cells[flatten(idx, table.strides)];
        if (v > max_len) {
            max_len = v;
            last_j1 = idx[inst.s()];
        }
    } while (next_interior(idx, table.strides.dims));

    sol.length = max_len;
    sol.end_in_y1 = max_len > 0 ? last_j1 : 0;
    sol.witness = reconstruct(inst.ys[0], sol.end_in_y1, sol.length);
    return sol;
}

Solution solve(const Instance& inst, const SolveConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    Solution sol;
    if (inst.any_empty_sequence()) {
        // Empty interior: the empty string is the only candidate.
        sol.elapsed = std::chrono::steady_clock::now() - start;
        return sol;
    }
    if (config.mode == TableMode::Full) {
        const DpTable table = build_full_table(inst, config.max_cells);
        sol = extract_solution(table, inst);
    } else {
        sol = run_rolling(inst, config.max_cells);
    }
    sol.elapsed = std::chrono::steady_clock::now() - start;
    return sol;
}

Sequence reconstruct(const Sequence& y1, std::uint64_t end_in_y1, std::uint64_t length) {
    if (length > end_in_y1 || end_in_y1 > y1.size())
        throw ContractError("reconstruct: slice out of range");
    if (length == 0) return Sequence{};
    return y1.slice1(end_in_y1 - length + 1, end_in_y1);
}

void dump_table(const DpTable& table, std::ostream& os) {
    if (!has_interior(table.strides.dims)) return;
    MultiIndex idx(table.strides.dims.size(), 1);
    do {
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (k > 0) os << (k == table.s ? ';' : ',');
            os << idx[k];
        }
        os << ' ' << table.cells[flatten(idx, table.strides)] << '\n';
    } while (next_interior(idx, table.strides.dims));
}

} // namespace mlcss
