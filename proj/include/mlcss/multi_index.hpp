#ifndef MLCSS_MULTI_INDEX_HPP
#define MLCSS_MULTI_INDEX_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "mlcss/errors.hpp"
#include "mlcss/sequence.hpp"

namespace mlcss {

using Coord = std::uint64_t;
using Extent = std::uint64_t;

// Coordinate tuple (i_1..i_s, j_1..j_t) addressing one DP cell.
using MultiIndex = std::vector<Coord>;

// Subset of the X positions {1..s} whose current end symbol differs from the
// shared y-end symbol; position p maps to bit p-1, so the "first r positions"
// case is the low-bit prefix mask.
using MismatchMask = std::uint64_t;

enum class CellKind { NotSame, AllMatch, Partial };

// Classification of one interior cell. sigma is the shared y-end symbol
// (defined unless NotSame); mask is non-empty iff Partial.
struct CellOutcome {
    CellKind kind = CellKind::NotSame;
    Symbol sigma = 0;
    MismatchMask mask = 0;
};

// Row-major addressing for a flat multi-dimensional array.
struct Strides {
    std::vector<Extent> dims;
    std::vector<std::uint64_t> strides;
    std::uint64_t total_cells = 0;
};

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        throw BudgetError("cell-count product overflows 64 bits");
    return a * b;
}

Strides make_strides(const std::vector<Extent>& dims);

// offset = sum coords[k] * strides[k]; bijective over the coordinate box.
std::uint64_t flatten(const MultiIndex& idx, const Strides& st);

// Inverse of flatten. For tests and table dumps; the hot path never unflattens.
MultiIndex unflatten(std::uint64_t offset, const Strides& st);

// Index the recurrence reads for an AllMatch or Partial cell: AllMatch
// decrements every coordinate, Partial decrements exactly the masked
// i-coordinates and leaves every j-coordinate alone.
MultiIndex recurrence_target(const MultiIndex& idx, const CellOutcome& outcome,
                             std::size_t s, std::size_t t);

// Row-major successor over the interior box (all coordinates >= 1).
// idx starts at all-ones; returns false once the box is exhausted.
bool next_interior(MultiIndex& idx, const std::vector<Extent>& dims);

} // namespace mlcss

#endif
