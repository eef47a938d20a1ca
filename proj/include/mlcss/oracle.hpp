#ifndef MLCSS_ORACLE_HPP
#define MLCSS_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "mlcss/sequence.hpp"
#include "mlcss/solver.hpp"

// Brute-force reference solver, solution verifier and instance generators.
// Everything here is deliberately independent of the DP recurrence: the
// oracle's value is obvious correctness, not speed.

namespace mlcss {

bool is_subsequence(const Sequence& needle, const Sequence& haystack);
bool occurs_as_substring(const Sequence& needle, const Sequence& haystack);

// Guard on the shortest Y length; larger inputs are solver-only territory.
inline constexpr std::uint64_t kOracleMaxShortestY = 64;

// Exhaustive search over all substrings of a shortest Y sequence (any common
// substring of all Ys is a substring of each of them). Ties broken by
// earliest end, then earliest start, in the enumerated Y. Any disagreement
// with solve() is a solver bug.
Solution oracle_solve(const Instance& inst);

struct VerifyReport {
    std::vector<bool> x_ok; // per X_p: candidate is a subsequence
    std::vector<bool> y_ok; // per Y_q: candidate occurs as a substring

    bool pass() const {
        for (bool ok : x_ok)
            if (!ok) return false;
        for (bool ok : y_ok)
            if (!ok) return false;
        return true;
    }
};

VerifyReport verify(const Instance& inst, const Sequence& candidate);

struct LenRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

struct GenParams {
    std::size_t s = 1;
    std::size_t t = 1;
    LenRange len_x{0, 8};
    LenRange len_y{0, 8};
    std::uint64_t alphabet_size = 2;
    std::uint64_t seed = 0;
};

// splitmix64. Fixed here, not delegated to <random>, so failing seeds
// reproduce across platforms and releases.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw ContractError("SplitMix64::below: empty range");
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }
};

// Deterministic function of params (the seed is a field).
Instance gen_random(const GenParams& params);

struct PlantedInstance {
    Instance instance;
    // Subsequence of every X and substring of every Y by construction, so
    // solve(instance).length >= planted.size().
    Sequence planted;
};

PlantedInstance gen_planted(const GenParams& params, std::uint64_t planted_len);

} // namespace mlcss

#endif
