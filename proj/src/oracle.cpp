#include "mlcss/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace mlcss {

bool is_subsequence(const Sequence& needle, const Sequence& haystack) {
    // Greedy left-to-right matching.
    std::size_t matched = 0;
    for (Symbol sym : haystack.symbols) {
        if (matched == needle.size()) break;
        if (needle.symbols[matched] == sym) ++matched;
    }
    return matched == needle.size();
}

bool occurs_as_substring(const Sequence& needle, const Sequence& haystack) {
    if (needle.empty()) return true;
    return std::search(haystack.symbols.begin(), haystack.symbols.end(),
                       needle.symbols.begin(), needle.symbols.end()) !=
           haystack.symbols.end();
}

Solution oracle_solve(const Instance& inst) {
    const auto start = std::chrono::steady_clock::now();

    std::size_t q_min = 0;
    for (std::size_t q = 1; q < inst.t(); ++q)
        if (inst.ys[q].size() < inst.ys[q_min].size()) q_min = q;
    const Sequence& base = inst.ys[q_min];
    if (base.size() > kOracleMaxShortestY)
        throw GuardError("oracle guard: shortest Y has " + std::to_string(base.size()) +
                         " symbols, limit is " + std::to_string(kOracleMaxShortestY));

    std::uint64_t candidates = 0;
    std::uint64_t best_len = 0;
    std::uint64_t best_end = 0;
    Sequence best;

    for (std::uint64_t len = 1; len <= base.size(); ++len) {
        for (std::uint64_t end = len; end <= base.size(); ++end) {
            const Sequence cand = base.slice1(end - len + 1, end);
            ++candidates;

            bool ok = true;
            for (const auto& x : inst.xs)
                if (!is_subsequence(cand, x)) {
                    ok = false;
                    break;
                }
            if (ok)
                for (const auto& y : inst.ys)
                    if (!occurs_as_substring(cand, y)) {
                        ok = false;
                        break;
                    }
            if (!ok) continue;

            if (len > best_len || (len == best_len && end < best_end)) {
                best_len = len;
                best_end = end;
                best = cand;
            }
        }
    }

    Solution sol;
    sol.length = best_len;
    sol.witness = best;
    sol.cells_computed = candidates;
    if (best_len > 0) {
        // Earliest occurrence end in Y_1, so the witness slice invariant holds.
        for (std::uint64_t end = best_len; end <= inst.ys[0].size(); ++end)
            if (inst.ys[0].slice1(end - best_len + 1, end) == best) {
                sol.end_in_y1 = end;
                break;
            }
    }
    sol.elapsed = std::chrono::steady_clock::now() - start;
    return sol;
}

VerifyReport verify(const Instance& inst, const Sequence& candidate) {
    VerifyReport report;
    report.x_ok.reserve(inst.s());
    report.y_ok.reserve(inst.t());
    for (const auto& x : inst.xs) report.x_ok.push_back(is_subsequence(candidate, x));
    for (const auto& y : inst.ys) report.y_ok.push_back(occurs_as_substring(candidate, y));
    return report;
}

namespace {

void validate(const GenParams& p) {
    if (p.s < 1 || p.t < 1) throw ContractError("GenParams: s and t must be >= 1");
    if (p.len_x.lo > p.len_x.hi || p.len_y.lo > p.len_y.hi)
        throw ContractError("GenParams: empty length range");
    if (p.alphabet_size < 1) throw ContractError("GenParams: alphabet_size must be >= 1");
}

std::uint64_t draw_len(SplitMix64& rng, const LenRange& range) {
    return range.lo + rng.below(range.hi - range.lo + 1);
}

} // namespace

Instance gen_random(const GenParams& params) {
    validate(params);
    SplitMix64 rng(params.seed);

    auto draw_seq = [&](const LenRange& range) {
        const std::uint64_t len = draw_len(rng, range);
        Sequence seq;
        seq.symbols.reserve(len);
        for (std::uint64_t k = 0; k < len; ++k)
            seq.symbols.push_back(static_cast<Symbol>(rng.below(params.alphabet_size)));
        return seq;
    };

    std::vector<Sequence> xs;
    std::vector<Sequence> ys;
    for (std::size_t p = 0; p < params.s; ++p) xs.push_back(draw_seq(params.len_x));
    for (std::size_t q = 0; q < params.t; ++q) ys.push_back(draw_seq(params.len_y));
    return Instance(std::move(xs), std::move(ys));
}

PlantedInstance gen_planted(const GenParams& params, std::uint64_t planted_len) {
    validate(params);
    if (planted_len > params.len_x.lo || planted_len > params.len_y.lo)
        throw ContractError("gen_planted: planted_len exceeds a length range lower bound");

    SplitMix64 rng(params.seed);
    Sequence planted;
    planted.symbols.reserve(planted_len);
    for (std::uint64_t k = 0; k < planted_len; ++k)
        planted.symbols.push_back(static_cast<Symbol>(rng.below(params.alphabet_size)));

    std::vector<Sequence> xs;
    for (std::size_t p = 0; p < params.s; ++p) {
        const std::uint64_t len = draw_len(rng, params.len_x);
        std::vector<Symbol> syms = planted.symbols;
        while (syms.size() < len) {
            // Random insertions keep the plant a subsequence.
            const std::size_t pos = rng.below(syms.size() + 1);
            syms.insert(syms.begin() + pos,
                        static_cast<Symbol>(rng.below(params.alphabet_size)));
        }
        xs.push_back(Sequence(std::move(syms)));
    }

    std::vector<Sequence> ys;
    for (std::size_t q = 0; q < params.t; ++q) {
        const std::uint64_t len = draw_len(rng, params.len_y);
        const std::uint64_t flank = len - planted_len;
        const std::uint64_t before = rng.below(flank + 1);
        std::vector<Symbol> syms;
        syms.reserve(len);
        for (std::uint64_t k = 0; k < before; ++k)
            syms.push_back(static_cast<Symbol>(rng.below(params.alphabet_size)));
        syms.insert(syms.end(), planted.symbols.begin(), planted.symbols.end());
        while (syms.size() < len)
            syms.push_back(static_cast<Symbol>(rng.below(params.alphabet_size)));
        ys.push_back(Sequence(std::move(syms)));
    }

    return PlantedInstance{Instance(std::move(xs), std::move(ys)), std::move(planted)};
}

} // namespace mlcss
