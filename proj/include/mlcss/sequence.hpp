#ifndef MLCSS_SEQUENCE_HPP
#define MLCSS_SEQUENCE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mlcss/errors.hpp"

namespace mlcss {

// One alphabet element. Symbols are compared by code point only; any case
// folding happens at ingestion.
using Symbol = std::uint32_t;

struct Sequence {
    std::vector<Symbol> symbols;

    Sequence() = default;
    explicit Sequence(std::vector<Symbol> syms) : symbols(std::move(syms)) {}

    // One symbol per byte.
    static Sequence from_bytes(std::string_view text) {
        Sequence seq;
        seq.symbols.reserve(text.size());
        for (unsigned char c : text) seq.symbols.push_back(static_cast<Symbol>(c));
        return seq;
    }

    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }

    // 1-indexed element access, matching the position convention used
    // throughout the solver.
    Symbol at1(std::size_t pos) const {
        if (pos < 1 || pos > symbols.size())
            throw ContractError("Sequence::at1: position out of range");
        return symbols[pos - 1];
    }

    // Inclusive 1-indexed slice [from, to]; from == to + 1 yields the empty
    // sequence.
    Sequence slice1(std::size_t from, std::size_t to) const {
        if (from < 1 || from > to + 1 || to > symbols.size())
            throw ContractError("Sequence::slice1: bad range");
        return Sequence(std::vector<Symbol>(symbols.begin() + (from - 1),
                                            symbols.begin() + to));
    }

    // Narrows each symbol to one byte; only meaningful for byte-coded
    // sequences (everything the CLI produces).
    std::string to_bytes() const {
        std::string out;
        out.reserve(symbols.size());
        for (Symbol s : symbols) out.push_back(static_cast<char>(s & 0xFF));
        return out;
    }

    friend bool operator==(const Sequence&, const Sequence&) = default;
};

// One problem: find the longest string that is a subsequence of every X
// and a substring of every Y.
struct Instance {
    std::vector<Sequence> xs;
    std::vector<Sequence> ys;

    Instance(std::vector<Sequence> xs_, std::vector<Sequence> ys_)
        : xs(std::move(xs_)), ys(std::move(ys_)) {
        if (xs.empty() || ys.empty())
            throw ContractError("Instance: need at least one X and one Y sequence");
    }

    std::size_t s() const { return xs.size(); }
    std::size_t t() const { return ys.size(); }

    bool any_empty_sequence() const {
        for (const auto& x : xs)
            if (x.empty()) return true;
        for (const auto& y : ys)
            if (y.empty()) return true;
        return false;
    }
};

} // namespace mlcss

#endif
