#ifndef MLCSS_ERRORS_HPP
#define MLCSS_ERRORS_HPP

#include <stdexcept>

namespace mlcss {

// Violated precondition or malformed call: bad index arity, out-of-range
// coordinate, infeasible generator parameters. Never raised by valid input.
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The requested table (or rolling slab) does not fit the configured cell
// budget, or a cell-count product overflows 64 bits.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The brute-force oracle was asked to handle an instance beyond its guard.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Missing files, malformed records, inconsistent flags.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mlcss

#endif
