#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gfc {

// Field element code, an integer in [0, q). q is capped at 2^16.
using elem_t = std::uint16_t;

struct ValueError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration guards. Sweeps refuse to visit more subspaces / codewords than
// this unless the caller raises the limit (CLI: GFCODES_BUDGET).
inline constexpr std::uint64_t kDefaultSubspaceBudget = 2'000'000;
inline constexpr std::uint64_t kDefaultCodewordBudget = std::uint64_t(1) << 24;

} // namespace gfc
