#pragma once

#include "gfc/code.hpp"
#include "gfc/common.hpp"
#include "gfc/subspace.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gfc {

// Scan strategy per s: over s-dimensional subcodes directly, or over
// (k-s)-dimensional message-space subspaces V (weight = n - m_G(V)).
// Subspace counts are equal on both sides, so the choice is by per-subspace
// cost: Complement when a span table fits and q^(k-s) <= s*n. Both sides
// give identical histograms.
enum class ScanSide : std::uint8_t { Subcode, Complement };

struct SupportWeightRow {
    std::uint32_t s = 0;
    std::uint32_t min_weight = 0;                    // d_s
    std::uint32_t max_weight = 0;                    // D_s
    std::vector<std::uint64_t> histogram;            // histogram[j] = A_j^s, size n+1
    ScanSide side = ScanSide::Subcode;
    std::uint64_t subspaces_scanned = 0;
};

struct WeightReport {
    std::uint32_t n = 0, k = 0, q = 0;
    std::vector<SupportWeightRow> rows;              // s = 1..smax, rows[s-1]

    std::uint32_t d(std::uint32_t s) const { return rows.at(s - 1).min_weight; }
    std::uint32_t D(std::uint32_t s) const { return rows.at(s - 1).max_weight; }
    std::uint32_t smax() const { return std::uint32_t(rows.size()); }
};

// Computes d_s, D_s, and the full support weight distribution A_j^s for every
// s in [1, smax] in one sweep per s. Throws BudgetError if any single sweep
// would scan more subspaces than the budget allows.
WeightReport support_weights(const LinearCode& C, std::uint32_t smax = 0,
                             unsigned workers = 1,
                             std::uint64_t budget = kDefaultSubspaceBudget);

// Consistency checks on a computed report (plus the codeword weight
// distribution when given): strict monotonicity of the hierarchy, the
// Singleton bound d_s <= n-k+s, the two cross-level bounds between d_s and
// d_r, the Griesmer-type sum, and A_j = (q-1) A_j^1. Returns human-readable
// violation messages; empty means all hold.
std::vector<std::string> check_bounds(const WeightReport& rep,
                                      const WeightDistribution* dist = nullptr);

// CSV renderings. Hierarchy: header "s,d_s,D_s". Distribution: header
// "s,j,A_j_s", one line per nonzero cell.
std::string hierarchy_csv(const WeightReport& rep);
std::string sswd_csv(const WeightReport& rep);

} // namespace gfc
