#pragma once

#include "gfc/code.hpp"
#include "gfc/common.hpp"
#include "gfc/ghw.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gfc {

enum class MinimalityAlg : std::uint8_t { Rank, Brute };

// A failing pair: a subcode whose support contains the support of a different
// subcode of the same dimension. Ordinals refer to the subspace enumeration
// order; witnesses are deterministic (first container, then first contained,
// in that order) and identical for both algorithms.
struct MinimalityWitness {
    std::uint64_t container_ordinal = 0, contained_ordinal = 0;
    MatrixGF container_basis, contained_basis;
    SupportSet container_support, contained_support;
};

struct SMinimality {
    bool minimal = false;
    std::optional<MinimalityWitness> witness;  // set iff not minimal
};

// True iff the s-dimensional subcode spanned by basis (rows = messages) is
// minimal: rank of the parity-check columns on its support equals
// |support| - s. This is the literal criterion; the sweep below uses the
// equivalent generator-side form rank(G restricted off the support) = k - s.
bool is_minimal_subcode(const LinearCode& C, const MatrixGF& basis);

// Scans all s-dimensional subcodes. alg Rank uses the parity-check rank
// criterion per subcode; alg Brute compares all support pairs directly.
SMinimality is_s_minimal(const LinearCode& C, std::uint32_t s,
                         MinimalityAlg alg = MinimalityAlg::Rank, unsigned workers = 1,
                         std::uint64_t budget = kDefaultSubspaceBudget);

// Sufficient conditions from the weight hierarchy alone.
enum class GabVerdict : std::uint8_t { HoldsByGap, HoldsByRatio, Inconclusive };

// Gap first: D_s < d_{s+1}. Then ratio: D_s (q^{s+1}-q) < d_s (q^{s+1}-1).
// Requires s < k (d_{s+1} must exist in the report).
GabVerdict gab_check(const WeightReport& rep, std::uint32_t s);
std::string gab_name(GabVerdict v);

// Per-subcode sufficient conditions on a support size m.
enum class SubcodeTest : std::uint8_t { SmallSupport, RatioSupport, Undecided };
SubcodeTest subcode_test(const WeightReport& rep, std::uint32_t support_size, std::uint32_t s);

// Parameter regimes where the sufficient conditions become equivalences:
// small_support_iff when d_{s+1} = n-k+s+1; ratio_iff when
// (n-k+s)(q^{s+1}-q) < d_s (q^{s+1}-1).
struct ExactRegimes {
    bool small_support_iff = false;
    bool ratio_iff = false;
};
ExactRegimes exact_regimes(const WeightReport& rep, std::uint32_t s);

struct ProfileRow {
    std::uint32_t s = 0;
    std::uint32_t d_next = 0;  // d_{s+1}
    std::uint32_t D_s = 0;
    bool minimal = false;
    GabVerdict gab = GabVerdict::Inconclusive;
    ExactRegimes regimes;
};

// Full verdict table for s = 1..k-1 over one weight report. Verifies the
// structural facts that tie the columns together (verdicts are monotone
// downward in s; a non-Inconclusive gab entry implies the verdict; a minimal
// code obeys d_1 >= (q-1)(k-1)+1) and throws ValueError if any fails, since a
// violation can only be an implementation bug.
struct MinimalityProfile {
    WeightReport report;
    std::vector<ProfileRow> rows;
};

MinimalityProfile minimality_profile(const LinearCode& C,
                                     MinimalityAlg alg = MinimalityAlg::Rank,
                                     unsigned workers = 1,
                                     std::uint64_t budget = kDefaultSubspaceBudget);

// CSV: header "s,d_s+1,D_s,verdict,condition"; verdict yes/no; condition is
// gap/ratio/inconclusive.
std::string profile_csv(const MinimalityProfile& p);

} // namespace gfc
