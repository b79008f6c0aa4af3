#pragma once

#include "gfc/code.hpp"
#include "gfc/common.hpp"
#include "gfc/ghw.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gfc {

// Simplex code S(k,q): one column per projective point of PG(k-1,q), each
// scaled so its first nonzero entry is 1, ordered by ascending lexicographic
// comparison of the column read top to bottom. First column is (0,...,0,1).
LinearCode simplex_code(FieldPtr ctx, std::uint32_t k);

// Simplex with the listed columns removed (plain puncturing of S(k,q)).
LinearCode punctured_simplex(FieldPtr ctx, std::uint32_t k,
                             const std::vector<std::size_t>& coords);

// Removing any t columns keeps the result s-minimal iff t < q^(k-s-1).
bool punctured_simplex_minimal_guaranteed(std::uint32_t q, std::uint32_t k, std::uint64_t t,
                                          std::uint32_t s);

// Solomon–Stiffler code: the simplex minus the projective points of pairwise
// disjoint coordinate-aligned subspaces U_1,...,U_t with dim U_i = u[i-1],
// where U_i spans the block of coordinates just after U_{i-1}'s. Requires
// 1 <= u[0] < u[1] < ... and sum(u) <= k.
LinearCode solomon_stiffler(FieldPtr ctx, std::uint32_t k, const std::vector<std::uint32_t>& u);

// Guaranteed s-minimal when t <= q-1 and u[t-1] <= k-s-1.
bool ss_minimal_guaranteed(std::uint32_t q, std::uint32_t k, const std::vector<std::uint32_t>& u,
                           std::uint32_t s);

// Closed-form codeword weight distribution of the Solomon–Stiffler code.
// Covers one or two blocks (two requires q >= 3); throws ValueError outside
// that range. Weight q^(k-1) - sum_{i in S} q^(u_i - 1) has multiplicity
// prod_{i in S} (q^(u_i)-1) * q^(k - sum u) over subsets S of the blocks
// (minus the zero word for S empty).
WeightDistribution ss_predicted_weights(std::uint32_t q, std::uint32_t k,
                                        const std::vector<std::uint32_t>& u);

// Appends t full copies of the simplex generator to C's generator. Shifts the
// weight hierarchy by d_s -> d_s + t (q^k - q^(k-s)) / (q-1).
LinearCode pad_with_simplex(const LinearCode& C, std::uint32_t t);

// Smallest t >= 0 such that the padded code has d_{s+1} > D_s.
std::uint64_t min_padding_t(const WeightReport& rep, std::uint32_t s);

// Extends an s-minimal code C that satisfies d_s (q^{s+1}-1) > D_1 (q^{s+1}-q)
// by n' = ceil((q^{s+1}-1) d_s / (q^{s+1}-q)) - D_1 new coordinates: the
// maximum-weight codeword row gains an all-ones block, every other row of a
// deterministically completed basis gains zeros. The result stays s-minimal
// but violates the ratio condition at s; the verdict is re-checked, never
// assumed.
struct ExtensionResult {
    LinearCode code;
    std::uint32_t appended = 0;  // n'
    bool verified_s_minimal = false;
};
ExtensionResult ab_violating_extend(const LinearCode& C, std::uint32_t s, unsigned workers = 1,
                                    std::uint64_t budget = kDefaultSubspaceBudget);

// q-ary cyclotomic cosets mod n: each coset sorted ascending, cosets ordered
// by leader (= smallest element).
std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint32_t q, std::uint32_t n);

// Cyclic code of length n over prime GF(q), gcd(n,q)=1. The excluded leaders
// pick the cyclotomic cosets whose powers of a fixed n-th root of unity become
// roots of h(x); g(x) = (x^n - 1)/h(x) and the generator matrix holds the k
// cyclic shifts of g, k = deg h. The root is beta = gamma^((q^ord - 1)/n) for
// the builtin primitive element gamma of GF(q^ord), ord = ord_n(q).
LinearCode cyclic_code(std::uint32_t q, std::uint32_t n,
                       const std::vector<std::uint32_t>& excluded_leaders);

// Named example codes with pinned generator matrices.
std::vector<std::string> example_names();
LinearCode example_code(const std::string& name);

} // namespace gfc
