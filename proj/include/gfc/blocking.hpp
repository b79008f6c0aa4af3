#pragma once

#include "gfc/code.hpp"
#include "gfc/common.hpp"
#include "gfc/subspace.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gfc {

using bigrat = boost::multiprecision::cpp_rational;

// A set of projective points of PG(k-1,q): vectors scaled so the first
// nonzero entry is 1, sorted lexicographically, duplicates removed.
struct PGPointSet {
    FieldPtr ctx;
    std::uint32_t k = 0;
    std::vector<std::vector<elem_t>> points;
};

// Canonicalizes raw vectors (any nonzero scaling, any order, repeats allowed).
// Rejects zero vectors.
PGPointSet make_pointset(FieldPtr ctx, std::uint32_t k,
                         const std::vector<std::vector<elem_t>>& raw);

// Columns of a projective code as a point set. Throws if C is not projective.
PGPointSet pointset_from_code(const LinearCode& C);

// Generator matrix whose columns are the stored points, in stored order.
// Throws ValueError if the points do not span GF(q)^k.
LinearCode code_from_pointset(const PGPointSet& B);

struct BlockingVerdict {
    bool ok = false;
    std::optional<SubspaceBasis> witness;  // a violating (k-s)-dim subspace
};

// B is a t-fold s-blocking set iff every (k-s)-dimensional subspace contains
// at least t points of B.
BlockingVerdict is_t_fold_s_blocking(const PGPointSet& B, std::uint32_t t, std::uint32_t s,
                                     unsigned workers = 1,
                                     std::uint64_t budget = kDefaultSubspaceBudget);

// B is a cutting s-blocking set iff the points of B inside each
// (k-s)-dimensional subspace span it.
BlockingVerdict is_cutting_s_blocking(const PGPointSet& B, std::uint32_t s, unsigned workers = 1,
                                      std::uint64_t budget = kDefaultSubspaceBudget);

// Exact lower bounds on sizes, as rationals plus their ceilings. The two
// conditional branches split on whether the COMPLEMENT of B in PG(k-1,q)
// spans GF(q)^k (a complement inside a hyperplane forces B to contain that
// hyperplane's affine complement).
//   size_any:        |B| >= t (q^k - 1)/(q^(k-s) - 1), unconditional.
//   size_nonspanning:|B| >= q^(k-1) when the complement of B does not span.
//   size_spanning:   |B| >= min{ t (q^(s+1)-1)/(q-1),  t + q^2 (q^s-1)/(q-1) }
//                    when the complement spans; for t <= q the first branch
//                    is the minimum.
//   cutting_a:       m >= (k-s)(q^k - 1)/(q^(k-s) - 1), unconditional.
//   cutting_b:       m >= (k-s)(q^(s+1) - 1)/(q - 1), valid only when k-s <= q.
struct BoundReport {
    std::uint32_t t = 0, s = 0, k = 0, q = 0;
    std::optional<bool> spanning;

    bigrat size_any;
    bigrat size_nonspanning;        // meaningful when spanning != true
    bigrat size_spanning_branch1;   // t (q^(s+1)-1)/(q-1)
    bigrat size_spanning_branch2;   // t + q^2 (q^s-1)/(q-1)
    bigrat size_spanning;           // min of the branches
    bigrat cutting_a;
    bool cutting_b_applicable = false;
    bigrat cutting_b;
};

BoundReport blocking_bounds(std::uint32_t t, std::uint32_t s, std::uint32_t k, std::uint32_t q,
                            std::optional<bool> spanning = std::nullopt);

bigint ceil_of(const bigrat& r);
std::string render_bounds(const BoundReport& rep);

// Smallest t-fold s-blocking set by exhaustive search over subsets of
// PG(k-1,q), by increasing size, lexicographic point-index order within one
// size. Returns nullopt if no subset up to max_size works (max_size 0 means
// all points). Guarded: requires #points <= 15 or max_size <= 5.
struct MinimumBlocking {
    std::uint32_t size = 0;
    std::vector<std::vector<elem_t>> points;
};
std::optional<MinimumBlocking> exhaustive_min_blocking(FieldPtr ctx, std::uint32_t k,
                                                       std::uint32_t t, std::uint32_t s,
                                                       std::uint32_t max_size = 0);

// Text format, version 1 (prime q only):
//   line 1: q k m
//   then m rows of k integers in [0,q)
// '#' comments, free-form whitespace; canonical single-space output.
PGPointSet read_pointset(std::istream& in);
PGPointSet read_pointset_file(const std::string& path);
void write_pointset(std::ostream& out, const PGPointSet& B);
void write_pointset_file(const std::string& path, const PGPointSet& B);

} // namespace gfc
