#pragma once

#include "gfc/common.hpp"
#include "gfc/gf.hpp"
#include "gfc/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace gfc {

using bigint = boost::multiprecision::cpp_int;

// Number of s-dimensional subspaces of GF(q)^k, exact.
bigint gaussian_binomial(std::uint32_t k, std::uint32_t s, std::uint32_t q);

// Base-q integer encoding of a vector in GF(q)^k; coordinate 0 is the least
// significant digit. Requires q^k to fit in 64 bits (callers stay far below).
std::uint64_t encode_vec(const elem_t* v, std::uint32_t k, std::uint32_t q);
void decode_vec(std::uint64_t code, std::uint32_t k, std::uint32_t q, elem_t* out);

struct SubspaceBasis {
    MatrixGF basis;         // s x k, reduced row echelon form, rank s
    std::uint64_t ordinal;  // position in the enumeration order below
};

// Deterministic enumeration of all s-dimensional subspaces of GF(q)^k, each
// represented by its unique RREF basis. The order is a public contract:
//   * pivot-column sets are visited so that the first set is {k-s,...,k-1}
//     (mirror images of lexicographic (k-s-1)-shifted combinations; see
//     README "Subspace enumeration order");
//   * within one pivot set, the free entries (positions right of each pivot
//     and not in a pivot column), read in row-major order, run through all
//     base-q values with the first free entry as the most significant digit.
// Supports random access (unrank), inversion (rank), and cheap sequential
// iteration over ordinal ranges for parallel splits.
class SubspaceEnumerator {
  public:
    SubspaceEnumerator(FieldPtr ctx, std::uint32_t k, std::uint32_t s);

    std::uint64_t count() const { return total_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t s() const { return s_; }

    SubspaceBasis at(std::uint64_t ordinal) const;

    // basis must be an RREF matrix of rank s over the same field.
    std::uint64_t ordinal_of(const MatrixGF& basis) const;

    // Calls f(const SubspaceBasis&) for each ordinal in [lo, hi), ascending.
    // The SubspaceBasis buffer is reused between calls.
    void for_range(std::uint64_t lo, std::uint64_t hi,
                   const std::function<void(const SubspaceBasis&)>& f) const;

  private:
    struct PivotBlock {
        std::vector<std::uint32_t> pivots;              // ascending
        std::vector<std::pair<std::uint32_t, std::uint32_t>> free_pos;  // row-major
        std::uint64_t size;    // q^free_pos.size()
        std::uint64_t offset;  // ordinal of first subspace in the block
    };

    void fill_basis(const PivotBlock& b, std::uint64_t t, MatrixGF& out) const;

    FieldPtr ctx_;
    std::uint32_t k_, s_, q_;
    std::uint64_t total_ = 0;
    std::vector<PivotBlock> blocks_;
};

// Membership test for span(basis) backed by an epoch-stamped table over all
// q^k vector codes. One load() stamps the q^dim span elements; contains() is
// then O(1). Available only while q^k <= kSpanTableMaxCodes and
// q^dim <= kSpanTableMaxSpan; callers fall back to reduce-against-basis.
inline constexpr std::uint64_t kSpanTableMaxCodes = std::uint64_t(1) << 22;
inline constexpr std::uint64_t kSpanTableMaxSpan = 4096;

class SpanTable {
  public:
    SpanTable(FieldPtr ctx, std::uint32_t k);

    bool available() const { return !stamp_.empty(); }
    bool span_fits(std::uint32_t dim) const;

    // Stamps every element of the row space of basis (dim = basis.rows()).
    void load(const MatrixGF& basis);
    bool contains(std::uint64_t code) const { return stamp_[code] == epoch_; }

  private:
    FieldPtr ctx_;
    std::uint32_t k_, q_;
    std::uint32_t epoch_ = 0;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::vector<elem_t>> span_;  // scratch: current span as vectors
};

// True iff v is in the row space of the RREF matrix basis.
bool in_row_space(const MatrixGF& basis, const std::vector<elem_t>& v);

// Number of columns of G lying in the row space of basis.
std::size_t multiplicity_mG(const MatrixGF& G, const MatrixGF& basis);

// Canonical RREF basis of the orthogonal complement (dual space) of
// span(basis) under the standard dot product.
MatrixGF orthogonal_complement(const MatrixGF& basis);

} // namespace gfc
