#pragma once

#include "gfc/common.hpp"
#include "gfc/gf.hpp"
#include "gfc/matrix.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace gfc {

// Sorted 0-based coordinate indices.
using SupportSet = std::vector<std::size_t>;

// weight -> number of nonzero codewords of that weight
using WeightDistribution = std::map<std::uint32_t, std::uint64_t>;

struct CodewordScan {
    WeightDistribution dist;
    std::uint32_t min_weight = 0, max_weight = 0;
    std::vector<elem_t> min_message, max_message;  // smallest message ordinal among ties
    std::vector<elem_t> min_word, max_word;
};

// An [n,k] linear code over GF(q), held as its defining generator matrix.
// If the supplied rows are dependent, the stored generator is replaced by the
// nonzero RREF rows and rows_were_reduced() reports it.
class LinearCode {
  public:
    static LinearCode from_generator(FieldPtr ctx, MatrixGF gen);

    std::size_t n() const { return gen_.cols(); }
    std::size_t k() const { return gen_.rows(); }
    std::uint32_t q() const { return ctx_->q(); }
    const FieldPtr& ctx() const { return ctx_; }
    const MatrixGF& generator() const { return gen_; }
    bool rows_were_reduced() const { return reduced_; }

    const MatrixGF& rref_generator() const;
    const MatrixGF& parity_check() const;  // (n-k) x n, rank n-k

    std::vector<elem_t> codeword(const std::vector<elem_t>& message) const;

  private:
    struct Cache;
    LinearCode(FieldPtr ctx, MatrixGF gen, bool reduced);

    FieldPtr ctx_;
    MatrixGF gen_;
    bool reduced_ = false;
    std::shared_ptr<Cache> cache_;
};

LinearCode dual(const LinearCode& C);

// Support of the subcode {y G : y in span(basis)}: the union of the supports
// of the basis-row codewords.
SupportSet subcode_support(const LinearCode& C, const MatrixGF& basis);

SupportSet support_of(const std::vector<elem_t>& word);

// Full codeword enumeration (nonzero messages). Ties on weight resolve to the
// smallest message under the base-q ordinal encoding (coordinate 0 = least
// significant digit). Throws BudgetError if q^k - 1 exceeds the budget.
CodewordScan scan_codewords(const LinearCode& C,
                            std::uint64_t budget = kDefaultCodewordBudget);

bool is_projective(const LinearCode& C);

// Keeps the first column of each proportionality class, drops zero columns.
LinearCode projectivize(const LinearCode& C);

// Removes the listed coordinates. Throws ValueError if the dimension drops.
LinearCode puncture(const LinearCode& C, const std::vector<std::size_t>& coords);

// Text format, version 1 (prime q only):
//   line 1: q k n
//   then k rows of n integers in [0,q)
// '#' starts a comment; whitespace is free-form. Writing is canonical:
// single spaces, one row per line, no comments.
LinearCode read_code(std::istream& in);
LinearCode read_code_file(const std::string& path);
void write_code(std::ostream& out, const LinearCode& C);
void write_code_file(const std::string& path, const LinearCode& C);

} // namespace gfc
