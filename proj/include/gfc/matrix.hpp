#pragma once

#include "gfc/common.hpp"
#include "gfc/gf.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace gfc {

// Dense row-major matrix over a shared FieldCtx. Value type: copies are
// independent; all operations are pure functions.
class MatrixGF {
  public:
    MatrixGF() = default;
    MatrixGF(FieldPtr ctx, std::size_t rows, std::size_t cols)
        : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static MatrixGF from_rows(FieldPtr ctx, const std::vector<std::vector<elem_t>>& rows);
    static MatrixGF identity(FieldPtr ctx, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& ctx() const { return ctx_; }

    elem_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, elem_t v) { a_[r * cols_ + c] = v; }
    const elem_t* row(std::size_t r) const { return a_.data() + r * cols_; }
    elem_t* row(std::size_t r) { return a_.data() + r * cols_; }
    const std::vector<elem_t>& data() const { return a_; }

    bool operator==(const MatrixGF& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    FieldPtr ctx_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<elem_t> a_;
};

struct RrefResult {
    MatrixGF R;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // strictly increasing
};

// Unique reduced row echelon form. Pivot selection: first nonzero entry,
// scanning columns left to right and rows top to bottom. For q = 2 the
// elimination runs on bit-packed words.
RrefResult rref_rank(const MatrixGF& M);

std::size_t rank_of(const MatrixGF& M);

// Basis rows of {x : M x^T = 0}; row count = cols - rank(M). Derived from the
// RREF by the standard free-column construction, so output is deterministic.
MatrixGF nullspace(const MatrixGF& M);

// idx must be strictly increasing and in range.
MatrixGF submatrix_columns(const MatrixGF& M, const std::vector<std::size_t>& idx);

MatrixGF transpose(const MatrixGF& M);
MatrixGF mat_mul(const MatrixGF& A, const MatrixGF& B);
MatrixGF concat_cols(const MatrixGF& A, const MatrixGF& B);

// y * M for a row vector y of length M.rows().
std::vector<elem_t> vec_mat(const std::vector<elem_t>& y, const MatrixGF& M);

bool is_zero(const MatrixGF& M);

} // namespace gfc
