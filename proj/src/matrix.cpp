#include "gfc/matrix.hpp"

#include <algorithm>
#include <cstdint>

namespace gfc {
namespace {

// Bit-packed elimination for q = 2: one row is ceil(cols/64) words.
struct BitRows {
    std::size_t cols = 0, words = 0;
    std::vector<std::uint64_t> w;

    BitRows(const MatrixGF& M)
        : cols(M.cols()), words((M.cols() + 63) / 64), w(M.rows() * words, 0) {
        for (std::size_t r = 0; r < M.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (M.at(r, c)) w[r * words + c / 64] |= std::uint64_t(1) << (c % 64);
    }
    bool get(std::size_t r, std::size_t c) const {
        return (w[r * words + c / 64] >> (c % 64)) & 1;
    }
    void xor_rows(std::size_t dst, std::size_t src) {
        std::uint64_t* d = w.data() + dst * words;
        const std::uint64_t* s = w.data() + src * words;
        for (std::size_t i = 0; i < words; ++i) d[i] ^= s[i];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap_ranges(w.begin() + a * words, w.begin() + (a + 1) * words,
                         w.begin() + b * words);
    }
};

RrefResult rref_binary(const MatrixGF& M) {
    BitRows B(M);
    const std::size_t nr = M.rows(), nc = M.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && !B.get(p, c)) ++p;
        if (p == nr) continue;
        B.swap_rows(r, p);
        for (std::size_t i = 0; i < nr; ++i)
            if (i != r && B.get(i, c)) B.xor_rows(i, r);
        pivots.push_back(c);
        ++r;
    }
    MatrixGF R(M.ctx(), nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t c = 0; c < nc; ++c)
            if (B.get(i, c)) R.set(i, c, 1);
    return {std::move(R), pivots.size(), std::move(pivots)};
}

RrefResult rref_generic(const MatrixGF& M) {
    const FieldCtx& F = *M.ctx();
    MatrixGF R = M;
    const std::size_t nr = M.rows(), nc = M.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && R.at(p, c) == 0) ++p;
        if (p == nr) continue;
        if (p != r)
            for (std::size_t j = 0; j < nc; ++j) {
                elem_t t = R.at(r, j);
                R.set(r, j, R.at(p, j));
                R.set(p, j, t);
            }
        elem_t piv_inv = F.inv(R.at(r, c));
        for (std::size_t j = c; j < nc; ++j) R.set(r, j, F.mul(piv_inv, R.at(r, j)));
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r) continue;
            elem_t f = R.at(i, c);
            if (f == 0) continue;
            for (std::size_t j = c; j < nc; ++j)
                R.set(i, j, F.sub(R.at(i, j), F.mul(f, R.at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(R), pivots.size(), std::move(pivots)};
}

} // namespace

MatrixGF MatrixGF::from_rows(FieldPtr ctx, const std::vector<std::vector<elem_t>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows[0].size();
    MatrixGF M(std::move(ctx), rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw ValueError("from_rows: ragged rows");
        for (std::size_t c = 0; c < nc; ++c) {
            if (rows[r][c] >= M.ctx()->q()) throw ValueError("from_rows: entry out of field range");
            M.set(r, c, rows[r][c]);
        }
    }
    return M;
}

MatrixGF MatrixGF::identity(FieldPtr ctx, std::size_t n) {
    MatrixGF M(std::move(ctx), n, n);
    for (std::size_t i = 0; i < n; ++i) M.set(i, i, 1);
    return M;
}

RrefResult rref_rank(const MatrixGF& M) {
    if (M.ctx()->q() == 2) return rref_binary(M);
    return rref_generic(M);
}

std::size_t rank_of(const MatrixGF& M) { return rref_rank(M).rank; }

MatrixGF nullspace(const MatrixGF& M) {
    const FieldCtx& F = *M.ctx();
    RrefResult rr = rref_rank(M);
    const std::size_t nc = M.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;

    MatrixGF N(M.ctx(), nc - rr.rank, nc);
    std::size_t out = 0;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        N.set(out, f, 1);
        for (std::size_t i = 0; i < rr.rank; ++i)
            N.set(out, rr.pivots[i], F.neg(rr.R.at(i, f)));
        ++out;
    }
    return N;
}

MatrixGF submatrix_columns(const MatrixGF& M, const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= M.cols()) throw ValueError("submatrix_columns: index out of range");
        if (i > 0 && idx[i] <= idx[i - 1])
            throw ValueError("submatrix_columns: indices must be strictly increasing");
    }
    MatrixGF S(M.ctx(), M.rows(), idx.size());
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) S.set(r, c, M.at(r, idx[c]));
    return S;
}

MatrixGF transpose(const MatrixGF& M) {
    MatrixGF T(M.ctx(), M.cols(), M.rows());
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c) T.set(c, r, M.at(r, c));
    return T;
}

MatrixGF mat_mul(const MatrixGF& A, const MatrixGF& B) {
    if (A.cols() != B.rows()) throw ValueError("mat_mul: dimension mismatch");
    const FieldCtx& F = *A.ctx();
    MatrixGF C(A.ctx(), A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t t = 0; t < A.cols(); ++t) {
            elem_t a = A.at(i, t);
            if (a == 0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) {
                elem_t prod = F.mul(a, B.at(t, j));
                if (prod) C.set(i, j, F.add(C.at(i, j), prod));
            }
        }
    return C;
}

MatrixGF concat_cols(const MatrixGF& A, const MatrixGF& B) {
    if (A.rows() != B.rows()) throw ValueError("concat_cols: row count mismatch");
    MatrixGF C(A.ctx(), A.rows(), A.cols() + B.cols());
    for (std::size_t r = 0; r < A.rows(); ++r) {
        for (std::size_t c = 0; c < A.cols(); ++c) C.set(r, c, A.at(r, c));
        for (std::size_t c = 0; c < B.cols(); ++c) C.set(r, A.cols() + c, B.at(r, c));
    }
    return C;
}

std::vector<elem_t> vec_mat(const std::vector<elem_t>& y, const MatrixGF& M) {
    if (y.size() != M.rows()) throw ValueError("vec_mat: dimension mismatch");
    const FieldCtx& F = *M.ctx();
    std::vector<elem_t> out(M.cols(), 0);
    for (std::size_t r = 0; r < y.size(); ++r) {
        if (y[r] == 0) continue;
        const elem_t* row = M.row(r);
        for (std::size_t c = 0; c < M.cols(); ++c) {
            elem_t prod = F.mul(y[r], row[c]);
            if (prod) out[c] = F.add(out[c], prod);
        }
    }
    return out;
}

bool is_zero(const MatrixGF& M) {
    for (elem_t v : M.data())
        if (v) return false;
    return true;
}

} // namespace gfc
