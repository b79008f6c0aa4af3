#include "gfc/matrix.hpp"

#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <random>

using namespace gfc;

namespace {

MatrixGF random_matrix(FieldPtr ctx, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    MatrixGF M(ctx, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) M.set(i, j, elem_t(rng() % ctx->q()));
    return M;
}

} // namespace

TEST_SUITE("matrix") {

TEST_CASE("construction and validation") {
    const FieldPtr F = make_field(3);
    const MatrixGF M = MatrixGF::from_rows(F, {{1, 2, 0}, {0, 1, 1}});
    CHECK(M.rows() == 2);
    CHECK(M.cols() == 3);
    CHECK(M.at(0, 1) == 2);
    CHECK_THROWS_AS(MatrixGF::from_rows(F, {{1, 2}, {1}}), ValueError);     // ragged
    CHECK_THROWS_AS(MatrixGF::from_rows(F, {{1, 3}}), ValueError);          // out of range
    CHECK(MatrixGF::identity(F, 3).at(1, 1) == 1);
    CHECK(MatrixGF::identity(F, 3).at(0, 1) == 0);
}

TEST_CASE("rref pinned over GF(2) and GF(3)") {
    const FieldPtr F2 = make_field(2);
    // row space of a dependent set
    const MatrixGF A = MatrixGF::from_rows(F2, {{1, 1, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 0}});
    const RrefResult r = rref_rank(A);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.R == MatrixGF::from_rows(F2, {{1, 0, 1, 0}, {0, 1, 1, 1}, {0, 0, 0, 0}}));

    const FieldPtr F3 = make_field(3);
    const MatrixGF B = MatrixGF::from_rows(F3, {{2, 1, 1}, {1, 2, 0}});
    const RrefResult rb = rref_rank(B);
    CHECK(rb.rank == 2);
    // row1 - row0/2 zeroes columns 0 and 1, so the pivots are columns 0 and 2
    CHECK(rb.pivots == std::vector<std::size_t>{0, 2});
    CHECK(rb.R == MatrixGF::from_rows(F3, {{1, 2, 0}, {0, 0, 1}}));
}

TEST_CASE("rref is idempotent and rank-stable") {
    std::mt19937_64 rng(11);
    for (std::uint32_t q : {2u, 3u, 5u, 4u, 9u}) {
        const FieldPtr F = make_field(q);
        for (int it = 0; it < 40; ++it) {
            const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 7;
            const MatrixGF M = random_matrix(F, r, c, rng);
            const RrefResult a = rref_rank(M);
            const RrefResult b = rref_rank(a.R);
            CHECK(a.R == b.R);
            CHECK(a.rank == b.rank);
            CHECK(a.rank == rank_of(M));
            CHECK(a.pivots.size() == a.rank);
        }
    }
}

TEST_CASE("row operations preserve the row space") {
    std::mt19937_64 rng(12);
    const FieldPtr F = make_field(5);
    for (int it = 0; it < 30; ++it) {
        const MatrixGF M = random_matrix(F, 3, 6, rng);
        // left-multiplying by an invertible matrix keeps the RREF
        MatrixGF T = random_matrix(F, 3, 3, rng);
        while (rank_of(T) < 3) T = random_matrix(F, 3, 3, rng);
        CHECK(rref_rank(mat_mul(T, M)).R == rref_rank(M).R);
    }
}

TEST_CASE("nullspace annihilates and has the right dimension") {
    std::mt19937_64 rng(13);
    for (std::uint32_t q : {2u, 3u, 5u, 8u}) {
        const FieldPtr F = make_field(q);
        for (int it = 0; it < 30; ++it) {
            const std::size_t r = 1 + rng() % 4, c = 2 + rng() % 6;
            const MatrixGF M = random_matrix(F, r, c, rng);
            const MatrixGF N = nullspace(M);
            CHECK(N.rows() == c - rank_of(M));
            if (N.rows() > 0) {
                CHECK(N.cols() == c);
                CHECK(rank_of(N) == N.rows());
                CHECK(is_zero(mat_mul(M, transpose(N))));
            }
        }
    }
}

TEST_CASE("product, transpose, concat, vec_mat identities") {
    std::mt19937_64 rng(14);
    const FieldPtr F = make_field(7);
    const MatrixGF A = random_matrix(F, 3, 4, rng);
    const MatrixGF B = random_matrix(F, 4, 5, rng);
    CHECK(transpose(transpose(A)) == A);
    CHECK(transpose(mat_mul(A, B)) == mat_mul(transpose(B), transpose(A)));
    CHECK(mat_mul(MatrixGF::identity(F, 3), A) == A);
    const MatrixGF AB = concat_cols(A, A);
    CHECK(AB.cols() == 8);
    CHECK(AB.at(2, 7) == A.at(2, 3));
    const std::vector<elem_t> y = {1, 2, 3};
    const std::vector<elem_t> yA = vec_mat(y, A);
    REQUIRE(yA.size() == 4);
    for (std::size_t j = 0; j < 4; ++j) {
        elem_t s = 0;
        for (std::size_t i = 0; i < 3; ++i) s = F->add(s, F->mul(y[i], A.at(i, j)));
        CHECK(yA[j] == s);
    }
    CHECK_THROWS_AS(mat_mul(A, A), ValueError);
    CHECK_THROWS_AS(vec_mat({1, 2}, A), ValueError);
}

TEST_CASE("submatrix_columns") {
    const FieldPtr F = make_field(2);
    const MatrixGF M = MatrixGF::from_rows(F, {{1, 0, 1, 1}, {0, 1, 0, 1}});
    CHECK(submatrix_columns(M, {0, 2, 3}) ==
          MatrixGF::from_rows(F, {{1, 1, 1}, {0, 0, 1}}));
    CHECK_THROWS_AS(submatrix_columns(M, {2, 1}), ValueError);  // not increasing
    CHECK_THROWS_AS(submatrix_columns(M, {0, 4}), ValueError);  // out of range
    CHECK(submatrix_columns(M, {}).cols() == 0);
}

TEST_CASE("bit-packed GF(2) path agrees with the generic path") {
    // same matrix over GF(2) and as the {0,1} subset of GF(3) must give the
    // same rank whenever no carry can occur: use permutation-like matrices
    std::mt19937_64 rng(15);
    const FieldPtr F2 = make_field(2);
    for (int it = 0; it < 50; ++it) {
        const std::size_t n = 2 + rng() % 6;
        MatrixGF M(F2, n, n);
        // random permutation matrix plus one duplicated row
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t i = 0; i < n; ++i) M.set(i, perm[i], 1);
        CHECK(rank_of(M) == n);
        MatrixGF D = M;
        for (std::size_t j = 0; j < n; ++j) D.set(0, j, M.at(1, j));
        CHECK(rank_of(D) == n - 1);
    }
}

} // TEST_SUITE
