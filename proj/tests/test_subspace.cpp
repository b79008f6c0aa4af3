#include "gfc/subspace.hpp"

#include "doctest.h"

#include <cstdint>
#include <map>
#include <vector>

using namespace gfc;

TEST_SUITE("subspace") {

TEST_CASE("gaussian binomials, exact") {
    CHECK(gaussian_binomial(3, 1, 2) == 7);
    CHECK(gaussian_binomial(5, 2, 2) == 155);
    CHECK(gaussian_binomial(5, 2, 3) == 1210);
    CHECK(gaussian_binomial(5, 2, 5) == 20306);
    CHECK(gaussian_binomial(6, 2, 3) == 11011);
    CHECK(gaussian_binomial(6, 3, 3) == 33880);
    CHECK(gaussian_binomial(8, 2, 2) == 10795);
    CHECK(gaussian_binomial(8, 3, 2) == 97155);
    CHECK(gaussian_binomial(8, 4, 2) == 200787);
    CHECK(gaussian_binomial(4, 0, 7) == 1);
    CHECK(gaussian_binomial(4, 4, 7) == 1);
    CHECK(gaussian_binomial(4, 5, 7) == 0);
    for (std::uint32_t k = 1; k <= 8; ++k)
        for (std::uint32_t s = 0; s <= k; ++s)
            for (std::uint32_t q : {2u, 3u, 5u, 4u})
                CHECK(gaussian_binomial(k, s, q) == gaussian_binomial(k, k - s, q));
    // q-Pascal recurrence, exact across a grid
    for (std::uint32_t k = 2; k <= 12; ++k)
        for (std::uint32_t s = 1; s <= k - 1; ++s)
            for (std::uint32_t q : {2u, 3u, 9u})
                CHECK(gaussian_binomial(k, s, q) ==
                      gaussian_binomial(k - 1, s - 1, q) +
                          boost::multiprecision::pow(bigint(q), s) *
                              gaussian_binomial(k - 1, s, q));
    // huge values stay exact (about 3.46 * 2^225)
    CHECK(gaussian_binomial(30, 15, 2) > bigint(1) << 220);
    CHECK(gaussian_binomial(30, 15, 2) < bigint(1) << 235);
}

TEST_CASE("vector codes round-trip") {
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const std::uint32_t k = 4;
        std::vector<elem_t> v(k);
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < k; ++i) total *= q;
        for (std::uint64_t c = 0; c < total; ++c) {
            decode_vec(c, k, q, v.data());
            CHECK(encode_vec(v.data(), k, q) == c);
        }
    }
    // coordinate 0 is the least significant digit
    std::vector<elem_t> v = {2, 0, 1};
    CHECK(encode_vec(v.data(), 3, 3) == 2 + 9);
}

TEST_CASE("enumeration order is pinned for one-dimensional subspaces") {
    // q=2, k=3: pivot sets {2},{1},{0}; free entries right of the pivot count
    // up in base q with the earliest free coordinate most significant
    const FieldPtr F = make_field(2);
    SubspaceEnumerator en(F, 3, 1);
    REQUIRE(en.count() == 7);
    const std::vector<std::vector<elem_t>> want = {{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0},
                                                   {1, 0, 1}, {1, 1, 0}, {1, 1, 1}};
    for (std::uint64_t t = 0; t < 7; ++t) {
        const SubspaceBasis sb = en.at(t);
        CHECK(sb.ordinal == t);
        CHECK(sb.basis == MatrixGF::from_rows(F, {want[t]}));
    }
}

TEST_CASE("first pivot block is the identity-on-the-right block") {
    const FieldPtr F = make_field(3);
    SubspaceEnumerator en(F, 5, 2);
    const SubspaceBasis sb = en.at(0);
    // pivots {3,4}: rows (0,0,0,1,0) and (0,0,0,0,1)
    CHECK(sb.basis == MatrixGF::from_rows(F, {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
}

TEST_CASE("rank and unrank are inverse, counts match") {
    struct Case {
        std::uint32_t k, s, q;
    };
    for (const Case c : {Case{4, 2, 2}, Case{5, 2, 3}, Case{4, 3, 2}, Case{5, 1, 5},
                         Case{4, 2, 4}, Case{6, 5, 2}}) {
        const FieldPtr F = make_field(c.q);
        SubspaceEnumerator en(F, c.k, c.s);
        CHECK(bigint(en.count()) == gaussian_binomial(c.k, c.s, c.q));
        std::uint64_t seen = 0;
        en.for_range(0, en.count(), [&](const SubspaceBasis& sb) {
            CHECK(sb.ordinal == seen);
            const SubspaceBasis direct = en.at(sb.ordinal);
            CHECK(direct.basis == sb.basis);
            CHECK(en.ordinal_of(sb.basis) == sb.ordinal);
            CHECK(rank_of(sb.basis) == c.s);
            // RREF invariant
            CHECK(rref_rank(sb.basis).R == sb.basis);
            ++seen;
        });
        CHECK(seen == en.count());
    }
}

TEST_CASE("subspaces enumerate without repetition") {
    // distinct ordinals give distinct row spaces: check via canonical RREF
    const FieldPtr F = make_field(3);
    SubspaceEnumerator en(F, 4, 2);
    std::map<std::vector<elem_t>, std::uint64_t> seen;
    en.for_range(0, en.count(), [&](const SubspaceBasis& sb) {
        const auto key = sb.basis.data();
        CHECK(seen.find(key) == seen.end());
        seen[key] = sb.ordinal;
    });
    CHECK(seen.size() == en.count());
}

TEST_CASE("for_range slices agree with the full sweep") {
    const FieldPtr F = make_field(2);
    SubspaceEnumerator en(F, 6, 3);
    std::vector<std::vector<elem_t>> full;
    en.for_range(0, en.count(), [&](const SubspaceBasis& sb) { full.push_back(sb.basis.data()); });
    REQUIRE(full.size() == 1395);
    std::vector<std::vector<elem_t>> pieced;
    const std::uint64_t cuts[] = {0, 7, 130, 131, 700, 1395};
    for (int i = 0; i + 1 < 6; ++i)
        en.for_range(cuts[i], cuts[i + 1],
                     [&](const SubspaceBasis& sb) { pieced.push_back(sb.basis.data()); });
    CHECK(pieced == full);
}

TEST_CASE("ordinal_of rejects non-canonical bases") {
    const FieldPtr F = make_field(2);
    SubspaceEnumerator en(F, 4, 2);
    // not in RREF: second row has leading entry left of the first row's
    const MatrixGF M = MatrixGF::from_rows(F, {{0, 1, 0, 0}, {1, 0, 0, 0}});
    CHECK_THROWS_AS(en.ordinal_of(M), ValueError);
    const MatrixGF R = MatrixGF::from_rows(F, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK_NOTHROW(en.ordinal_of(R));
}

TEST_CASE("span table matches reduction membership") {
    for (std::uint32_t q : {2u, 3u}) {
        const std::uint32_t k = 4;
        const FieldPtr F = make_field(q);
        SpanTable table(F, k);
        REQUIRE(table.available());
        SubspaceEnumerator en(F, k, 2);
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < k; ++i) total *= q;
        std::vector<elem_t> v(k);
        en.for_range(0, en.count(), [&](const SubspaceBasis& sb) {
            REQUIRE(table.span_fits(2));
            table.load(sb.basis);
            for (std::uint64_t c = 0; c < total; ++c) {
                decode_vec(c, k, q, v.data());
                CHECK(table.contains(c) == in_row_space(sb.basis, v));
            }
        });
    }
}

TEST_CASE("multiplicity counts columns inside the subspace") {
    const FieldPtr F = make_field(2);
    const MatrixGF G = MatrixGF::from_rows(
        F, {{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 1, 1}});
    const MatrixGF B = MatrixGF::from_rows(F, {{1, 0, 0}, {0, 1, 0}});  // span{e1,e2} in GF(2)^3
    // columns of G: (1,0,0),(0,1,0),(0,0,1),(1,1,1),(1,0,1) -> 2 lie in the span
    CHECK(multiplicity_mG(G, B) == 2);
}

TEST_CASE("orthogonal complement is involutive and annihilating") {
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const FieldPtr F = make_field(q);
        SubspaceEnumerator en(F, 4, 2);
        en.for_range(0, en.count(), [&](const SubspaceBasis& sb) {
            const MatrixGF perp = orthogonal_complement(sb.basis);
            CHECK(perp.rows() == 2);
            CHECK(is_zero(mat_mul(sb.basis, transpose(perp))));
            CHECK(orthogonal_complement(perp) == sb.basis);
        });
    }
}

} // TEST_SUITE
