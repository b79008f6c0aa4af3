#include "gfc/constructions.hpp"

#include "gfc/minimality.hpp"

#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <random>

using namespace gfc;

TEST_SUITE("constructions") {

TEST_CASE("simplex generator is pinned") {
    const FieldPtr F2 = make_field(2);
    CHECK(simplex_code(F2, 3).generator() ==
          MatrixGF::from_rows(F2, {{0, 0, 0, 1, 1, 1, 1},
                                   {0, 1, 1, 0, 0, 1, 1},
                                   {1, 0, 1, 0, 1, 0, 1}}));
    const FieldPtr F3 = make_field(3);
    CHECK(simplex_code(F3, 2).generator() ==
          MatrixGF::from_rows(F3, {{0, 1, 1, 1}, {1, 0, 1, 2}}));
}

TEST_CASE("simplex hierarchy is constant per level") {
    for (auto [q, k] : {std::pair<std::uint32_t, std::uint32_t>{2, 4}, {3, 3}}) {
        const LinearCode S = simplex_code(make_field(q), k);
        std::uint64_t qk = 1;
        for (std::uint32_t i = 0; i < k; ++i) qk *= q;
        CHECK(S.n() == (qk - 1) / (q - 1));
        CHECK(is_projective(S));
        const WeightReport rep = support_weights(S);
        std::uint64_t qks = qk;
        for (std::uint32_t s = 1; s <= k; ++s) {
            qks /= q;
            CHECK(rep.d(s) == (qk - qks) / (q - 1));
            CHECK(rep.D(s) == rep.d(s));
        }
    }
}

TEST_CASE("punctured simplex") {
    const FieldPtr F = make_field(2);
    const std::vector<std::size_t> coords{0, 3, 7};
    CHECK(punctured_simplex(F, 4, coords).generator() ==
          puncture(simplex_code(F, 4), coords).generator());

    // guarantee boundary: any t columns keep s-minimality iff t < q^(k-s-1)
    CHECK(punctured_simplex_minimal_guaranteed(2, 5, 7, 1));
    CHECK_FALSE(punctured_simplex_minimal_guaranteed(2, 5, 8, 1));
    CHECK(punctured_simplex_minimal_guaranteed(2, 5, 3, 2));
    CHECK_FALSE(punctured_simplex_minimal_guaranteed(2, 5, 4, 2));
    CHECK(punctured_simplex_minimal_guaranteed(2, 5, 1, 3));
    CHECK_FALSE(punctured_simplex_minimal_guaranteed(2, 5, 2, 3));
    CHECK(punctured_simplex_minimal_guaranteed(2, 5, 0, 4));
    CHECK_FALSE(punctured_simplex_minimal_guaranteed(2, 5, 1, 4));
    CHECK(punctured_simplex_minimal_guaranteed(3, 4, 8, 1));
    CHECK_FALSE(punctured_simplex_minimal_guaranteed(3, 4, 9, 1));

    // guaranteed cases really are minimal
    std::mt19937_64 rng(51);
    for (int it = 0; it < 10; ++it) {
        std::vector<std::size_t> all(15);
        for (std::size_t i = 0; i < 15; ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(3);  // t=3 < 2^(4-1-1)
        CHECK(is_s_minimal(punctured_simplex(F, 4, all), 1).minimal);
    }
    for (std::size_t c = 0; c < 15; ++c)  // t=1 < 2^(4-2-1)
        CHECK(is_s_minimal(punctured_simplex(F, 4, {c}), 2).minimal);
    // past the bound the guarantee genuinely fails: removing the projective
    // line {e3, e2, e2+e3} (columns 0,1,2) kills 2-minimality
    CHECK_FALSE(is_s_minimal(punctured_simplex(F, 4, {0, 1, 2}), 2).minimal);
}

TEST_CASE("registry parameters are pinned") {
    struct Pin {
        const char* name;
        std::uint32_t q, k, n, d;
    };
    const Pin pins[] = {
        {"ex9_5_3", 2, 5, 9, 3},     {"ex12_5_5", 5, 5, 12, 6},
        {"golay12_3", 3, 6, 12, 6},  {"ss28_5_2", 2, 5, 28, 14},
        {"ss24_5_2", 2, 5, 24, 12},  {"ss117_5_3", 3, 5, 117, 78},
        {"ss116_5_3", 3, 5, 116, 77}, {"ex26_5_2", 2, 5, 26, 12},
    };
    for (const Pin& p : pins) {
        const LinearCode C = example_code(p.name);
        CHECK(C.q() == p.q);
        CHECK(C.k() == p.k);
        CHECK(C.n() == p.n);
        CHECK(scan_codewords(C).min_weight == p.d);
    }
    CHECK(example_names() ==
          std::vector<std::string>{"ex9_5_3", "ex12_5_5", "golay12_3", "ss28_5_2",
                                   "ss24_5_2", "ss117_5_3", "ss116_5_3", "ex26_5_2"});
    CHECK_THROWS_AS(example_code("nope"), ValueError);
}

TEST_CASE("block removals match the registry codes") {
    // same construction call, bit for bit
    CHECK(example_code("ss28_5_2").generator() ==
          solomon_stiffler(make_field(2), 5, {2}).generator());
    CHECK(example_code("ss116_5_3").generator() ==
          solomon_stiffler(make_field(3), 5, {1, 2}).generator());
    // registry variants remove differently placed blocks: equal weight data
    const LinearCode a = solomon_stiffler(make_field(2), 5, {3});
    CHECK(scan_codewords(a).dist == scan_codewords(example_code("ss24_5_2")).dist);
    const LinearCode b = solomon_stiffler(make_field(3), 5, {2});
    CHECK(scan_codewords(b).dist == scan_codewords(example_code("ss117_5_3")).dist);
    CHECK(hierarchy_csv(support_weights(b)) ==
          hierarchy_csv(support_weights(example_code("ss117_5_3"))));
}

TEST_CASE("block-removal weight predictions match enumeration") {
    auto agree = [](std::uint32_t q, std::uint32_t k, const std::vector<std::uint32_t>& u) {
        const LinearCode C = solomon_stiffler(make_field(q), k, u);
        CHECK(ss_predicted_weights(q, k, u) == scan_codewords(C).dist);
    };
    agree(2, 5, {1});
    agree(2, 5, {2});
    agree(2, 5, {3});
    agree(2, 5, {4});
    agree(3, 5, {1, 2});
    agree(3, 4, {1, 3});
    agree(5, 3, {1, 2});
    agree(3, 6, {2, 3});
    // prediction pin worked out by hand: q=2, k=5, one block of dim 3
    CHECK(ss_predicted_weights(2, 5, {3}) == WeightDistribution{{12, 28}, {16, 3}});

    CHECK_THROWS_AS(ss_predicted_weights(2, 5, {1, 2}), ValueError);  // two blocks need q>2
    CHECK_THROWS_AS(ss_predicted_weights(7, 7, {1, 2, 3}), ValueError);  // three blocks
    CHECK_THROWS_AS(solomon_stiffler(make_field(2), 5, {2, 2}), ValueError);
    CHECK_THROWS_AS(solomon_stiffler(make_field(2), 5, {0}), ValueError);
    CHECK_THROWS_AS(solomon_stiffler(make_field(2), 5, {2, 4}), ValueError);  // sum > k
}

TEST_CASE("block-removal minimality guarantee") {
    CHECK(ss_minimal_guaranteed(2, 5, {2}, 1));
    CHECK(ss_minimal_guaranteed(2, 5, {2}, 2));
    CHECK_FALSE(ss_minimal_guaranteed(2, 5, {2}, 3));
    CHECK(ss_minimal_guaranteed(3, 5, {1, 2}, 2));
    CHECK_FALSE(ss_minimal_guaranteed(3, 5, {1, 2}, 3));
    CHECK_FALSE(ss_minimal_guaranteed(2, 5, {1, 2}, 1));  // t=2 > q-1
    // guarantee is honest: where it says yes, the sweep agrees
    CHECK(is_s_minimal(example_code("ss28_5_2"), 2).minimal);
    CHECK(is_s_minimal(example_code("ss116_5_3"), 2).minimal);
}

TEST_CASE("padding shifts the whole hierarchy") {
    const LinearCode C = example_code("ex9_5_3");
    const WeightReport base = support_weights(C);
    for (std::uint32_t t : {1u, 2u}) {
        const LinearCode P = pad_with_simplex(C, t);
        CHECK(P.n() == 9 + t * 31);
        const WeightReport rep = support_weights(P);
        std::uint32_t qks = 32;
        for (std::uint32_t s = 1; s <= 5; ++s) {
            qks /= 2;
            CHECK(rep.d(s) == base.d(s) + t * (32 - qks));
            CHECK(rep.D(s) == base.D(s) + t * (32 - qks));
        }
    }
    CHECK(pad_with_simplex(C, 0).generator() == C.generator());
}

TEST_CASE("minimum padding to open a gap") {
    const WeightReport g = support_weights(example_code("golay12_3"));
    for (std::uint32_t s = 1; s <= 5; ++s) CHECK(min_padding_t(g, s) == 1);
    // ss28 already has the gap d_{s+1} > D_s at s=1,2 but not at s=3,4
    const WeightReport s28 = support_weights(example_code("ss28_5_2"));
    CHECK(min_padding_t(s28, 1) == 0);
    CHECK(min_padding_t(s28, 2) == 0);
    CHECK(min_padding_t(s28, 3) == 1);
    CHECK(min_padding_t(s28, 4) == 1);
    const WeightReport e9 = support_weights(example_code("ex9_5_3"));
    CHECK(min_padding_t(e9, 1) == 1);
    // and the padded code really has the gap
    const WeightReport p = support_weights(pad_with_simplex(example_code("ex9_5_3"), 1));
    CHECK(p.D(1) < p.d(2));
    CHECK(gab_check(p, 1) == GabVerdict::HoldsByGap);
}

TEST_CASE("ratio-violating extension") {
    const ExtensionResult ext = ab_violating_extend(example_code("ss28_5_2"), 2);
    CHECK(ext.appended == 9);
    CHECK(ext.code.n() == 37);
    CHECK(ext.code.k() == 5);
    CHECK(ext.verified_s_minimal);
    const WeightReport rep = support_weights(ext.code);
    CHECK(rep.d(1) == 14);
    CHECK(rep.D(1) == 25);
    // the s=2 ratio condition now fails by construction ...
    CHECK(bigint(rep.d(2)) * 7 <= bigint(rep.D(1)) * 6);
    // ... so a second extension at s=2 has no margin to work with
    CHECK_THROWS_AS(ab_violating_extend(ext.code, 2), ValueError);
    // bases that are not s-minimal are rejected
    CHECK_THROWS_AS(ab_violating_extend(example_code("golay12_3"), 1), ValueError);
}

TEST_CASE("cyclotomic cosets") {
    CHECK(cyclotomic_cosets(2, 7) ==
          std::vector<std::vector<std::uint32_t>>{{0}, {1, 2, 4}, {3, 5, 6}});
    const auto c311 = cyclotomic_cosets(3, 11);
    REQUIRE(c311.size() == 3);
    CHECK(c311[1] == std::vector<std::uint32_t>{1, 3, 4, 5, 9});
    const auto c285 = cyclotomic_cosets(2, 85);
    std::size_t covered = 0;
    for (const auto& c : c285) covered += c.size();
    CHECK(covered == 85);
    const auto it = std::find_if(c285.begin(), c285.end(),
                                 [](const auto& c) { return c.front() == 37; });
    REQUIRE(it != c285.end());
    CHECK(*it == std::vector<std::uint32_t>{37, 41, 61, 63, 73, 74, 79, 82});
}

TEST_CASE("cyclic codes") {
    const LinearCode ham = cyclic_code(2, 7, {0, 1});
    CHECK(ham.n() == 7);
    CHECK(ham.k() == 4);
    CHECK(scan_codewords(ham).dist == WeightDistribution{{3, 7}, {4, 7}, {7, 1}});

    const LinearCode g11 = cyclic_code(3, 11, {0, 1});
    CHECK(g11.n() == 11);
    CHECK(g11.k() == 6);
    CHECK(scan_codewords(g11).dist ==
          WeightDistribution{{5, 132}, {6, 132}, {8, 330}, {9, 110}, {11, 24}});

    const LinearCode c85 = cyclic_code(2, 85, {37});
    CHECK(c85.n() == 85);
    CHECK(c85.k() == 8);
    CHECK(scan_codewords(c85).dist == WeightDistribution{{40, 170}, {48, 85}});

    // every cyclic shift of a codeword stays in the code
    const MatrixGF& G = g11.generator();
    for (std::size_t r = 0; r < G.rows(); ++r) {
        std::vector<elem_t> w(g11.n());
        for (std::size_t j = 0; j < g11.n(); ++j) w[(j + 1) % g11.n()] = G.at(r, j);
        CHECK(in_row_space(g11.rref_generator(), w));
    }

    CHECK_THROWS_AS(cyclic_code(4, 5, {0}), ValueError);   // q must be prime
    CHECK_THROWS_AS(cyclic_code(2, 8, {0}), ValueError);   // gcd(n, q) != 1
    CHECK_THROWS_AS(cyclic_code(2, 7, {2}), ValueError);   // 2 is not a leader
    CHECK_THROWS_AS(cyclic_code(2, 7, {}), ValueError);    // empty h
}

} // TEST_SUITE
