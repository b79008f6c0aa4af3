#include "gfc/minimality.hpp"

#include "gfc/constructions.hpp"

#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <random>

using namespace gfc;

namespace {

LinearCode random_code(std::uint32_t q, std::size_t k, std::size_t n, std::mt19937_64& rng) {
    const FieldPtr F = make_field(q);
    for (;;) {
        MatrixGF G(F, k, n);
        bool nonzero = false;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const elem_t x = elem_t(rng() % q);
                G.set(i, j, x);
                nonzero |= x != 0;
            }
        if (nonzero) return LinearCode::from_generator(F, G);
    }
}

bool subset_of(const SupportSet& a, const SupportSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

TEST_SUITE("minimality") {

TEST_CASE("per-subcode criterion matches the pairwise definition") {
    std::mt19937_64 rng(41);
    for (std::uint32_t q : {2u, 3u}) {
        for (int it = 0; it < 6; ++it) {
            const LinearCode C = random_code(q, 3 + rng() % 2, 6 + rng() % 4, rng);
            const std::uint32_t k = std::uint32_t(C.k());
            for (std::uint32_t s = 1; s < k; ++s) {
                const SubspaceEnumerator en(C.ctx(), k, s);
                if (en.count() > 200) continue;
                std::vector<SupportSet> supp(en.count());
                en.for_range(0, en.count(), [&](const SubspaceBasis& sb) {
                    supp[sb.ordinal] = subcode_support(C, sb.basis);
                });
                for (std::uint64_t i = 0; i < en.count(); ++i) {
                    bool pairwise = true;
                    for (std::uint64_t j = 0; j < en.count() && pairwise; ++j)
                        if (j != i && subset_of(supp[j], supp[i])) pairwise = false;
                    CHECK(is_minimal_subcode(C, en.at(i).basis) == pairwise);
                }
            }
        }
    }
}

TEST_CASE("rank and brute sweeps agree, witnesses included") {
    std::mt19937_64 rng(42);
    auto agree = [](const LinearCode& C, std::uint32_t s) {
        const SMinimality a = is_s_minimal(C, s, MinimalityAlg::Rank);
        const SMinimality b = is_s_minimal(C, s, MinimalityAlg::Brute);
        CHECK(a.minimal == b.minimal);
        REQUIRE(a.witness.has_value() == b.witness.has_value());
        if (a.witness) {
            CHECK(a.witness->container_ordinal == b.witness->container_ordinal);
            CHECK(a.witness->contained_ordinal == b.witness->contained_ordinal);
            CHECK(a.witness->container_basis == b.witness->container_basis);
            CHECK(a.witness->contained_basis == b.witness->contained_basis);
            CHECK(a.witness->container_support == b.witness->container_support);
            CHECK(a.witness->contained_support == b.witness->contained_support);
        }
    };
    for (std::uint32_t q : {2u, 3u, 5u}) {
        for (int it = 0; it < 20; ++it) {
            const LinearCode C = random_code(q, 2 + rng() % 3, 4 + rng() % 9, rng);
            for (std::uint32_t s = 1; s <= C.k(); ++s) agree(C, s);
        }
    }
    for (const char* name : {"ex9_5_3", "ss24_5_2", "ex26_5_2"}) {
        const LinearCode C = example_code(name);
        for (std::uint32_t s = 1; s <= C.k(); ++s) agree(C, s);
    }
}

TEST_CASE("witnesses are genuine failures") {
    std::mt19937_64 rng(43);
    int seen = 0;
    for (int it = 0; it < 80 && seen < 10; ++it) {
        const LinearCode C = random_code(2, 3 + rng() % 2, 5 + rng() % 5, rng);
        for (std::uint32_t s = 1; s < C.k(); ++s) {
            const SMinimality r = is_s_minimal(C, s);
            if (r.minimal) continue;
            ++seen;
            REQUIRE(r.witness.has_value());
            const MinimalityWitness& w = *r.witness;
            CHECK(w.container_ordinal != w.contained_ordinal);
            CHECK(w.container_basis.rows() == s);
            CHECK(w.contained_basis.rows() == s);
            CHECK(subcode_support(C, w.container_basis) == w.container_support);
            CHECK(subcode_support(C, w.contained_basis) == w.contained_support);
            CHECK(subset_of(w.contained_support, w.container_support));
            CHECK_FALSE(is_minimal_subcode(C, w.container_basis));
            const SubspaceEnumerator en(C.ctx(), std::uint32_t(C.k()), s);
            CHECK(en.ordinal_of(w.container_basis) == w.container_ordinal);
            CHECK(en.ordinal_of(w.contained_basis) == w.contained_ordinal);
        }
    }
    CHECK(seen >= 5);
}

TEST_CASE("hierarchy conditions: gap, ratio, inconclusive") {
    const WeightReport golay = support_weights(example_code("golay12_3"));
    CHECK(gab_check(golay, 1) == GabVerdict::Inconclusive);  // D_1=12 vs d_2=8
    const WeightReport s28 = support_weights(example_code("ss28_5_2"));
    CHECK(gab_check(s28, 2) == GabVerdict::HoldsByGap);  // D_2=24 < d_3=25
    const WeightReport s24 = support_weights(example_code("ss24_5_2"));
    CHECK(gab_check(s24, 1) == GabVerdict::HoldsByGap);  // D_1=16 < d_2=18

    // The ratio branch is reached only when the gap fails; exercise it on a
    // hand-built report (the check is a pure function of the numbers).
    WeightReport synth;
    synth.n = 20;
    synth.k = 4;
    synth.q = 2;
    synth.rows.resize(2);
    synth.rows[0].s = 1;
    synth.rows[0].min_weight = 10;
    synth.rows[0].max_weight = 14;
    synth.rows[1].s = 2;
    synth.rows[1].min_weight = 13;
    CHECK(gab_check(synth, 1) == GabVerdict::HoldsByRatio);  // 14*2 < 10*3
    synth.rows[0].min_weight = 9;                            // 28 < 27 fails
    CHECK(gab_check(synth, 1) == GabVerdict::Inconclusive);

    CHECK(gab_name(GabVerdict::HoldsByGap) == "gap");
    CHECK(gab_name(GabVerdict::HoldsByRatio) == "ratio");
    CHECK(gab_name(GabVerdict::Inconclusive) == "inconclusive");
    CHECK_THROWS_AS(gab_check(golay, 0), ValueError);
    CHECK_THROWS_AS(gab_check(golay, 6), ValueError);
}

TEST_CASE("per-support-size test tiers") {
    const WeightReport rep = support_weights(example_code("ss28_5_2"));
    // s=1: d_1=14, d_2=21. Below d_2: small support. 21*2=42 < 14*3: ratio.
    CHECK(subcode_test(rep, 20, 1) == SubcodeTest::SmallSupport);
    CHECK(subcode_test(rep, 21, 1) == SubcodeTest::Undecided);  // 42 < 42 fails
    const WeightReport g = support_weights(example_code("golay12_3"));
    // s=1: d_1=6, d_2=8. m=8: 8*6=48 < 6*8=48 fails; m=7 < d_2.
    CHECK(subcode_test(g, 7, 1) == SubcodeTest::SmallSupport);
    CHECK(subcode_test(g, 8, 1) == SubcodeTest::Undecided);
    // q=3, s=2: m=9 against d_2=8: 9*(27-3)=216 < 8*(27-1)=208 fails.
    CHECK(subcode_test(g, 9, 2) == SubcodeTest::Undecided);
}

TEST_CASE("exact-regime flags") {
    const WeightReport e9 = support_weights(example_code("ex9_5_3"));
    CHECK(exact_regimes(e9, 2).small_support_iff);        // d_3 = 7 = n-k+s+1
    CHECK_FALSE(exact_regimes(e9, 1).small_support_iff);  // d_2 = 5 < 6
    const WeightReport e12 = support_weights(example_code("ex12_5_5"));
    CHECK(exact_regimes(e12, 1).small_support_iff);  // d_2 = 9 = 12-5+2
    const WeightReport g = support_weights(example_code("golay12_3"));
    CHECK(exact_regimes(g, 1).ratio_iff);  // (12-6+1)*6 = 42 < 6*8 = 48
    CHECK_FALSE(exact_regimes(e9, 1).ratio_iff);  // 5*2 = 10 >= 3*3 = 9
}

TEST_CASE("profile verdict columns are pinned") {
    auto verdicts = [](const char* name) {
        const MinimalityProfile p = minimality_profile(example_code(name));
        std::vector<bool> v;
        for (const auto& row : p.rows) v.push_back(row.minimal);
        return v;
    };
    CHECK(verdicts("ss28_5_2") == std::vector<bool>{true, true, false, false});
    CHECK(verdicts("ss117_5_3") == std::vector<bool>{true, true, false, false});
    CHECK(verdicts("golay12_3") ==
          std::vector<bool>{false, false, false, false, false});
    const MinimalityProfile p = minimality_profile(example_code("ex9_5_3"));
    REQUIRE(p.rows.size() == 4);
    CHECK(p.rows[0].d_next == 5);
    CHECK(p.rows[0].D_s == 8);
    CHECK(p.rows[1].regimes.small_support_iff);
}

TEST_CASE("profile csv golden") {
    const std::string csv = profile_csv(minimality_profile(example_code("ss24_5_2")));
    CHECK(csv.rfind("s,d_s+1,D_s,verdict,condition\n", 0) == 0);
    CHECK(csv.find("1,18,16,yes,gap\n") != std::string::npos);
}

TEST_CASE("range and budget errors") {
    const LinearCode C = example_code("ex9_5_3");
    CHECK_THROWS_AS(is_s_minimal(C, 0), ValueError);
    CHECK_THROWS_AS(is_s_minimal(C, 6), ValueError);
    CHECK_THROWS_AS(is_s_minimal(C, 2, MinimalityAlg::Rank, 1, /*budget=*/10),
                    BudgetError);
    const FieldPtr F = make_field(2);
    MatrixGF bad(F, 2, 5);
    bad.set(0, 0, 1);
    bad.set(1, 0, 1);  // rank 1
    CHECK_THROWS_AS(is_minimal_subcode(C, bad), ValueError);
}

} // TEST_SUITE
