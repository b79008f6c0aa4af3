#include "gfc/ghw.hpp"

#include "gfc/constructions.hpp"

#include "doctest.h"

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

// Independent recomputation: walk every s-dimensional message subspace and
// histogram the subcode support sizes directly.
SupportWeightRow direct_row(const LinearCode& C, std::uint32_t s) {
    SupportWeightRow row;
    row.s = s;
    row.histogram.assign(C.n() + 1, 0);
    const SubspaceEnumerator en(C.ctx(), std::uint32_t(C.k()), s);
    en.for_range(0, en.count(), [&](const SubspaceBasis& sb) {
        ++row.histogram[subcode_support(C, sb.basis).size()];
    });
    row.subspaces_scanned = en.count();
    for (std::uint32_t j = 0; j <= C.n(); ++j)
        if (row.histogram[j]) { row.min_weight = j; break; }
    for (std::uint32_t j = std::uint32_t(C.n());; --j) {
        if (row.histogram[j]) { row.max_weight = j; break; }
        if (j == 0) break;
    }
    return row;
}

} // namespace

TEST_SUITE("ghw") {

TEST_CASE("sweep matches direct subcode enumeration on random codes") {
    std::mt19937_64 rng(31);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        for (int it = 0; it < 8; ++it) {
            const LinearCode C = random_code(q, 2 + rng() % 3, 5 + rng() % 9, rng);
            const WeightReport rep = support_weights(C);
            REQUIRE(rep.smax() == C.k());
            for (std::uint32_t s = 1; s <= rep.smax(); ++s) {
                const SupportWeightRow want = direct_row(C, s);
                const SupportWeightRow& got = rep.rows[s - 1];
                CHECK(got.histogram == want.histogram);
                CHECK(got.min_weight == want.min_weight);
                CHECK(got.max_weight == want.max_weight);
                CHECK(got.subspaces_scanned == want.subspaces_scanned);
            }
        }
    }
}

TEST_CASE("scan side follows the cost rule") {
    // golay12_3: q=3, k=6, n=12. q^(k-s) <= s*n first holds at s=3 (27 <= 36).
    const WeightReport g = support_weights(example_code("golay12_3"));
    CHECK(g.rows[0].side == ScanSide::Subcode);
    CHECK(g.rows[1].side == ScanSide::Subcode);
    CHECK(g.rows[2].side == ScanSide::Complement);
    CHECK(g.rows[3].side == ScanSide::Complement);
    CHECK(g.rows[4].side == ScanSide::Complement);
    CHECK(g.rows[5].side == ScanSide::Complement);
    // ss28_5_2: q=2, k=5, n=28. 2^4 = 16 <= 28 already at s=1.
    const WeightReport s28 = support_weights(example_code("ss28_5_2"));
    for (const auto& row : s28.rows) CHECK(row.side == ScanSide::Complement);
}

TEST_CASE("column double count across complement subspaces") {
    // Summing m_G(V) over all dim-r message subspaces counts, for each of the
    // n (nonzero) columns, the subspaces containing it: n * gb(k-1, r-1, q).
    for (const char* name : {"ex9_5_3", "golay12_3"}) {
        const LinearCode C = example_code(name);
        const std::uint32_t k = std::uint32_t(C.k());
        for (std::uint32_t r = 1; r < k; ++r) {
            const SubspaceEnumerator en(C.ctx(), k, r);
            std::uint64_t sum = 0;
            en.for_range(0, en.count(), [&](const SubspaceBasis& sb) {
                sum += multiplicity_mG(C.generator(), sb.basis);
            });
            const bigint want = bigint(C.n()) * gaussian_binomial(k - 1, r - 1, C.q());
            CHECK(bigint(sum) == want);
        }
    }
}

TEST_CASE("hierarchy pins for the registry") {
    auto hier = [](const char* name) {
        const WeightReport rep = support_weights(example_code(name));
        std::vector<std::uint32_t> h;
        for (std::uint32_t s = 1; s <= rep.smax(); ++s) h.push_back(rep.d(s));
        return h;
    };
    CHECK(hier("ex9_5_3") == std::vector<std::uint32_t>{3, 5, 7, 8, 9});
    CHECK(hier("golay12_3") == std::vector<std::uint32_t>{6, 8, 9, 10, 11, 12});
    CHECK(hier("ss28_5_2") == std::vector<std::uint32_t>{14, 21, 25, 27, 28});
    CHECK(hier("ex12_5_5") == std::vector<std::uint32_t>{6, 9, 10, 11, 12});
}

TEST_CASE("bound checks are clean on every registry code") {
    for (const char* name : {"ex9_5_3", "ex12_5_5", "golay12_3", "ss28_5_2",
                             "ss24_5_2", "ss117_5_3", "ss116_5_3", "ex26_5_2"}) {
        const LinearCode C = example_code(name);
        const WeightReport rep = support_weights(C);
        const WeightDistribution dist = scan_codewords(C).dist;
        CHECK(check_bounds(rep, &dist).empty());
    }
}

TEST_CASE("bound checks flag doctored reports") {
    WeightReport rep = support_weights(example_code("ex9_5_3"));
    SUBCASE("broken monotonicity") {
        rep.rows[1].min_weight = rep.rows[0].min_weight;
        CHECK_FALSE(check_bounds(rep).empty());
    }
    SUBCASE("Singleton violation") {
        rep.rows[0].min_weight = rep.n - rep.k + 2;
        CHECK_FALSE(check_bounds(rep).empty());
    }
    SUBCASE("codeword histogram mismatch") {
        const WeightDistribution dist{{3, 1}};
        CHECK_FALSE(check_bounds(rep, &dist).empty());
    }
}

TEST_CASE("csv renderings are pinned") {
    const WeightReport rep = support_weights(example_code("ex9_5_3"));
    CHECK(hierarchy_csv(rep) ==
          "s,d_s,D_s\n1,3,8\n2,5,9\n3,7,9\n4,8,9\n5,9,9\n");
    CHECK(sswd_csv(rep) ==
          "s,j,A_j_s\n"
          "1,3,4\n1,4,14\n1,5,8\n1,7,4\n1,8,1\n"
          "2,5,6\n2,6,60\n2,7,36\n2,8,39\n2,9,14\n"
          "3,7,36\n3,8,63\n3,9,56\n"
          "4,8,9\n4,9,22\n"
          "5,9,1\n");
}

TEST_CASE("worker count does not change the report") {
    for (const char* name : {"ex9_5_3", "golay12_3"}) {
        const LinearCode C = example_code(name);
        const WeightReport a = support_weights(C, 0, 1);
        const WeightReport b = support_weights(C, 0, 4);
        REQUIRE(a.smax() == b.smax());
        for (std::uint32_t s = 1; s <= a.smax(); ++s) {
            CHECK(a.rows[s - 1].histogram == b.rows[s - 1].histogram);
            CHECK(a.rows[s - 1].side == b.rows[s - 1].side);
        }
    }
}

TEST_CASE("range errors and budget") {
    const LinearCode C = example_code("ex9_5_3");
    CHECK_THROWS_AS(support_weights(C, 6), ValueError);
    CHECK_THROWS_AS(support_weights(C, 1, 1, /*budget=*/10), BudgetError);
    std::mt19937_64 rng(32);
    const LinearCode big = random_code(2, 30, 32, rng);
    CHECK_THROWS_AS(support_weights(big), BudgetError);  // 2^30-1 level-1 sweeps
}

} // TEST_SUITE
