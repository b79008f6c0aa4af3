#include "gfc/constructions.hpp"

#include "gfc/minimality.hpp"
#include "gfc/subspace.hpp"

#include <algorithm>
#include <numeric>

namespace gfc {
namespace {

// All projective points of PG(k-1,q): normalized vectors (first nonzero = 1)
// in ascending lexicographic order of the tuple (v_0,...,v_{k-1}).
std::vector<std::vector<elem_t>> simplex_points(std::uint32_t q, std::uint32_t k) {
    bigint total = boost::multiprecision::pow(bigint(q), k);
    if (total > (bigint(1) << 40)) throw ValueError("simplex: q^k too large");
    std::vector<std::vector<elem_t>> pts;
    std::vector<elem_t> v(k, 0);
    for (;;) {
        // next tuple in lex order: increment from the last coordinate
        std::int64_t i = k - 1;
        while (i >= 0 && v[i] == q - 1) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
        std::size_t fn = 0;
        while (v[fn] == 0) ++fn;
        if (v[fn] == 1) pts.push_back(v);
    }
    return pts;
}

LinearCode code_from_points(FieldPtr ctx, std::uint32_t k,
                            const std::vector<std::vector<elem_t>>& pts) {
    MatrixGF G(ctx, k, pts.size());
    for (std::size_t c = 0; c < pts.size(); ++c)
        for (std::uint32_t r = 0; r < k; ++r) G.set(r, c, pts[c][r]);
    return LinearCode::from_generator(std::move(ctx), std::move(G));
}

// simplex minus the points supported inside each coordinate block, minus the
// listed unit vectors
LinearCode simplex_minus(FieldPtr ctx, std::uint32_t k,
                         const std::vector<std::vector<std::uint32_t>>& blocks,
                         const std::vector<std::uint32_t>& units) {
    auto pts = simplex_points(ctx->q(), k);
    std::vector<std::vector<elem_t>> kept;
    for (const auto& p : pts) {
        bool remove = false;
        for (const auto& b : blocks) {
            bool inside = true;
            for (std::uint32_t c = 0; c < k && inside; ++c)
                if (p[c] && std::find(b.begin(), b.end(), c) == b.end()) inside = false;
            if (inside) {
                remove = true;
                break;
            }
        }
        for (std::uint32_t u : units) {
            if (remove) break;
            bool is_unit = p[u] == 1;
            for (std::uint32_t c = 0; c < k && is_unit; ++c)
                if (c != u && p[c]) is_unit = false;
            if (is_unit) remove = true;
        }
        if (!remove) kept.push_back(p);
    }
    return code_from_points(std::move(ctx), k, kept);
}

void validate_u(std::uint32_t k, const std::vector<std::uint32_t>& u) {
    if (u.empty()) throw ValueError("block dimensions must be nonempty");
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] < 1) throw ValueError("block dimensions must be >= 1");
        if (i > 0 && u[i] <= u[i - 1])
            throw ValueError("block dimensions must be strictly increasing");
        sum += u[i];
    }
    if (sum > k) throw ValueError("block dimensions exceed k");
}

std::uint64_t upow(std::uint32_t q, std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= q;
    return r;
}

} // namespace

LinearCode simplex_code(FieldPtr ctx, std::uint32_t k) {
    if (k < 1) throw ValueError("simplex: k must be >= 1");
    return code_from_points(ctx, k, simplex_points(ctx->q(), k));
}

LinearCode punctured_simplex(FieldPtr ctx, std::uint32_t k,
                             const std::vector<std::size_t>& coords) {
    return puncture(simplex_code(std::move(ctx), k), coords);
}

bool punctured_simplex_minimal_guaranteed(std::uint32_t q, std::uint32_t k, std::uint64_t t,
                                          std::uint32_t s) {
    if (s < 1 || s >= k) throw ValueError("punctured_simplex_minimal_guaranteed: s out of range");
    return bigint(t) < boost::multiprecision::pow(bigint(q), k - s - 1);
}

LinearCode solomon_stiffler(FieldPtr ctx, std::uint32_t k, const std::vector<std::uint32_t>& u) {
    validate_u(k, u);
    std::vector<std::vector<std::uint32_t>> blocks;
    std::uint32_t at = 0;
    for (std::uint32_t ui : u) {
        std::vector<std::uint32_t> b(ui);
        std::iota(b.begin(), b.end(), at);
        at += ui;
        blocks.push_back(std::move(b));
    }
    return simplex_minus(std::move(ctx), k, blocks, {});
}

bool ss_minimal_guaranteed(std::uint32_t q, std::uint32_t k, const std::vector<std::uint32_t>& u,
                           std::uint32_t s) {
    validate_u(k, u);
    if (s < 1 || s >= k) throw ValueError("ss_minimal_guaranteed: s out of range");
    return u.size() <= q - 1 && u.back() + s + 1 <= k;
}

WeightDistribution ss_predicted_weights(std::uint32_t q, std::uint32_t k,
                                        const std::vector<std::uint32_t>& u) {
    validate_u(k, u);
    const std::size_t t = u.size();
    if (!(t == 1 || (t == 2 && q >= 3)))
        throw ValueError("ss_predicted_weights: supports one block, or two blocks with q >= 3");
    std::uint32_t usum = std::accumulate(u.begin(), u.end(), 0u);
    WeightDistribution dist;
    for (std::size_t S = 0; S < (std::size_t(1) << t); ++S) {
        std::uint64_t w = upow(q, k - 1), mult = upow(q, k - usum);
        for (std::size_t i = 0; i < t; ++i)
            if (S & (std::size_t(1) << i)) {
                w -= upow(q, u[i] - 1);
                mult *= upow(q, u[i]) - 1;
            }
        if (S == 0) --mult;  // drop the zero word
        if (mult == 0) continue;
        if (w == 0) throw ValueError("ss_predicted_weights: blocks cover the whole simplex");
        dist[std::uint32_t(w)] += mult;
    }
    return dist;
}

LinearCode pad_with_simplex(const LinearCode& C, std::uint32_t t) {
    if (t == 0) return C;
    LinearCode S = simplex_code(C.ctx(), std::uint32_t(C.k()));
    MatrixGF G = C.generator();
    for (std::uint32_t i = 0; i < t; ++i) G = concat_cols(G, S.generator());
    return LinearCode::from_generator(C.ctx(), std::move(G));
}

std::uint64_t min_padding_t(const WeightReport& rep, std::uint32_t s) {
    if (s < 1 || s >= rep.smax()) throw ValueError("min_padding_t: needs d_{s+1} in report");
    if (rep.d(s + 1) > rep.D(s)) return 0;
    std::uint64_t step = upow(rep.q, rep.k - s - 1);
    return (rep.D(s) - rep.d(s + 1)) / step + 1;
}

ExtensionResult ab_violating_extend(const LinearCode& C, std::uint32_t s, unsigned workers,
                                    std::uint64_t budget) {
    const std::uint32_t k = std::uint32_t(C.k()), q = C.q();
    if (s < 1 || s >= k) throw ValueError("ab_violating_extend: s out of range");
    WeightReport rep = support_weights(C, s, workers, budget);
    CodewordScan scan = scan_codewords(C);
    const std::uint32_t d_s = rep.d(s), D1 = scan.max_weight;

    if (!is_s_minimal(C, s, MinimalityAlg::Rank, workers, budget).minimal)
        throw ValueError("ab_violating_extend: input code is not s-minimal");
    bigint qs1 = boost::multiprecision::pow(bigint(q), s + 1);
    bigint lhs = bigint(d_s) * (qs1 - 1), denom = qs1 - q;
    if (lhs <= bigint(D1) * denom)
        throw ValueError("ab_violating_extend: d_s (q^{s+1}-1) > D_1 (q^{s+1}-q) does not hold");
    bigint np = (lhs + denom - 1) / denom - D1;
    if (np <= 0) throw ValueError("ab_violating_extend: no coordinates to append");
    const std::uint32_t n_prime = np.convert_to<std::uint32_t>();

    // deterministic basis: max-weight message, min-weight message, then greedy
    // completion in message-ordinal order
    std::vector<std::vector<elem_t>> basis{scan.max_message, scan.min_message};
    {
        MatrixGF two = MatrixGF::from_rows(C.ctx(), basis);
        if (rank_of(two) != 2)
            throw ValueError("ab_violating_extend: extremal codewords are dependent");
    }
    std::uint64_t total = upow(q, k);
    std::vector<elem_t> cand(k);
    for (std::uint64_t o = 1; o < total && basis.size() < k; ++o) {
        decode_vec(o, k, q, cand.data());
        basis.push_back(cand);
        MatrixGF M = MatrixGF::from_rows(C.ctx(), basis);
        if (rank_of(M) != basis.size()) basis.pop_back();
    }
    if (basis.size() != k) throw ValueError("ab_violating_extend: basis completion failed");

    MatrixGF G(C.ctx(), k, std::size_t(n_prime) + C.n());
    for (std::uint32_t r = 0; r < k; ++r) {
        if (r == 0)
            for (std::uint32_t c = 0; c < n_prime; ++c) G.set(0, c, 1);
        std::vector<elem_t> cw = C.codeword(basis[r]);
        for (std::size_t c = 0; c < C.n(); ++c) G.set(r, n_prime + c, cw[c]);
    }
    ExtensionResult out{LinearCode::from_generator(C.ctx(), std::move(G)), n_prime, false};
    out.verified_s_minimal = is_s_minimal(out.code, s, MinimalityAlg::Rank, workers, budget).minimal;
    return out;
}

std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint32_t q, std::uint32_t n) {
    if (n < 1) throw ValueError("cyclotomic_cosets: n must be >= 1");
    if (std::gcd(q, n) != 1) throw ValueError("cyclotomic_cosets: gcd(q,n) must be 1");
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::uint32_t>> cosets;
    for (std::uint32_t a = 0; a < n; ++a) {
        if (seen[a]) continue;
        std::vector<std::uint32_t> coset;
        std::uint64_t b = a;
        do {
            coset.push_back(std::uint32_t(b));
            seen[b] = true;
            b = b * q % n;
        } while (b != a);
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

LinearCode cyclic_code(std::uint32_t q, std::uint32_t n,
                       const std::vector<std::uint32_t>& excluded_leaders) {
    if (!is_prime(q)) throw ValueError("cyclic_code: q must be prime");
    if (n < 2) throw ValueError("cyclic_code: n must be >= 2");
    if (std::gcd(q, n) != 1) throw ValueError("cyclic_code: gcd(n,q) must be 1");

    auto cosets = cyclotomic_cosets(q, n);
    std::vector<std::uint32_t> excl = excluded_leaders;
    std::sort(excl.begin(), excl.end());
    if (std::adjacent_find(excl.begin(), excl.end()) != excl.end())
        throw ValueError("cyclic_code: duplicate leader");
    if (excl.empty()) throw ValueError("cyclic_code: nothing excluded, code would be empty");
    std::vector<const std::vector<std::uint32_t>*> chosen;
    for (std::uint32_t L : excl) {
        auto it = std::find_if(cosets.begin(), cosets.end(),
                               [&](const auto& c) { return c[0] == L; });
        if (it == cosets.end())
            throw ValueError("cyclic_code: " + std::to_string(L) + " is not a coset leader");
        chosen.push_back(&*it);
    }

    // multiplicative order of q mod n
    std::uint32_t ord = 1;
    std::uint64_t acc = q % n;
    while (acc != 1) {
        acc = acc * q % n;
        ++ord;
    }
    bigint ext = boost::multiprecision::pow(bigint(q), ord);
    if (ext > 65535)
        throw ValueError("cyclic_code: splitting field GF(" + ext.str() + ") is out of range");

    FieldPtr E = ord == 1 ? make_field(q) : make_field(q, ord);
    const FieldCtx& FE = *E;
    std::uint64_t group = std::uint64_t(E->q()) - 1;
    elem_t beta = FE.pow(FE.primitive_element(), group / n);

    // h(x) = prod over excluded cosets of prod_j (x - beta^j), low degree first
    std::vector<elem_t> h{1};
    for (const auto* coset : chosen)
        for (std::uint32_t j : *coset) {
            elem_t root = FE.pow(beta, j);
            std::vector<elem_t> nh(h.size() + 1, 0);
            for (std::size_t i = 0; i < h.size(); ++i) {
                nh[i + 1] = FE.add(nh[i + 1], h[i]);
                nh[i] = FE.add(nh[i], FE.mul(h[i], FE.neg(root)));
            }
            h = std::move(nh);
        }
    for (elem_t c : h)
        if (c >= q) throw ValueError("cyclic_code: internal error, h(x) not over GF(q)");

    // g(x) = (x^n - 1) / h(x) over GF(q)
    FieldPtr B = make_field(q);
    const FieldCtx& FB = *B;
    std::vector<elem_t> rem(n + 1, 0);
    rem[0] = FB.neg(1);
    rem[n] = 1;
    const std::size_t dh = h.size() - 1;  // = k
    std::vector<elem_t> g(n - dh + 1, 0);
    for (std::size_t d = n; d + 1 >= dh + 1; --d) {
        elem_t coef = FB.div(rem[d], h[dh]);
        g[d - dh] = coef;
        if (coef)
            for (std::size_t i = 0; i <= dh; ++i)
                rem[d - dh + i] = FB.sub(rem[d - dh + i], FB.mul(coef, h[i]));
    }
    for (elem_t c : rem)
        if (c) throw ValueError("cyclic_code: internal error, h(x) does not divide x^n - 1");

    const std::size_t k = dh, dg = n - dh;
    MatrixGF G(B, k, n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t i = 0; i <= dg; ++i) G.set(r, r + i, g[i]);
    return LinearCode::from_generator(std::move(B), std::move(G));
}

std::vector<std::string> example_names() {
    return {"ex9_5_3",   "ex12_5_5", "golay12_3", "ss28_5_2",
            "ss24_5_2",  "ss117_5_3", "ss116_5_3", "ex26_5_2"};
}

LinearCode example_code(const std::string& name) {
    if (name == "ex9_5_3") {
        FieldPtr F = make_field(2);
        return LinearCode::from_generator(
            F, MatrixGF::from_rows(F, {{1, 0, 0, 0, 1, 0, 1, 1, 1},
                                       {0, 1, 0, 0, 1, 0, 1, 1, 0},
                                       {0, 0, 1, 0, 1, 0, 1, 0, 1},
                                       {0, 0, 0, 1, 1, 0, 0, 1, 1},
                                       {0, 0, 0, 0, 0, 1, 1, 1, 1}}));
    }
    if (name == "ex12_5_5") {
        FieldPtr F = make_field(5);
        return LinearCode::from_generator(
            F, MatrixGF::from_rows(F, {{1, 0, 0, 0, 2, 3, 0, 1, 4, 3, 0, 1},
                                       {0, 1, 0, 0, 1, 3, 0, 1, 3, 1, 4, 4},
                                       {0, 0, 1, 0, 1, 2, 0, 1, 2, 0, 2, 0},
                                       {0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 3},
                                       {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1}}));
    }
    if (name == "golay12_3") {
        FieldPtr F = make_field(3);
        return LinearCode::from_generator(
            F, MatrixGF::from_rows(F, {{1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
                                       {0, 1, 0, 0, 0, 0, 1, 0, 1, 2, 2, 1},
                                       {0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 2, 2},
                                       {0, 0, 0, 1, 0, 0, 1, 2, 1, 0, 1, 2},
                                       {0, 0, 0, 0, 1, 0, 1, 2, 2, 1, 0, 1},
                                       {0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 0}}));
    }
    if (name == "ss28_5_2") return solomon_stiffler(make_field(2), 5, {2});
    if (name == "ss24_5_2") return simplex_minus(make_field(2), 5, {{2, 3, 4}}, {});
    if (name == "ss117_5_3") return simplex_minus(make_field(3), 5, {{1, 2}}, {});
    if (name == "ss116_5_3") return solomon_stiffler(make_field(3), 5, {1, 2});
    if (name == "ex26_5_2") return simplex_minus(make_field(2), 5, {{0, 1}}, {2, 3});
    throw ValueError("unknown example code '" + name + "'");
}

} // namespace gfc
