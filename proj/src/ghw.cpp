#include "gfc/ghw.hpp"

#include "gfc/parallel.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace gfc {
namespace {

// weight histogram over all s-dimensional subcodes, scanning the given side
std::vector<std::uint64_t> scan_side_histogram(const LinearCode& C, std::uint32_t s,
                                               ScanSide side, unsigned workers) {
    const std::uint32_t k = std::uint32_t(C.k()), q = C.q();
    const std::size_t n = C.n();
    const std::uint32_t dim = side == ScanSide::Complement ? k - s : s;
    SubspaceEnumerator en(C.ctx(), k, dim);
    const std::uint64_t total = en.count();

    unsigned w = workers == 0 ? 1 : workers;
    std::vector<std::vector<std::uint64_t>> hists(
        std::size_t(std::min<std::uint64_t>(w, std::max<std::uint64_t>(total, 1))),
        std::vector<std::uint64_t>(n + 1, 0));

    if (side == ScanSide::Complement) {
        std::vector<std::uint64_t> col_codes(n);
        std::vector<elem_t> col(k);
        for (std::size_t c = 0; c < n; ++c) {
            for (std::uint32_t r = 0; r < k; ++r) col[r] = C.generator().at(r, c);
            col_codes[c] = encode_vec(col.data(), k, q);
        }
        run_chunks(total, w, [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
            SpanTable table(C.ctx(), k);
            auto& hist = hists[chunk];
            en.for_range(lo, hi, [&](const SubspaceBasis& sb) {
                table.load(sb.basis);
                std::size_t m = 0;
                for (std::uint64_t code : col_codes)
                    if (table.contains(code)) ++m;
                ++hist[n - m];
            });
        });
    } else if (q == 2) {
        const std::size_t words = (n + 63) / 64;
        std::vector<std::uint64_t> rows(std::size_t(k) * words, 0);
        for (std::uint32_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (C.generator().at(r, c))
                    rows[r * words + c / 64] |= std::uint64_t(1) << (c % 64);
        run_chunks(total, w, [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
            auto& hist = hists[chunk];
            std::vector<std::uint64_t> supp(words), cw(words);
            en.for_range(lo, hi, [&](const SubspaceBasis& sb) {
                std::fill(supp.begin(), supp.end(), 0);
                for (std::uint32_t r = 0; r < s; ++r) {
                    std::fill(cw.begin(), cw.end(), 0);
                    for (std::uint32_t j = 0; j < k; ++j)
                        if (sb.basis.at(r, j))
                            for (std::size_t i = 0; i < words; ++i) cw[i] ^= rows[j * words + i];
                    for (std::size_t i = 0; i < words; ++i) supp[i] |= cw[i];
                }
                std::uint32_t wt = 0;
                for (std::uint64_t x : supp) wt += std::uint32_t(std::popcount(x));
                ++hist[wt];
            });
        });
    } else {
        run_chunks(total, w, [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
            const FieldCtx& F = *C.ctx();
            auto& hist = hists[chunk];
            std::vector<elem_t> cw(n);
            std::vector<bool> hit(n);
            en.for_range(lo, hi, [&](const SubspaceBasis& sb) {
                std::fill(hit.begin(), hit.end(), false);
                for (std::uint32_t r = 0; r < s; ++r) {
                    std::fill(cw.begin(), cw.end(), 0);
                    for (std::uint32_t j = 0; j < k; ++j) {
                        elem_t y = sb.basis.at(r, j);
                        if (!y) continue;
                        const elem_t* row = C.generator().row(j);
                        for (std::size_t i = 0; i < n; ++i)
                            if (row[i]) cw[i] = F.add(cw[i], F.mul(y, row[i]));
                    }
                    for (std::size_t i = 0; i < n; ++i)
                        if (cw[i]) hit[i] = true;
                }
                std::uint32_t wt = 0;
                for (std::size_t i = 0; i < n; ++i) wt += hit[i];
                ++hist[wt];
            });
        });
    }

    std::vector<std::uint64_t> merged(n + 1, 0);
    for (const auto& h : hists)
        for (std::size_t j = 0; j <= n; ++j) merged[j] += h[j];
    return merged;
}

} // namespace

WeightReport support_weights(const LinearCode& C, std::uint32_t smax, unsigned workers,
                             std::uint64_t budget) {
    const std::uint32_t k = std::uint32_t(C.k());
    if (smax == 0) smax = k;
    if (smax > k) throw ValueError("support_weights: smax > k");

    WeightReport rep;
    rep.n = std::uint32_t(C.n());
    rep.k = k;
    rep.q = C.q();

    SpanTable probe(C.ctx(), k);
    for (std::uint32_t s = 1; s <= smax; ++s) {
        bigint count = gaussian_binomial(k, s, C.q());
        if (count > bigint(budget))
            throw BudgetError("support_weights: s=" + std::to_string(s) + " needs " +
                              count.str() + " subspaces, budget " + std::to_string(budget));

        // Complement side wins when its per-subspace span enumeration
        // (q^(k-s) vectors) is cheaper than deriving s codewords of length n.
        bool complement_ok = probe.available() && probe.span_fits(k - s);
        std::uint64_t span_sz = 1;
        if (complement_ok)
            for (std::uint32_t i = 0; i < k - s; ++i) span_sz *= C.q();
        ScanSide side = (complement_ok && span_sz <= std::uint64_t(s) * C.n())
                            ? ScanSide::Complement
                            : ScanSide::Subcode;

        SupportWeightRow row;
        row.s = s;
        row.side = side;
        row.subspaces_scanned = std::uint64_t(count);
        row.histogram = scan_side_histogram(C, s, side, workers);
        if (row.histogram[0] != 0)
            throw ValueError("support_weights: internal error, weight-0 subcode");
        std::uint32_t lo = 0, hi = 0;
        for (std::uint32_t j = 0; j <= rep.n; ++j)
            if (row.histogram[j]) {
                if (!lo) lo = j;
                hi = j;
            }
        row.min_weight = lo;
        row.max_weight = hi;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::vector<std::string> check_bounds(const WeightReport& rep, const WeightDistribution* dist) {
    std::vector<std::string> out;
    const std::uint32_t smax = rep.smax(), n = rep.n, k = rep.k;
    const bigint Q = rep.q;

    for (std::uint32_t s = 1; s < smax; ++s)
        if (rep.d(s) >= rep.d(s + 1))
            out.push_back("monotonicity: d_" + std::to_string(s) + " = " +
                          std::to_string(rep.d(s)) + " >= d_" + std::to_string(s + 1) + " = " +
                          std::to_string(rep.d(s + 1)));

    for (std::uint32_t s = 1; s <= smax; ++s)
        if (rep.d(s) > n - k + s)
            out.push_back("Singleton: d_" + std::to_string(s) + " = " + std::to_string(rep.d(s)) +
                          " > n-k+s = " + std::to_string(n - k + s));

    for (std::uint32_t s = 1; s <= smax; ++s)
        for (std::uint32_t r = s + 1; r <= smax; ++r) {
            bigint lhs = bigint(rep.d(s)) * (boost::multiprecision::pow(Q, r) - 1);
            bigint rhs = bigint(rep.d(r)) *
                         (boost::multiprecision::pow(Q, r) - boost::multiprecision::pow(Q, r - s));
            if (lhs > rhs)
                out.push_back("cross-level: d_" + std::to_string(s) + " (q^r-1) > d_" +
                              std::to_string(r) + " (q^r - q^(r-s)) for r=" + std::to_string(r));
        }

    for (std::uint32_t s = 1; s <= smax; ++s) {
        bigint sum = rep.d(s);
        bigint num = bigint(rep.d(s)) * (Q - 1);
        for (std::uint32_t i = 1; i <= k - s; ++i) {
            bigint den = (boost::multiprecision::pow(Q, s) - 1) * boost::multiprecision::pow(Q, i);
            sum += (num + den - 1) / den;
        }
        if (sum > n)
            out.push_back("Griesmer-type: sum for s=" + std::to_string(s) + " is " + sum.str() +
                          " > n = " + std::to_string(n));
    }

    if (dist && smax >= 1) {
        const auto& h1 = rep.rows[0].histogram;
        for (std::uint32_t j = 1; j <= n; ++j) {
            std::uint64_t aj = 0;
            if (auto it = dist->find(j); it != dist->end()) aj = it->second;
            if (bigint(aj) != bigint(rep.q - 1) * h1[j])
                out.push_back("A_j = (q-1) A_j^1 fails at j=" + std::to_string(j) + ": A_j=" +
                              std::to_string(aj) + ", A_j^1=" + std::to_string(h1[j]));
        }
    }
    return out;
}

std::string hierarchy_csv(const WeightReport& rep) {
    std::ostringstream os;
    os << "s,d_s,D_s\n";
    for (const auto& r : rep.rows) os << r.s << ',' << r.min_weight << ',' << r.max_weight << '\n';
    return os.str();
}

std::string sswd_csv(const WeightReport& rep) {
    std::ostringstream os;
    os << "s,j,A_j_s\n";
    for (const auto& r : rep.rows)
        for (std::size_t j = 0; j < r.histogram.size(); ++j)
            if (r.histogram[j]) os << r.s << ',' << j << ',' << r.histogram[j] << '\n';
    return os.str();
}

} // namespace gfc
