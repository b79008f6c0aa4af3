#include "gfc/minimality.hpp"

#include "gfc/parallel.hpp"
#include "gfc/subspace.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <sstream>

namespace gfc {
namespace {

// Packed support masks for subcodes, plus incremental off-support rank with
// early stop. One instance per worker thread; buffers are reused.
class SubcodeScanner {
  public:
    explicit SubcodeScanner(const LinearCode& C)
        : C_(C), n_(C.n()), k_(std::uint32_t(C.k())), words_((C.n() + 63) / 64),
          binary_(C.q() == 2 && C.k() <= 64) {
        if (binary_) {
            packed_rows_.assign(std::size_t(k_) * words_, 0);
            for (std::uint32_t r = 0; r < k_; ++r)
                for (std::size_t c = 0; c < n_; ++c)
                    if (C.generator().at(r, c))
                        packed_rows_[r * words_ + c / 64] |= std::uint64_t(1) << (c % 64);
            col_bits_.assign(n_, 0);
            for (std::size_t c = 0; c < n_; ++c)
                for (std::uint32_t r = 0; r < k_; ++r)
                    if (C.generator().at(r, c)) col_bits_[c] |= std::uint64_t(1) << r;
            pivot_bits_.assign(k_, 0);
            cwb_.assign(words_, 0);
        } else {
            cols_.assign(n_ * k_, 0);
            for (std::size_t c = 0; c < n_; ++c)
                for (std::uint32_t r = 0; r < k_; ++r) cols_[c * k_ + r] = C.generator().at(r, c);
            cw_.assign(n_, 0);
            pivot_rows_.assign(std::size_t(k_) * k_, 0);
            pivot_present_.assign(k_, false);
            x_.assign(k_, 0);
        }
    }

    std::size_t words() const { return words_; }

    void support_mask(const MatrixGF& basis, std::uint64_t* mask) {
        std::fill(mask, mask + words_, 0);
        const std::size_t s = basis.rows();
        if (binary_) {
            for (std::size_t r = 0; r < s; ++r) {
                // OR of the XOR-combination of generator rows selected by the
                // basis row
                std::fill(cwb_.begin(), cwb_.end(), 0);
                for (std::uint32_t j = 0; j < k_; ++j)
                    if (basis.at(r, j))
                        for (std::size_t i = 0; i < words_; ++i)
                            cwb_[i] ^= packed_rows_[j * words_ + i];
                for (std::size_t i = 0; i < words_; ++i) mask[i] |= cwb_[i];
            }
        } else {
            const FieldCtx& F = *C_.ctx();
            for (std::size_t r = 0; r < s; ++r) {
                std::fill(cw_.begin(), cw_.end(), 0);
                for (std::uint32_t j = 0; j < k_; ++j) {
                    elem_t y = basis.at(r, j);
                    if (!y) continue;
                    const elem_t* row = C_.generator().row(j);
                    for (std::size_t i = 0; i < n_; ++i)
                        if (row[i]) cw_[i] = F.add(cw_[i], F.mul(y, row[i]));
                }
                for (std::size_t i = 0; i < n_; ++i)
                    if (cw_[i]) mask[i / 64] |= std::uint64_t(1) << (i % 64);
            }
        }
    }

    // rank of the generator columns outside the mask, stopped at `need`
    bool off_support_rank_reaches(const std::uint64_t* mask, std::uint32_t need) {
        if (need == 0) return true;
        std::uint32_t rank = 0;
        if (binary_) {
            std::fill(pivot_bits_.begin(), pivot_bits_.end(), 0);
            for (std::size_t c = 0; c < n_; ++c) {
                if ((mask[c / 64] >> (c % 64)) & 1) continue;
                std::uint64_t x = col_bits_[c];
                for (std::uint32_t p = 0; p < k_ && x; ++p) {
                    if (!((x >> p) & 1)) continue;
                    if (pivot_bits_[p]) {
                        x ^= pivot_bits_[p];
                    } else {
                        pivot_bits_[p] = x;
                        ++rank;
                        break;
                    }
                }
                if (rank == need) return true;
            }
        } else {
            const FieldCtx& F = *C_.ctx();
            std::fill(pivot_present_.begin(), pivot_present_.end(), false);
            for (std::size_t c = 0; c < n_; ++c) {
                if ((mask[c / 64] >> (c % 64)) & 1) continue;
                std::copy(cols_.begin() + c * k_, cols_.begin() + (c + 1) * k_, x_.begin());
                for (std::uint32_t p = 0; p < k_; ++p) {
                    if (x_[p] == 0) continue;
                    if (pivot_present_[p]) {
                        elem_t f = x_[p];
                        const elem_t* row = &pivot_rows_[p * k_];
                        for (std::uint32_t j = p; j < k_; ++j)
                            x_[j] = F.sub(x_[j], F.mul(f, row[j]));
                    } else {
                        elem_t inv = F.inv(x_[p]);
                        for (std::uint32_t j = 0; j < k_; ++j)
                            pivot_rows_[p * k_ + j] = F.mul(inv, x_[j]);
                        pivot_present_[p] = true;
                        ++rank;
                        break;
                    }
                }
                if (rank == need) return true;
            }
        }
        return false;
    }

  private:
    const LinearCode& C_;
    std::size_t n_;
    std::uint32_t k_;
    std::size_t words_;
    bool binary_;
    std::vector<std::uint64_t> packed_rows_, col_bits_, pivot_bits_, cwb_;
    std::vector<elem_t> cols_, cw_, pivot_rows_, x_;
    std::vector<bool> pivot_present_;
};

SupportSet mask_to_support(const std::uint64_t* mask, std::size_t n) {
    SupportSet s;
    for (std::size_t i = 0; i < n; ++i)
        if ((mask[i / 64] >> (i % 64)) & 1) s.push_back(i);
    return s;
}

bool mask_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

std::uint64_t checked_count(const LinearCode& C, std::uint32_t s, std::uint64_t budget) {
    bigint count = gaussian_binomial(std::uint32_t(C.k()), s, C.q());
    if (count > bigint(budget))
        throw BudgetError("is_s_minimal: " + count.str() + " subspaces exceed budget " +
                          std::to_string(budget));
    return std::uint64_t(count);
}

// first ordinal whose subcode fails the rank criterion; total scan if none
std::optional<std::uint64_t> first_rank_failure(const LinearCode& C, std::uint32_t s,
                                                std::uint64_t lo, std::uint64_t hi) {
    SubspaceEnumerator en(C.ctx(), std::uint32_t(C.k()), s);
    SubcodeScanner sc(C);
    std::vector<std::uint64_t> mask(sc.words());
    const std::uint32_t need = std::uint32_t(C.k()) - s;
    std::optional<std::uint64_t> found;
    en.for_range(lo, hi, [&](const SubspaceBasis& sb) {
        if (found) return;
        sc.support_mask(sb.basis, mask.data());
        if (!sc.off_support_rank_reaches(mask.data(), need)) found = sb.ordinal;
    });
    return found;
}

MinimalityWitness build_witness(const LinearCode& C, std::uint32_t s,
                                std::uint64_t container_ordinal) {
    SubspaceEnumerator en(C.ctx(), std::uint32_t(C.k()), s);
    SubcodeScanner sc(C);
    MinimalityWitness w;
    w.container_ordinal = container_ordinal;
    SubspaceBasis container = en.at(container_ordinal);
    w.container_basis = container.basis;
    std::vector<std::uint64_t> bmask(sc.words()), amask(sc.words());
    sc.support_mask(container.basis, bmask.data());
    w.container_support = mask_to_support(bmask.data(), C.n());

    bool got = false;
    en.for_range(0, en.count(), [&](const SubspaceBasis& sb) {
        if (got || sb.ordinal == container_ordinal) return;
        sc.support_mask(sb.basis, amask.data());
        if (mask_subset(amask.data(), bmask.data(), sc.words())) {
            got = true;
            w.contained_ordinal = sb.ordinal;
            w.contained_basis = sb.basis;
            w.contained_support = mask_to_support(amask.data(), C.n());
        }
    });
    if (!got) throw ValueError("is_s_minimal: internal error, witness not found");
    return w;
}

SMinimality s_minimal_rank(const LinearCode& C, std::uint32_t s, unsigned workers,
                           std::uint64_t total) {
    std::atomic<bool> failed{false};
    const std::uint32_t need = std::uint32_t(C.k()) - s;
    run_chunks(total, workers, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        SubspaceEnumerator en(C.ctx(), std::uint32_t(C.k()), s);
        SubcodeScanner sc(C);
        std::vector<std::uint64_t> mask(sc.words());
        en.for_range(lo, hi, [&](const SubspaceBasis& sb) {
            if (failed.load(std::memory_order_relaxed)) return;
            sc.support_mask(sb.basis, mask.data());
            if (!sc.off_support_rank_reaches(mask.data(), need))
                failed.store(true, std::memory_order_relaxed);
        });
    });
    if (!failed.load()) return {true, std::nullopt};
    std::optional<std::uint64_t> first = first_rank_failure(C, s, 0, total);
    if (!first) throw ValueError("is_s_minimal: internal error, failure not reproduced");
    return {false, build_witness(C, s, *first)};
}

SMinimality s_minimal_brute(const LinearCode& C, std::uint32_t s, unsigned workers,
                            std::uint64_t total) {
    SubcodeScanner probe(C);
    const std::size_t words = probe.words();
    // cap the support table at 512 MB
    if (total > (std::uint64_t(1) << 26) / std::max<std::size_t>(words, 1))
        throw BudgetError("is_s_minimal: brute support table too large");
    std::vector<std::uint64_t> masks(std::size_t(total) * words);
    std::vector<std::uint32_t> wt(static_cast<std::size_t>(total));
    run_chunks(total, workers, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        SubspaceEnumerator en(C.ctx(), std::uint32_t(C.k()), s);
        SubcodeScanner sc(C);
        en.for_range(lo, hi, [&](const SubspaceBasis& sb) {
            std::uint64_t* m = masks.data() + sb.ordinal * words;
            sc.support_mask(sb.basis, m);
            std::uint32_t w = 0;
            for (std::size_t i = 0; i < words; ++i) w += std::uint32_t(std::popcount(m[i]));
            wt[sb.ordinal] = w;
        });
    });

    std::atomic<bool> failed{false};
    run_chunks(total, workers, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t b = lo; b < hi; ++b) {
            if (failed.load(std::memory_order_relaxed)) return;
            const std::uint64_t* bm = masks.data() + b * words;
            for (std::uint64_t a = 0; a < total; ++a) {
                if (a == b || wt[a] > wt[b]) continue;
                if (mask_subset(masks.data() + a * words, bm, words)) {
                    failed.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        }
    });
    if (!failed.load()) return {true, std::nullopt};

    // deterministic witness: first container in enumeration order, then first
    // contained subcode
    for (std::uint64_t b = 0; b < total; ++b) {
        const std::uint64_t* bm = masks.data() + b * words;
        for (std::uint64_t a = 0; a < total; ++a) {
            if (a == b || wt[a] > wt[b]) continue;
            if (mask_subset(masks.data() + a * words, bm, words)) {
                SubspaceEnumerator en(C.ctx(), std::uint32_t(C.k()), s);
                MinimalityWitness w;
                w.container_ordinal = b;
                w.contained_ordinal = a;
                w.container_basis = en.at(b).basis;
                w.contained_basis = en.at(a).basis;
                w.container_support = mask_to_support(bm, C.n());
                w.contained_support = mask_to_support(masks.data() + a * words, C.n());
                return {false, std::move(w)};
            }
        }
    }
    throw ValueError("is_s_minimal: internal error, brute witness not found");
}

} // namespace

bool is_minimal_subcode(const LinearCode& C, const MatrixGF& basis) {
    if (basis.cols() != C.k()) throw ValueError("is_minimal_subcode: basis does not match k");
    const std::size_t s = basis.rows();
    if (s == 0 || rank_of(basis) != s) throw ValueError("is_minimal_subcode: basis rank deficient");
    SupportSet supp = subcode_support(C, basis);
    MatrixGF Hs = submatrix_columns(C.parity_check(), supp);
    return rank_of(Hs) == supp.size() - s;
}

SMinimality is_s_minimal(const LinearCode& C, std::uint32_t s, MinimalityAlg alg,
                         unsigned workers, std::uint64_t budget) {
    if (s < 1 || s > C.k()) throw ValueError("is_s_minimal: s out of range");
    std::uint64_t total = checked_count(C, s, budget);
    return alg == MinimalityAlg::Rank ? s_minimal_rank(C, s, workers, total)
                                      : s_minimal_brute(C, s, workers, total);
}

GabVerdict gab_check(const WeightReport& rep, std::uint32_t s) {
    if (s < 1 || s >= rep.smax())
        throw ValueError("gab_check: report does not cover d_{s+1}");
    if (rep.D(s) < rep.d(s + 1)) return GabVerdict::HoldsByGap;
    bigint qs1 = boost::multiprecision::pow(bigint(rep.q), s + 1);
    if (bigint(rep.D(s)) * (qs1 - rep.q) < bigint(rep.d(s)) * (qs1 - 1))
        return GabVerdict::HoldsByRatio;
    return GabVerdict::Inconclusive;
}

std::string gab_name(GabVerdict v) {
    switch (v) {
        case GabVerdict::HoldsByGap: return "gap";
        case GabVerdict::HoldsByRatio: return "ratio";
        default: return "inconclusive";
    }
}

SubcodeTest subcode_test(const WeightReport& rep, std::uint32_t support_size, std::uint32_t s) {
    if (s < 1 || s >= rep.smax())
        throw ValueError("subcode_test: report does not cover d_{s+1}");
    if (support_size < rep.d(s + 1)) return SubcodeTest::SmallSupport;
    bigint qs1 = boost::multiprecision::pow(bigint(rep.q), s + 1);
    if (bigint(support_size) * (qs1 - rep.q) < bigint(rep.d(s)) * (qs1 - 1))
        return SubcodeTest::RatioSupport;
    return SubcodeTest::Undecided;
}

ExactRegimes exact_regimes(const WeightReport& rep, std::uint32_t s) {
    if (s < 1 || s >= rep.smax())
        throw ValueError("exact_regimes: report does not cover d_{s+1}");
    ExactRegimes r;
    r.small_support_iff = rep.d(s + 1) == rep.n - rep.k + s + 1;
    bigint qs1 = boost::multiprecision::pow(bigint(rep.q), s + 1);
    r.ratio_iff = bigint(rep.n - rep.k + s) * (qs1 - rep.q) < bigint(rep.d(s)) * (qs1 - 1);
    return r;
}

MinimalityProfile minimality_profile(const LinearCode& C, MinimalityAlg alg, unsigned workers,
                                     std::uint64_t budget) {
    MinimalityProfile p;
    p.report = support_weights(C, std::uint32_t(C.k()), workers, budget);
    const std::uint32_t k = std::uint32_t(C.k());
    for (std::uint32_t s = 1; s < k; ++s) {
        ProfileRow row;
        row.s = s;
        row.d_next = p.report.d(s + 1);
        row.D_s = p.report.D(s);
        row.minimal = is_s_minimal(C, s, alg, workers, budget).minimal;
        row.gab = gab_check(p.report, s);
        row.regimes = exact_regimes(p.report, s);
        p.rows.push_back(row);
    }
    for (std::size_t i = 0; i + 1 < p.rows.size(); ++i)
        if (p.rows[i + 1].minimal && !p.rows[i].minimal)
            throw ValueError("minimality_profile: internal error, verdicts not monotone");
    for (const auto& row : p.rows)
        if (row.gab != GabVerdict::Inconclusive && !row.minimal)
            throw ValueError("minimality_profile: internal error, gab contradicts verdict");
    if (!p.rows.empty() && p.rows[0].minimal &&
        p.report.d(1) < (p.report.q - 1) * (k - 1) + 1)
        throw ValueError("minimality_profile: internal error, minimal code below d_1 bound");
    return p;
}

std::string profile_csv(const MinimalityProfile& p) {
    std::ostringstream os;
    os << "s,d_s+1,D_s,verdict,condition\n";
    for (const auto& r : p.rows)
        os << r.s << ',' << r.d_next << ',' << r.D_s << ',' << (r.minimal ? "yes" : "no") << ','
           << gab_name(r.gab) << '\n';
    return os.str();
}

} // namespace gfc
