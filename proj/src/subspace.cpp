#include "gfc/subspace.hpp"

#include <algorithm>
#include <map>

namespace gfc {

bigint gaussian_binomial(std::uint32_t k, std::uint32_t s, std::uint32_t q) {
    if (s > k) return 0;
    bigint r = 1, Q = q;
    // r stays integral: each step turns [k choose i]_q into [k choose i+1]_q.
    for (std::uint32_t i = 0; i < s; ++i) {
        r *= boost::multiprecision::pow(Q, k - i) - 1;
        r /= boost::multiprecision::pow(Q, i + 1) - 1;
    }
    return r;
}

std::uint64_t encode_vec(const elem_t* v, std::uint32_t k, std::uint32_t q) {
    std::uint64_t code = 0, p = 1;
    for (std::uint32_t i = 0; i < k; ++i, p *= q) code += std::uint64_t(v[i]) * p;
    return code;
}

void decode_vec(std::uint64_t code, std::uint32_t k, std::uint32_t q, elem_t* out) {
    for (std::uint32_t i = 0; i < k; ++i, code /= q) out[i] = elem_t(code % q);
}

SubspaceEnumerator::SubspaceEnumerator(FieldPtr ctx, std::uint32_t k, std::uint32_t s)
    : ctx_(std::move(ctx)), k_(k), s_(s), q_(ctx_->q()) {
    if (s > k) throw ValueError("SubspaceEnumerator: s > k");
    bigint n = gaussian_binomial(k, s, q_);
    if (n > (bigint(1) << 62)) throw ValueError("SubspaceEnumerator: count exceeds ordinal range");

    if (s == 0) {
        blocks_.push_back({{}, {}, 1, 0});
        total_ = 1;
        return;
    }

    // Lexicographic combinations c of {0..k-1}, mirrored into pivot sets so
    // that the first pivot set is {k-s,...,k-1}.
    std::vector<std::uint32_t> c(s);
    for (std::uint32_t i = 0; i < s; ++i) c[i] = i;
    std::uint64_t offset = 0;
    for (;;) {
        PivotBlock b;
        b.pivots.resize(s);
        for (std::uint32_t j = 0; j < s; ++j) b.pivots[j] = k - 1 - c[s - 1 - j];
        std::vector<bool> is_pivot(k, false);
        for (std::uint32_t p : b.pivots) is_pivot[p] = true;
        for (std::uint32_t i = 0; i < s; ++i)
            for (std::uint32_t j = b.pivots[i] + 1; j < k; ++j)
                if (!is_pivot[j]) b.free_pos.push_back({i, j});
        b.size = 1;
        for (std::size_t i = 0; i < b.free_pos.size(); ++i) b.size *= q_;
        b.offset = offset;
        offset += b.size;
        blocks_.push_back(std::move(b));

        // next combination
        std::int64_t i = s - 1;
        while (i >= 0 && c[i] == k - s + i) --i;
        if (i < 0) break;
        ++c[i];
        for (std::uint32_t j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
    }
    total_ = offset;
    if (bigint(total_) != n) throw ValueError("SubspaceEnumerator: internal count mismatch");
}

void SubspaceEnumerator::fill_basis(const PivotBlock& b, std::uint64_t t, MatrixGF& out) const {
    std::fill(out.row(0), out.row(0) + s_ * std::size_t(k_), elem_t(0));
    for (std::uint32_t i = 0; i < s_; ++i) out.set(i, b.pivots[i], 1);
    for (std::size_t d = b.free_pos.size(); d-- > 0;) {
        out.set(b.free_pos[d].first, b.free_pos[d].second, elem_t(t % q_));
        t /= q_;
    }
}

SubspaceBasis SubspaceEnumerator::at(std::uint64_t ordinal) const {
    if (ordinal >= total_) throw ValueError("SubspaceEnumerator::at: ordinal out of range");
    auto it = std::upper_bound(blocks_.begin(), blocks_.end(), ordinal,
                               [](std::uint64_t o, const PivotBlock& b) { return o < b.offset; });
    const PivotBlock& b = *std::prev(it);
    SubspaceBasis sb{MatrixGF(ctx_, s_, k_), ordinal};
    fill_basis(b, ordinal - b.offset, sb.basis);
    return sb;
}

std::uint64_t SubspaceEnumerator::ordinal_of(const MatrixGF& basis) const {
    if (basis.rows() != s_ || basis.cols() != k_)
        throw ValueError("ordinal_of: dimension mismatch");
    std::vector<std::uint32_t> pivots(s_);
    for (std::uint32_t i = 0; i < s_; ++i) {
        std::uint32_t c = 0;
        while (c < k_ && basis.at(i, c) == 0) ++c;
        if (c == k_ || basis.at(i, c) != 1 || (i > 0 && c <= pivots[i - 1]))
            throw ValueError("ordinal_of: basis is not in RREF");
        pivots[i] = c;
    }
    for (std::uint32_t i = 0; i < s_; ++i)
        for (std::uint32_t j = 0; j < s_; ++j)
            if (i != j && basis.at(i, pivots[j]) != 0)
                throw ValueError("ordinal_of: basis is not in RREF");

    auto it = std::find_if(blocks_.begin(), blocks_.end(),
                           [&](const PivotBlock& b) { return b.pivots == pivots; });
    if (it == blocks_.end()) throw ValueError("ordinal_of: pivot set not found");
    std::uint64_t t = 0;
    for (const auto& [r, c] : it->free_pos) t = t * q_ + basis.at(r, c);
    return it->offset + t;
}

void SubspaceEnumerator::for_range(std::uint64_t lo, std::uint64_t hi,
                                   const std::function<void(const SubspaceBasis&)>& f) const {
    if (lo >= hi) return;
    if (hi > total_) throw ValueError("for_range: range out of bounds");
    auto bit = std::prev(std::upper_bound(
        blocks_.begin(), blocks_.end(), lo,
        [](std::uint64_t o, const PivotBlock& b) { return o < b.offset; }));

    SubspaceBasis sb{MatrixGF(ctx_, s_, k_), lo};
    std::uint64_t t = lo - bit->offset;
    fill_basis(*bit, t, sb.basis);
    std::vector<elem_t> digits(bit->free_pos.size());
    for (std::uint64_t tt = t, d = digits.size(); d-- > 0; tt /= q_) digits[d] = elem_t(tt % q_);

    for (std::uint64_t ord = lo; ord < hi; ++ord) {
        sb.ordinal = ord;
        f(sb);
        if (ord + 1 == hi) break;
        // advance the base-q odometer over the free entries (last digit fastest)
        std::size_t d = digits.size();
        while (d-- > 0) {
            if (++digits[d] < q_) {
                sb.basis.set(bit->free_pos[d].first, bit->free_pos[d].second, digits[d]);
                break;
            }
            digits[d] = 0;
            sb.basis.set(bit->free_pos[d].first, bit->free_pos[d].second, 0);
        }
        if (d == std::size_t(-1)) {  // block exhausted
            ++bit;
            digits.assign(bit->free_pos.size(), 0);
            fill_basis(*bit, 0, sb.basis);
        }
    }
}

SpanTable::SpanTable(FieldPtr ctx, std::uint32_t k) : ctx_(std::move(ctx)), k_(k), q_(ctx_->q()) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        total *= q_;                              // <= 2^22 * 2^16, no overflow
        if (total > kSpanTableMaxCodes) return;   // unavailable
    }
    stamp_.assign(total, 0);
}

bool SpanTable::span_fits(std::uint32_t dim) const {
    std::uint64_t t = 1;
    for (std::uint32_t i = 0; i < dim; ++i) {
        t *= q_;
        if (t > kSpanTableMaxSpan) return false;
    }
    return true;
}

void SpanTable::load(const MatrixGF& basis) {
    if (!available()) throw ValueError("SpanTable: unavailable for this field size");
    if (!span_fits(std::uint32_t(basis.rows()))) throw ValueError("SpanTable: span too large");
    if (++epoch_ == 0) {  // stamp wraparound: reset
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    const FieldCtx& F = *ctx_;
    span_.assign(1, std::vector<elem_t>(k_, 0));
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        const elem_t* row = basis.row(r);
        std::size_t base = span_.size();
        for (std::uint32_t lam = 1; lam < q_; ++lam) {
            for (std::size_t i = 0; i < base; ++i) {
                std::vector<elem_t> v = span_[i];
                for (std::uint32_t j = 0; j < k_; ++j)
                    v[j] = F.add(v[j], F.mul(elem_t(lam), row[j]));
                span_.push_back(std::move(v));
            }
        }
    }
    for (const auto& v : span_) stamp_[encode_vec(v.data(), k_, q_)] = epoch_;
}

bool in_row_space(const MatrixGF& basis, const std::vector<elem_t>& v) {
    if (v.size() != basis.cols()) throw ValueError("in_row_space: dimension mismatch");
    const FieldCtx& F = *basis.ctx();
    std::vector<elem_t> w = v;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::size_t p = 0;
        while (p < basis.cols() && basis.at(i, p) == 0) ++p;
        if (p == basis.cols()) continue;
        elem_t f = F.div(w[p], basis.at(i, p));
        if (f == 0) continue;
        for (std::size_t j = p; j < basis.cols(); ++j)
            w[j] = F.sub(w[j], F.mul(f, basis.at(i, j)));
    }
    return std::all_of(w.begin(), w.end(), [](elem_t x) { return x == 0; });
}

std::size_t multiplicity_mG(const MatrixGF& G, const MatrixGF& basis) {
    if (G.rows() != basis.cols()) throw ValueError("multiplicity_mG: dimension mismatch");
    std::size_t m = 0;
    std::vector<elem_t> col(G.rows());
    for (std::size_t c = 0; c < G.cols(); ++c) {
        for (std::size_t r = 0; r < G.rows(); ++r) col[r] = G.at(r, c);
        if (in_row_space(basis, col)) ++m;
    }
    return m;
}

MatrixGF orthogonal_complement(const MatrixGF& basis) {
    return rref_rank(nullspace(basis)).R;
}

} // namespace gfc
