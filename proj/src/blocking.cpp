#include "gfc/blocking.hpp"

#include "gfc/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <sstream>

namespace gfc {
namespace {

std::vector<elem_t> normalize_point(const FieldCtx& F, std::vector<elem_t> v) {
    std::size_t fn = 0;
    while (fn < v.size() && v[fn] == 0) ++fn;
    if (fn == v.size()) throw ValueError("point set: zero vector is not a projective point");
    elem_t s = F.inv(v[fn]);
    for (auto& x : v) x = F.mul(s, x);
    return v;
}

// points of B inside span(basis), via one reusable SpanTable or reduction
class MembershipCounter {
  public:
    MembershipCounter(const PGPointSet& B) : B_(B), table_(B.ctx, B.k) {
        codes_.reserve(B.points.size());
        for (const auto& p : B.points)
            codes_.push_back(encode_vec(p.data(), B.k, B.ctx->q()));
    }

    // fills `inside` with indices of points lying in span(basis)
    void collect(const MatrixGF& basis, std::vector<std::size_t>& inside) {
        inside.clear();
        if (table_.available() && table_.span_fits(std::uint32_t(basis.rows()))) {
            table_.load(basis);
            for (std::size_t i = 0; i < codes_.size(); ++i)
                if (table_.contains(codes_[i])) inside.push_back(i);
        } else {
            for (std::size_t i = 0; i < B_.points.size(); ++i)
                if (in_row_space(basis, B_.points[i])) inside.push_back(i);
        }
    }

  private:
    const PGPointSet& B_;
    SpanTable table_;
    std::vector<std::uint64_t> codes_;
};

// rank of the listed points, early-stopped at `need`
bool points_span(const PGPointSet& B, const std::vector<std::size_t>& idx, std::uint32_t need) {
    if (need == 0) return true;
    const FieldCtx& F = *B.ctx;
    const std::uint32_t k = B.k;
    std::vector<elem_t> rows(std::size_t(k) * k, 0);
    std::vector<bool> present(k, false);
    std::uint32_t rank = 0;
    std::vector<elem_t> x(k);
    for (std::size_t pi : idx) {
        x = B.points[pi];
        for (std::uint32_t p = 0; p < k; ++p) {
            if (x[p] == 0) continue;
            if (present[p]) {
                elem_t f = x[p];
                for (std::uint32_t j = p; j < k; ++j)
                    x[j] = F.sub(x[j], F.mul(f, rows[p * k + j]));
            } else {
                elem_t inv = F.inv(x[p]);
                for (std::uint32_t j = 0; j < k; ++j) rows[p * k + j] = F.mul(inv, x[j]);
                present[p] = true;
                ++rank;
                break;
            }
        }
        if (rank == need) return true;
    }
    return false;
}

BlockingVerdict scan_subspaces(const PGPointSet& B, std::uint32_t s, unsigned workers,
                               std::uint64_t budget, bool cutting, std::uint32_t t) {
    if (s < 1 || s >= B.k) throw ValueError("blocking: s must satisfy 1 <= s <= k-1");
    const std::uint32_t dim = B.k - s;
    bigint count = gaussian_binomial(B.k, dim, B.ctx->q());
    if (count > bigint(budget))
        throw BudgetError("blocking: " + count.str() + " subspaces exceed budget " +
                          std::to_string(budget));
    const std::uint64_t total = std::uint64_t(count);

    auto bad = [&](MembershipCounter& mc, std::vector<std::size_t>& inside,
                   const SubspaceBasis& sb) {
        mc.collect(sb.basis, inside);
        if (cutting) return !points_span(B, inside, dim);
        return inside.size() < t;
    };

    std::atomic<bool> failed{false};
    run_chunks(total, workers, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        SubspaceEnumerator en(B.ctx, B.k, dim);
        MembershipCounter mc(B);
        std::vector<std::size_t> inside;
        en.for_range(lo, hi, [&](const SubspaceBasis& sb) {
            if (failed.load(std::memory_order_relaxed)) return;
            if (bad(mc, inside, sb)) failed.store(true, std::memory_order_relaxed);
        });
    });
    if (!failed.load()) return {true, std::nullopt};

    // deterministic witness: first violating subspace in enumeration order
    SubspaceEnumerator en(B.ctx, B.k, dim);
    MembershipCounter mc(B);
    std::vector<std::size_t> inside;
    std::optional<SubspaceBasis> witness;
    en.for_range(0, total, [&](const SubspaceBasis& sb) {
        if (witness) return;
        if (bad(mc, inside, sb)) witness = sb;
    });
    if (!witness) throw ValueError("blocking: internal error, failure not reproduced");
    return {false, std::move(witness)};
}

} // namespace

PGPointSet make_pointset(FieldPtr ctx, std::uint32_t k,
                         const std::vector<std::vector<elem_t>>& raw) {
    if (k < 1) throw ValueError("point set: k must be >= 1");
    PGPointSet B;
    B.ctx = std::move(ctx);
    B.k = k;
    for (const auto& v : raw) {
        if (v.size() != k) throw ValueError("point set: wrong vector length");
        for (elem_t x : v)
            if (x >= B.ctx->q()) throw ValueError("point set: entry out of field range");
        B.points.push_back(normalize_point(*B.ctx, v));
    }
    std::sort(B.points.begin(), B.points.end());
    B.points.erase(std::unique(B.points.begin(), B.points.end()), B.points.end());
    return B;
}

PGPointSet pointset_from_code(const LinearCode& C) {
    if (!is_projective(C)) throw ValueError("pointset_from_code: code is not projective");
    std::vector<std::vector<elem_t>> raw;
    for (std::size_t c = 0; c < C.n(); ++c) {
        std::vector<elem_t> col(C.k());
        for (std::size_t r = 0; r < C.k(); ++r) col[r] = C.generator().at(r, c);
        raw.push_back(std::move(col));
    }
    return make_pointset(C.ctx(), std::uint32_t(C.k()), raw);
}

LinearCode code_from_pointset(const PGPointSet& B) {
    if (B.points.empty()) throw ValueError("code_from_pointset: empty point set");
    MatrixGF G(B.ctx, B.k, B.points.size());
    for (std::size_t c = 0; c < B.points.size(); ++c)
        for (std::uint32_t r = 0; r < B.k; ++r) G.set(r, c, B.points[c][r]);
    if (rank_of(G) != B.k)
        throw ValueError("code_from_pointset: points do not span the space");
    return LinearCode::from_generator(B.ctx, std::move(G));
}

BlockingVerdict is_t_fold_s_blocking(const PGPointSet& B, std::uint32_t t, std::uint32_t s,
                                     unsigned workers, std::uint64_t budget) {
    if (t < 1) throw ValueError("blocking: t must be >= 1");
    return scan_subspaces(B, s, workers, budget, false, t);
}

BlockingVerdict is_cutting_s_blocking(const PGPointSet& B, std::uint32_t s, unsigned workers,
                                      std::uint64_t budget) {
    return scan_subspaces(B, s, workers, budget, true, 0);
}

bigint ceil_of(const bigrat& r) {
    bigint num = boost::multiprecision::numerator(r);
    bigint den = boost::multiprecision::denominator(r);  // > 0 canonical
    if (num >= 0) return (num + den - 1) / den;
    return num / den;
}

BoundReport blocking_bounds(std::uint32_t t, std::uint32_t s, std::uint32_t k, std::uint32_t q,
                            std::optional<bool> spanning) {
    if (t < 1 || s < 1 || s >= k || q < 2) throw ValueError("blocking_bounds: bad parameters");
    BoundReport rep;
    rep.t = t;
    rep.s = s;
    rep.k = k;
    rep.q = q;
    rep.spanning = spanning;
    const bigint Q = q;
    auto qp = [&](std::uint32_t e) { return boost::multiprecision::pow(Q, e); };

    rep.size_any = bigrat(bigint(t) * (qp(k) - 1), qp(k - s) - 1);
    rep.size_nonspanning = bigrat(qp(k - 1));
    rep.size_spanning_branch1 = bigrat(bigint(t) * (qp(s + 1) - 1), Q - 1);
    rep.size_spanning_branch2 = bigrat(bigint(t) + Q * Q * (qp(s) - 1) / (Q - 1));
    rep.size_spanning = std::min(rep.size_spanning_branch1, rep.size_spanning_branch2);
    rep.cutting_a = bigrat(bigint(k - s) * (qp(k) - 1), qp(k - s) - 1);
    rep.cutting_b_applicable = k - s <= q;
    rep.cutting_b = bigrat(bigint(k - s) * (qp(s + 1) - 1), Q - 1);
    return rep;
}

std::string render_bounds(const BoundReport& rep) {
    std::ostringstream os;
    os << "t-fold s-blocking bounds for t=" << rep.t << " s=" << rep.s << " k=" << rep.k
       << " q=" << rep.q << "\n";
    os << "  any set:                  |B| >= " << rep.size_any << "  (>= "
       << ceil_of(rep.size_any) << ")\n";
    if (!rep.spanning.has_value() || !*rep.spanning)
        os << "  complement non-spanning:  |B| >= " << rep.size_nonspanning << "  (>= "
           << ceil_of(rep.size_nonspanning) << ")\n";
    if (!rep.spanning.has_value() || *rep.spanning)
        os << "  complement spanning:      |B| >= " << rep.size_spanning << "  (>= "
           << ceil_of(rep.size_spanning) << ")  [branches " << rep.size_spanning_branch1
           << ", " << rep.size_spanning_branch2 << "]\n";
    os << "  cutting:                  m   >= " << rep.cutting_a << "  (>= "
       << ceil_of(rep.cutting_a) << ")\n";
    if (rep.cutting_b_applicable)
        os << "  cutting (k-s<=q):         m   >= " << rep.cutting_b << "  (>= "
           << ceil_of(rep.cutting_b) << ")\n";
    else
        os << "  cutting (k-s<=q):         inapplicable, k-s = " << rep.k - rep.s
           << " > q = " << rep.q << "\n";
    return os.str();
}

std::optional<MinimumBlocking> exhaustive_min_blocking(FieldPtr ctx, std::uint32_t k,
                                                       std::uint32_t t, std::uint32_t s,
                                                       std::uint32_t max_size) {
    if (t < 1 || s < 1 || s >= k) throw ValueError("exhaustive_min_blocking: bad parameters");
    const std::uint32_t q = ctx->q();
    bigint npts = (boost::multiprecision::pow(bigint(q), k) - 1) / (q - 1);
    if (npts > 64) throw BudgetError("exhaustive_min_blocking: too many points");
    const std::uint32_t N = npts.convert_to<std::uint32_t>();
    if (max_size == 0 || max_size > N) max_size = N;
    if (N > 15 && max_size > 5)
        throw BudgetError("exhaustive_min_blocking: requires <= 15 points or max_size <= 5");

    // all points, in the canonical sorted order
    std::vector<std::vector<elem_t>> pts;
    {
        std::vector<std::vector<elem_t>> raw;
        std::vector<elem_t> v(k, 0);
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < k; ++i) total *= q;
        for (std::uint64_t code = 1; code < total; ++code) {
            decode_vec(code, k, q, v.data());
            raw.push_back(v);
        }
        pts = make_pointset(ctx, k, raw).points;
    }

    // per-subspace membership masks over point indices
    SubspaceEnumerator en(ctx, k, k - s);
    std::vector<std::uint64_t> masks;
    {
        PGPointSet all{ctx, k, pts};
        MembershipCounter mc(all);
        std::vector<std::size_t> inside;
        en.for_range(0, en.count(), [&](const SubspaceBasis& sb) {
            mc.collect(sb.basis, inside);
            std::uint64_t m = 0;
            for (std::size_t i : inside) m |= std::uint64_t(1) << i;
            masks.push_back(m);
        });
    }

    auto works = [&](std::uint64_t cand) {
        for (std::uint64_t m : masks)
            if (std::uint32_t(std::popcount(cand & m)) < t) return false;
        return true;
    };

    for (std::uint32_t size = 1; size <= max_size; ++size) {
        std::vector<std::uint32_t> c(size);
        for (std::uint32_t i = 0; i < size; ++i) c[i] = i;
        for (;;) {
            std::uint64_t cand = 0;
            for (std::uint32_t i : c) cand |= std::uint64_t(1) << i;
            if (works(cand)) {
                MinimumBlocking mb;
                mb.size = size;
                for (std::uint32_t i : c) mb.points.push_back(pts[i]);
                return mb;
            }
            std::int64_t i = size - 1;
            while (i >= 0 && c[i] == N - size + i) --i;
            if (i < 0) break;
            ++c[i];
            for (std::uint32_t j = std::uint32_t(i) + 1; j < size; ++j) c[j] = c[j - 1] + 1;
        }
    }
    return std::nullopt;
}

namespace {

std::vector<long long> read_tokens_ps(std::istream& in) {
    std::vector<long long> toks;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        long long v;
        while (ls >> v) toks.push_back(v);
        if (!ls.eof()) {
            std::string junk;
            ls.clear();
            ls >> junk;
            if (!junk.empty()) throw ParseError("unexpected token '" + junk + "'");
        }
    }
    return toks;
}

} // namespace

PGPointSet read_pointset(std::istream& in) {
    std::vector<long long> t = read_tokens_ps(in);
    if (t.size() < 3) throw ParseError("point set file: missing q k m header");
    long long q = t[0], k = t[1], m = t[2];
    if (q < 2 || q > 65535) throw ParseError("point set file: q out of range");
    if (!is_prime(std::uint32_t(q)))
        throw ParseError("point set file format v1 supports prime q only");
    if (k < 1 || m < 1) throw ParseError("point set file: k and m must be positive");
    if (std::size_t(t.size()) != 3 + std::size_t(k) * std::size_t(m))
        throw ParseError("point set file: wrong entry count");
    std::vector<std::vector<elem_t>> raw;
    for (long long i = 0; i < m; ++i) {
        std::vector<elem_t> v(static_cast<std::size_t>(k));
        for (long long j = 0; j < k; ++j) {
            long long x = t[3 + i * k + j];
            if (x < 0 || x >= q) throw ParseError("point set file: entry out of field range");
            v[std::size_t(j)] = elem_t(x);
        }
        raw.push_back(std::move(v));
    }
    return make_pointset(make_field(std::uint32_t(q)), std::uint32_t(k), raw);
}

PGPointSet read_pointset_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    return read_pointset(f);
}

void write_pointset(std::ostream& out, const PGPointSet& B) {
    out << B.ctx->q() << ' ' << B.k << ' ' << B.points.size() << '\n';
    for (const auto& p : B.points) {
        for (std::uint32_t j = 0; j < B.k; ++j) {
            if (j) out << ' ';
            out << p[j];
        }
        out << '\n';
    }
}

void write_pointset_file(const std::string& path, const PGPointSet& B) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "' for writing");
    write_pointset(f, B);
    f.close();
    if (!f) throw ParseError("write failed for '" + path + "'");
}

} // namespace gfc
