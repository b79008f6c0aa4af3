#include "gfc/code.hpp"

#include "gfc/subspace.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <mutex>
#include <sstream>

namespace gfc {

struct LinearCode::Cache {
    std::once_flag once;
    MatrixGF rref;
    MatrixGF pcheck;
};

LinearCode::LinearCode(FieldPtr ctx, MatrixGF gen, bool reduced)
    : ctx_(std::move(ctx)), gen_(std::move(gen)), reduced_(reduced),
      cache_(std::make_shared<Cache>()) {}

LinearCode LinearCode::from_generator(FieldPtr ctx, MatrixGF gen) {
    if (gen.rows() == 0 || gen.cols() == 0) throw ValueError("code: empty generator");
    RrefResult rr = rref_rank(gen);
    if (rr.rank == 0) throw ValueError("code: zero generator matrix");
    if (rr.rank == gen.rows()) return LinearCode(std::move(ctx), std::move(gen), false);
    MatrixGF trimmed(ctx, rr.rank, gen.cols());
    for (std::size_t r = 0; r < rr.rank; ++r)
        for (std::size_t c = 0; c < gen.cols(); ++c) trimmed.set(r, c, rr.R.at(r, c));
    return LinearCode(std::move(ctx), std::move(trimmed), true);
}

const MatrixGF& LinearCode::rref_generator() const {
    std::call_once(cache_->once, [this] {
        cache_->rref = rref_rank(gen_).R;
        cache_->pcheck = nullspace(gen_);
    });
    return cache_->rref;
}

const MatrixGF& LinearCode::parity_check() const {
    rref_generator();  // fills both
    return cache_->pcheck;
}

std::vector<elem_t> LinearCode::codeword(const std::vector<elem_t>& message) const {
    return vec_mat(message, gen_);
}

LinearCode dual(const LinearCode& C) {
    if (C.n() == C.k()) throw ValueError("dual: code has dimension n, dual is trivial");
    return LinearCode::from_generator(C.ctx(), C.parity_check());
}

SupportSet support_of(const std::vector<elem_t>& word) {
    SupportSet s;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i]) s.push_back(i);
    return s;
}

SupportSet subcode_support(const LinearCode& C, const MatrixGF& basis) {
    if (basis.cols() != C.k()) throw ValueError("subcode_support: basis does not match k");
    std::vector<bool> hit(C.n(), false);
    std::vector<elem_t> y(C.k());
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        y.assign(basis.row(r), basis.row(r) + C.k());
        std::vector<elem_t> w = C.codeword(y);
        for (std::size_t i = 0; i < C.n(); ++i)
            if (w[i]) hit[i] = true;
    }
    SupportSet s;
    for (std::size_t i = 0; i < C.n(); ++i)
        if (hit[i]) s.push_back(i);
    return s;
}

namespace {

// q = 2 path: Gray-code sweep over messages with bit-packed codewords.
CodewordScan scan_binary(const LinearCode& C) {
    const std::size_t k = C.k(), n = C.n(), words = (n + 63) / 64;
    std::vector<std::uint64_t> rows(k * words, 0);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (C.generator().at(r, c))
                rows[r * words + c / 64] |= std::uint64_t(1) << (c % 64);

    CodewordScan out;
    std::vector<std::uint64_t> cw(words, 0);
    std::uint64_t best_min_msg = 0, best_max_msg = 0;
    std::uint32_t best_min_w = ~0u, best_max_w = 0;
    const std::uint64_t total = std::uint64_t(1) << k;
    std::uint64_t msg = 0;
    for (std::uint64_t g = 1; g < total; ++g) {
        unsigned b = unsigned(std::countr_zero(g));
        for (std::size_t i = 0; i < words; ++i) cw[i] ^= rows[b * words + i];
        msg ^= std::uint64_t(1) << b;
        std::uint32_t w = 0;
        for (std::size_t i = 0; i < words; ++i) w += std::uint32_t(std::popcount(cw[i]));
        ++out.dist[w];
        if (w < best_min_w || (w == best_min_w && msg < best_min_msg)) {
            best_min_w = w;
            best_min_msg = msg;
        }
        if (w > best_max_w || (w == best_max_w && msg < best_max_msg)) {
            best_max_w = w;
            best_max_msg = msg;
        }
    }
    out.min_weight = best_min_w;
    out.max_weight = best_max_w;
    out.min_message.resize(k);
    out.max_message.resize(k);
    decode_vec(best_min_msg, std::uint32_t(k), 2, out.min_message.data());
    decode_vec(best_max_msg, std::uint32_t(k), 2, out.max_message.data());
    out.min_word = C.codeword(out.min_message);
    out.max_word = C.codeword(out.max_message);
    return out;
}

} // namespace

CodewordScan scan_codewords(const LinearCode& C, std::uint64_t budget) {
    const std::uint32_t q = C.q();
    const std::size_t k = C.k(), n = C.n();
    bigint total = boost::multiprecision::pow(bigint(q), unsigned(k)) - 1;
    if (total > bigint(budget))
        throw BudgetError("scan_codewords: q^k - 1 = " + total.str() +
                          " exceeds budget " + std::to_string(budget));
    if (q == 2) return scan_binary(C);

    const FieldCtx& F = *C.ctx();
    CodewordScan out;
    std::vector<elem_t> msg(k, 0), cw(n, 0);
    std::uint64_t best_min_msg = 0, best_max_msg = 0, ord = 0;
    std::uint32_t best_min_w = ~0u, best_max_w = 0;
    const std::uint64_t count = std::uint64_t(total);
    for (std::uint64_t step = 0; step < count; ++step) {
        // advance the message odometer: digit 0 fastest
        std::size_t i = 0;
        for (;; ++i) {
            elem_t old = msg[i];
            msg[i] = elem_t((old + 1) % q);
            elem_t delta = F.sub(msg[i], old);
            const elem_t* row = C.generator().row(i);
            if (delta == 1) {
                for (std::size_t c = 0; c < n; ++c)
                    if (row[c]) cw[c] = F.add(cw[c], row[c]);
            } else {
                for (std::size_t c = 0; c < n; ++c)
                    if (row[c]) cw[c] = F.add(cw[c], F.mul(delta, row[c]));
            }
            if (msg[i] != 0) break;
        }
        ord = encode_vec(msg.data(), std::uint32_t(k), q);
        std::uint32_t w = 0;
        for (std::size_t c = 0; c < n; ++c)
            if (cw[c]) ++w;
        ++out.dist[w];
        if (w < best_min_w || (w == best_min_w && ord < best_min_msg)) {
            best_min_w = w;
            best_min_msg = ord;
        }
        if (w > best_max_w || (w == best_max_w && ord < best_max_msg)) {
            best_max_w = w;
            best_max_msg = ord;
        }
    }
    out.min_weight = best_min_w;
    out.max_weight = best_max_w;
    out.min_message.resize(k);
    out.max_message.resize(k);
    decode_vec(best_min_msg, std::uint32_t(k), q, out.min_message.data());
    decode_vec(best_max_msg, std::uint32_t(k), q, out.max_message.data());
    out.min_word = C.codeword(out.min_message);
    out.max_word = C.codeword(out.max_message);
    return out;
}

namespace {

// Scale so the first nonzero entry is 1; returns encoded form, or ~0 for the
// zero column.
std::uint64_t normalized_column_code(const LinearCode& C, std::size_t c) {
    const FieldCtx& F = *C.ctx();
    std::vector<elem_t> col(C.k());
    for (std::size_t r = 0; r < C.k(); ++r) col[r] = C.generator().at(r, c);
    std::size_t fn = 0;
    while (fn < col.size() && col[fn] == 0) ++fn;
    if (fn == col.size()) return ~std::uint64_t(0);
    elem_t s = F.inv(col[fn]);
    for (auto& x : col) x = F.mul(s, x);
    return encode_vec(col.data(), std::uint32_t(C.k()), C.q());
}

} // namespace

bool is_projective(const LinearCode& C) {
    std::vector<std::uint64_t> seen;
    for (std::size_t c = 0; c < C.n(); ++c) {
        std::uint64_t code = normalized_column_code(C, c);
        if (code == ~std::uint64_t(0)) return false;
        seen.push_back(code);
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

LinearCode projectivize(const LinearCode& C) {
    std::vector<std::size_t> keep;
    std::vector<std::uint64_t> seen;
    for (std::size_t c = 0; c < C.n(); ++c) {
        std::uint64_t code = normalized_column_code(C, c);
        if (code == ~std::uint64_t(0)) continue;
        if (std::find(seen.begin(), seen.end(), code) == seen.end()) {
            seen.push_back(code);
            keep.push_back(c);
        }
    }
    if (keep.empty()) throw ValueError("projectivize: no nonzero columns");
    return LinearCode::from_generator(C.ctx(), submatrix_columns(C.generator(), keep));
}

LinearCode puncture(const LinearCode& C, const std::vector<std::size_t>& coords) {
    std::vector<bool> drop(C.n(), false);
    for (std::size_t c : coords) {
        if (c >= C.n()) throw ValueError("puncture: coordinate out of range");
        drop[c] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < C.n(); ++c)
        if (!drop[c]) keep.push_back(c);
    if (keep.empty()) throw ValueError("puncture: no coordinates left");
    MatrixGF G = submatrix_columns(C.generator(), keep);
    if (rank_of(G) < C.k()) throw ValueError("puncture: dimension drops");
    return LinearCode::from_generator(C.ctx(), std::move(G));
}

namespace {

std::vector<long long> read_tokens(std::istream& in) {
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

LinearCode read_code(std::istream& in) {
    std::vector<long long> t = read_tokens(in);
    if (t.size() < 3) throw ParseError("code file: missing q k n header");
    long long q = t[0], k = t[1], n = t[2];
    if (q < 2 || q > 65535) throw ParseError("code file: q out of range");
    if (!is_prime(std::uint32_t(q)))
        throw ParseError("code file format v1 supports prime q only");
    if (k < 1 || n < 1) throw ParseError("code file: k and n must be positive");
    if (std::size_t(t.size()) != 3 + std::size_t(k) * std::size_t(n))
        throw ParseError("code file: expected " + std::to_string(k * n) + " entries, found " +
                         std::to_string(t.size() - 3));
    FieldPtr ctx = make_field(std::uint32_t(q));
    const std::size_t kk = std::size_t(k), nn = std::size_t(n);
    MatrixGF G(ctx, kk, nn);
    for (std::size_t i = 0; i < kk * nn; ++i) {
        long long v = t[3 + i];
        if (v < 0 || v >= q) throw ParseError("code file: entry out of field range");
        G.set(i / nn, i % nn, elem_t(v));
    }
    return LinearCode::from_generator(std::move(ctx), std::move(G));
}

LinearCode read_code_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    return read_code(f);
}

void write_code(std::ostream& out, const LinearCode& C) {
    out << C.q() << ' ' << C.k() << ' ' << C.n() << '\n';
    for (std::size_t r = 0; r < C.k(); ++r) {
        for (std::size_t c = 0; c < C.n(); ++c) {
            if (c) out << ' ';
            out << C.generator().at(r, c);
        }
        out << '\n';
    }
}

void write_code_file(const std::string& path, const LinearCode& C) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "' for writing");
    write_code(f, C);
    f.close();
    if (!f) throw ParseError("write failed for '" + path + "'");
}

} // namespace gfc
