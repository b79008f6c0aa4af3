#include "gfc/gf.hpp"

#include <algorithm>
#include <numeric>

namespace gfc {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void factor_prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& m) {
    if (q < 2) throw ValueError("field order must be >= 2, got " + std::to_string(q));
    std::uint32_t base = q;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= q; ++d) {
        if (q % d == 0) { base = d; break; }
    }
    p = base;
    m = 0;
    std::uint32_t r = q;
    while (r % p == 0) { r /= p; ++m; }
    if (r != 1) throw ValueError(std::to_string(q) + " is not a prime power");
}

namespace {

// Polynomials over GF(p) as coefficient vectors, low degree first, no
// trailing zeros (except the zero polynomial = empty vector).
using Poly = std::vector<std::uint32_t>;

Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    // b monic-normalized by dividing through its leading coefficient's inverse
    auto inv_mod_p = [p](std::uint32_t x) {
        std::uint32_t r = 1, e = p - 2, base = x % p;
        while (e) {
            if (e & 1) r = std::uint64_t(r) * base % p;
            base = std::uint64_t(base) * base % p;
            e >>= 1;
        }
        return r;
    };
    std::uint32_t lead_inv = inv_mod_p(b.back());
    while (a.size() >= b.size()) {
        std::uint32_t f = std::uint64_t(a.back()) * lead_inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t sub = std::uint64_t(f) * b[i] % p;
            a[shift + i] = std::uint32_t((a[shift + i] + p - sub) % p);
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    std::uint32_t m = std::uint32_t(f.size()) - 1;
    if (m == 0) return false;
    if (f[0] == 0) return m == 1;  // divisible by x
    // trial division by every monic polynomial of degree 1..m/2
    for (std::uint32_t d = 1; 2 * d <= m; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            std::uint64_t c = code;
            for (std::uint32_t i = 0; i < d; ++i) { g[i] = std::uint32_t(c % p); c /= p; }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

std::vector<std::uint32_t> builtin_modulus(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw ValueError(std::to_string(p) + " is not prime");
    if (m < 1) throw ValueError("extension degree must be >= 1");
    if (m == 1) return {p};  // nominal: arithmetic is plain mod p
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > 65536) throw ValueError("field order exceeds 2^16");
    }
    std::uint64_t count = q;  // p^m choices of non-leading coefficients
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly f(m + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < m; ++i) { f[i] = std::uint32_t(c % p); c /= p; }
        f[m] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw ValueError("no irreducible polynomial found");  // unreachable: they always exist
}

FieldCtx::FieldCtx(std::uint32_t q) {
    std::uint32_t p, m;
    factor_prime_power(q, p, m);
    *this = FieldCtx(p, m);
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw ValueError(std::to_string(p) + " is not prime");
    if (m < 1) throw ValueError("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > 65536) throw ValueError("field order exceeds 2^16");
    }
    p_ = p;
    m_ = m;
    q_ = std::uint32_t(q);
    if (modulus.empty()) {
        modulus_ = builtin_modulus(p, m);
    } else {
        if (modulus.size() != m + 1 && m > 1)
            throw ValueError("modulus must have degree exactly m");
        for (auto& c : modulus) c %= p;
        if (m > 1) {
            if (modulus.back() != 1) throw ValueError("modulus must be monic");
            if (!is_irreducible(modulus, p)) throw ValueError("modulus is reducible");
        }
        modulus_ = std::move(modulus);
    }
    if (m_ == 1) modulus_ = {p};
    build_tables();
}

elem_t FieldCtx::add_digits(elem_t a, elem_t b) const {
    // componentwise base-p digit addition
    std::uint32_t r = 0, mult = 1, x = a, y = b;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t d = (x % p_ + y % p_) % p_;
        r += d * mult;
        mult *= p_;
        x /= p_;
        y /= p_;
    }
    return elem_t(r);
}

elem_t FieldCtx::poly_mul_mod(elem_t a, elem_t b) const {
    // schoolbook product of the digit vectors, reduced by the modulus
    std::vector<std::uint32_t> da(m_), db(m_), prod(2 * m_ - 1, 0);
    std::uint32_t x = a, y = b;
    for (std::uint32_t i = 0; i < m_; ++i) { da[i] = x % p_; x /= p_; }
    for (std::uint32_t i = 0; i < m_; ++i) { db[i] = y % p_; y /= p_; }
    for (std::uint32_t i = 0; i < m_; ++i)
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    // reduce: x^m = -(modulus minus leading term)
    for (std::uint32_t d = 2 * m_ - 2; d >= m_; --d) {
        std::uint32_t c = prod[d];
        if (c) {
            prod[d] = 0;
            for (std::uint32_t i = 0; i < m_; ++i) {
                std::uint32_t sub = c * modulus_[i] % p_;
                prod[d - m_ + i] = (prod[d - m_ + i] + p_ - sub) % p_;
            }
        }
        if (d == m_) break;
    }
    std::uint32_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) { r += prod[i] * mult; mult *= p_; }
    return elem_t(r);
}

void FieldCtx::build_tables() {
    if (m_ == 1) {
        // inv[i] = i^{-1} mod p via the standard recurrence
        inv_table_.assign(q_, 0);
        if (q_ > 1) inv_table_[1] = 1;
        for (std::uint32_t i = 2; i < q_; ++i)
            inv_table_[i] = elem_t(std::uint64_t(q_ - q_ / i) * inv_table_[q_ % i] % q_);
        generator_ = 0;
        for (std::uint32_t a = 1; a < q_; ++a) {
            if (element_order(elem_t(a)) == q_ - 1) { generator_ = elem_t(a); break; }
        }
        return;
    }

    // find the smallest code with multiplicative order q-1, using table-free
    // multiplication; order check via the prime factorization of q-1
    std::vector<std::uint32_t> prime_factors;
    std::uint32_t n = q_ - 1;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d) {
        if (n % d == 0) {
            prime_factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) prime_factors.push_back(n);

    auto pow_nt = [this](elem_t a, std::uint32_t e) {
        elem_t r = 1, base = a;
        while (e) {
            if (e & 1) r = poly_mul_mod(r, base);
            base = poly_mul_mod(base, base);
            e >>= 1;
        }
        return r;
    };
    generator_ = 0;
    for (std::uint32_t a = 2; a < q_; ++a) {
        bool primitive = pow_nt(elem_t(a), q_ - 1) == 1;
        for (std::uint32_t f : prime_factors)
            if (primitive && pow_nt(elem_t(a), (q_ - 1) / f) == 1) primitive = false;
        if (primitive) { generator_ = elem_t(a); break; }
    }
    if (generator_ == 0) throw ValueError("no primitive element found; modulus reducible?");

    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    elem_t x = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = poly_mul_mod(x, generator_);
    }
    if (x != 1) throw ValueError("generator order mismatch; modulus reducible?");

    neg_table_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        // negate each base-p digit
        std::uint32_t r = 0, mult = 1, v = a;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint32_t d = v % p_;
            r += (d ? p_ - d : 0) * mult;
            mult *= p_;
            v /= p_;
        }
        neg_table_[a] = elem_t(r);
    }
    if (p_ != 2 && q_ <= 256) {
        add_table_.assign(std::size_t(q_) * q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b)
                add_table_[std::size_t(a) * q_ + b] = add_digits(elem_t(a), elem_t(b));
    }
}

elem_t FieldCtx::inv(elem_t a) const {
    if (a == 0) throw ValueError("inverse of zero");
    if (m_ == 1) return inv_table_[a];
    std::uint32_t e = (q_ - 1 - log_[a]) % (q_ - 1);
    return exp_[e];
}

elem_t FieldCtx::pow(elem_t a, std::uint64_t e) const {
    elem_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint32_t FieldCtx::element_order(elem_t a) const {
    if (a == 0) throw ValueError("order of zero");
    std::uint32_t ord = 1;
    elem_t x = a;
    while (x != 1) {
        x = mul(x, a);
        ++ord;
        if (ord > q_) throw ValueError("order computation diverged");
    }
    return ord;
}

FieldPtr make_field(std::uint32_t q) { return std::make_shared<const FieldCtx>(q); }
FieldPtr make_field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus) {
    return std::make_shared<const FieldCtx>(p, m, std::move(modulus));
}

} // namespace gfc
