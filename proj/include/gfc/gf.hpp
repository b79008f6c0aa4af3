#pragma once

#include "gfc/common.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace gfc {

bool is_prime(std::uint32_t n);

// Splits q into p^m for prime p; throws ValueError if q is not a prime power.
void factor_prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& m);

// The modulus used for GF(p^m) when none is supplied: the first monic
// irreducible polynomial of degree m over GF(p), candidates ordered by the
// integer value of the coefficient vector (c_0 + c_1 p + ... + c_{m-1} p^{m-1}).
// Returned low degree first, length m+1, leading coefficient 1.
// This table is part of the public contract: element codes of extension
// fields are reproducible across runs and machines.
std::vector<std::uint32_t> builtin_modulus(std::uint32_t p, std::uint32_t m);

// Arithmetic context for GF(p^m). Elements are integer codes in [0, q);
// 0 and 1 are the additive and multiplicative identities. For m > 1, code c
// represents the polynomial sum c_i x^i where c = sum c_i p^i (base-p digits),
// and multiplication goes through log/antilog tables over a fixed primitive
// element (the smallest code of multiplicative order q-1).
// Immutable after construction; safe to share across threads.
class FieldCtx {
  public:
    // q must be a prime power <= 2^16.
    explicit FieldCtx(std::uint32_t q);
    // modulus optional; empty means builtin_modulus(p, m).
    FieldCtx(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus = {});

    std::uint32_t q() const { return q_; }
    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    bool prime_field() const { return m_ == 1; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    elem_t add(elem_t a, elem_t b) const {
        if (m_ == 1) {
            std::uint32_t s = std::uint32_t(a) + b;
            if (s >= q_) s -= q_;
            return elem_t(s);
        }
        if (p_ == 2) return elem_t(a ^ b);
        if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
        return add_digits(a, b);
    }
    elem_t neg(elem_t a) const {
        if (m_ == 1) return a == 0 ? 0 : elem_t(q_ - a);
        if (p_ == 2) return a;
        return neg_table_[a];
    }
    elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }
    elem_t mul(elem_t a, elem_t b) const {
        if (m_ == 1) return elem_t(std::uint32_t(a) * b % q_);
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    elem_t inv(elem_t a) const;  // ValueError on a == 0
    elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }
    elem_t pow(elem_t a, std::uint64_t e) const;

    // Smallest element code with multiplicative order q-1.
    elem_t primitive_element() const { return generator_; }
    std::uint32_t element_order(elem_t a) const;  // ValueError on a == 0

    bool operator==(const FieldCtx& o) const { return q_ == o.q_ && modulus_ == o.modulus_; }

  private:
    void build_tables();
    elem_t add_digits(elem_t a, elem_t b) const;
    elem_t poly_mul_mod(elem_t a, elem_t b) const;  // table-free, used during setup

    std::uint32_t q_ = 0, p_ = 0, m_ = 0;
    std::vector<std::uint32_t> modulus_;  // degree m, low first, monic; {p} nominal for m == 1
    elem_t generator_ = 0;
    std::vector<elem_t> inv_table_;           // m == 1
    std::vector<elem_t> exp_, neg_table_;     // m > 1
    std::vector<std::uint32_t> log_;          // m > 1, log_[0] unused
    std::vector<elem_t> add_table_;           // m > 1 and q <= 256, odd p
};

// Shared immutable context handle.
using FieldPtr = std::shared_ptr<const FieldCtx>;
FieldPtr make_field(std::uint32_t q);
FieldPtr make_field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus = {});

} // namespace gfc
