#pragma once
// Coefficient domains for exact linear algebra: the rationals and prime fields F_p.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace klrtor {

using BigInt = mpz_class;
using Rational = mpq_class;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Returns the prime p if n = p^k for some k >= 1, otherwise 0.
inline std::uint64_t prime_power_base(std::uint64_t n) {
    if (n < 2) return 0;
    std::uint64_t p = 2;
    while (n % p != 0) ++p;
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
}

struct RationalField {
    using Element = Rational;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(long v) const { return Element(v); }
    Element from_rational(const Rational& r) const { return r; }

    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const {
        if (is_zero(a)) throw std::domain_error("division by zero in Q");
        return 1 / a;
    }
    /// a -= b * c, the inner step of row reduction.
    void sub_mul(Element& a, const Element& b, const Element& c) const { a -= b * c; }

    unsigned characteristic() const { return 0; }
    std::string name() const { return "Q"; }
    bool operator==(const RationalField&) const { return true; }
};

/// F_p with canonical residues 0..p-1; p is chosen at runtime.
class PrimeField {
public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
    }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(long v) const {
        long r = v % static_cast<long>(p_);
        return static_cast<Element>(r < 0 ? r + p_ : r);
    }
    Element from_rational(const Rational& r) const {
        BigInt num = r.get_num() % p_;
        BigInt den = r.get_den() % p_;
        if (num < 0) num += p_;
        if (den == 0) throw std::domain_error("rational with denominator divisible by p");
        return mul(static_cast<Element>(num.get_ui()), inv(static_cast<Element>(den.get_ui())));
    }

    bool is_zero(Element a) const { return a == 0; }
    Element add(Element a, Element b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element mul(Element a, Element b) const {
        return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element inv(Element a) const {
        if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(p_));
        // Fermat: a^(p-2)
        std::uint64_t result = 1, base = a, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<Element>(result);
    }
    void sub_mul(Element& a, Element b, Element c) const { a = sub(a, mul(b, c)); }

    unsigned characteristic() const { return p_; }
    std::string name() const { return "F_" + std::to_string(p_); }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

} // namespace klrtor
