#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cg3/rational.hpp"

namespace cg3 {

/// Raised when a rational with denominator divisible by p is reduced mod p.
class DenominatorDivisibleByP : public std::domain_error {
public:
    explicit DenominatorDivisibleByP(std::uint64_t p)
        : std::domain_error("denominator divisible by p = " + std::to_string(p)) {}
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

class Fp;

/// Field descriptor F_p. Primality is checked once here; elements made
/// through a field skip re-validation.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
        if (p >= (std::uint64_t{1} << 31))
            throw std::invalid_argument("PrimeField: modulus must fit in 31 bits");
    }

    std::uint64_t modulus() const { return p_; }

    Fp element(long long value) const;
    Fp from_rational(const Rational& q) const;

private:
    std::uint64_t p_;
};

/// Element of F_p carrying its modulus. Mixing moduli in arithmetic throws.
class Fp {
public:
    Fp(std::uint64_t residue, const PrimeField& field) : r_(residue % field.modulus()), p_(field.modulus()) {}

    std::uint64_t residue() const { return r_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return r_ == 0; }

    Fp zero_like() const { return unchecked(0, p_); }
    Fp one_like() const { return unchecked(1 % p_, p_); }

    Fp operator-() const { return unchecked(r_ == 0 ? 0 : p_ - r_, p_); }

    Fp& operator+=(const Fp& o) {
        check_same(o);
        r_ += o.r_;
        if (r_ >= p_) r_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        check_same(o);
        r_ += p_ - o.r_;
        if (r_ >= p_) r_ -= p_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        check_same(o);
        r_ = (r_ * o.r_) % p_;
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

    Fp operator*(long long k) const {
        long long m = k % static_cast<long long>(p_);
        if (m < 0) m += static_cast<long long>(p_);
        return unchecked((r_ * static_cast<std::uint64_t>(m)) % p_, p_);
    }

    Fp inverse() const {
        if (r_ == 0) throw std::domain_error("Fp: inverse of zero");
        // extended Euclid on (r, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t rr = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(r_);
        while (new_r != 0) {
            const std::int64_t q = rr / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            rr -= q * new_r;
            std::swap(rr, new_r);
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return unchecked(static_cast<std::uint64_t>(t), p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.r_ == b.r_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    /// Fast path for internal loops where the modulus is already validated.
    static Fp unchecked(std::uint64_t residue, std::uint64_t p) { return Fp(residue, p, 0); }

private:
    Fp(std::uint64_t r, std::uint64_t p, int) : r_(r), p_(p) {}

    void check_same(const Fp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("Fp: mixed moduli in arithmetic");
    }

    std::uint64_t r_;
    std::uint64_t p_;
};

inline Fp operator*(long long k, const Fp& x) { return x * k; }

inline Fp PrimeField::element(long long value) const {
    long long m = value % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return Fp::unchecked(static_cast<std::uint64_t>(m), p_);
}

/// Reduces num/den mod p as num * den^{-1}; throws DenominatorDivisibleByP
/// when the denominator has no inverse.
inline Fp PrimeField::from_rational(const Rational& q) const {
    const BigInt p_big(static_cast<std::int64_t>(p_));
    BigInt n = q.num() % p_big;
    BigInt d = q.den() % p_big;
    if (d == 0) throw DenominatorDivisibleByP(p_);
    if (n < 0) n += p_big;
    const auto nr = static_cast<std::uint64_t>(n);
    const auto dr = static_cast<std::uint64_t>(d);
    return Fp::unchecked(nr, p_) * Fp::unchecked(dr, p_).inverse();
}

inline Fp reduce_mod_p(const Rational& q, const PrimeField& field) { return field.from_rational(q); }

inline Fp ring_cast(const Rational& value, const Fp& context) {
    const BigInt p_big(static_cast<std::int64_t>(context.modulus()));
    BigInt n = value.num() % p_big;
    BigInt d = value.den() % p_big;
    if (d == 0) throw DenominatorDivisibleByP(context.modulus());
    if (n < 0) n += p_big;
    return Fp::unchecked(static_cast<std::uint64_t>(n), context.modulus()) *
           Fp::unchecked(static_cast<std::uint64_t>(d), context.modulus()).inverse();
}

}  // namespace cg3
