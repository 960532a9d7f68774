#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "magnitude.hpp"
#include "rational.hpp"

namespace ultrametric {

// Dense polynomial with exact rational coefficients, low degree first.
// Canonical form: no trailing zero coefficient; the zero polynomial is the
// empty list (degree -1).
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { prune(); }

    Poly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        prune();
    }

    static Poly zero() { return Poly(); }

    static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

    // X - r
    static Poly linear_root(const Rational& r) { return Poly(std::vector<Rational>{-r, Rational(1)}); }

    // X^m
    static Poly monomial(std::size_t m) {
        std::vector<Rational> c(m + 1, Rational(0));
        c[m] = Rational(1);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Rational leading() const {
        if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !is_zero() && c_.back().is_one(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return Poly(std::move(c));
    }

    Poly operator-() const {
        std::vector<Rational> c;
        c.reserve(c_.size());
        for (const auto& v : c_) c.push_back(-v);
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }

    friend Poly operator*(const Rational& s, const Poly& p) {
        if (s.is_zero()) return zero();
        std::vector<Rational> c;
        c.reserve(p.c_.size());
        for (const auto& v : p.c_) c.push_back(s * v);
        return Poly(std::move(c));
    }

    // Euclidean division over Q; divisor must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        if (a.degree() < b.degree()) return {zero(), a};
        std::vector<Rational> rem = a.c_;
        std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
        const Rational lead_inv = b.leading().inverse();
        for (long i = a.degree(); i >= b.degree(); --i) {
            const auto ui = static_cast<std::size_t>(i);
            if (rem[ui].is_zero()) continue;
            const Rational q = rem[ui] * lead_inv;
            quo[ui - b.c_.size() + 1] = q;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[ui - b.c_.size() + 1 + j] -= q * b.c_[j];
        }
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<Rational> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rational(static_cast<long>(i)) * c_[i];
        return Poly(std::move(c));
    }

    Poly monic() const {
        if (is_zero()) throw DomainError("cannot normalize the zero polynomial");
        return leading().inverse() * *this;
    }

    // P(X + shift), computed exactly by Horner over Q[X].
    Poly shift_variable(const Rational& shift) const {
        Poly acc = zero();
        const Poly x_plus(std::vector<Rational>{shift, Rational(1)});
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x_plus + constant(*it);
        return acc;
    }

    // Primitive integer multiple: scale so coefficients are coprime integers
    // with positive leading coefficient. Bounds growth inside the gcd loop.
    Poly primitive_part() const {
        if (is_zero()) return zero();
        BigInt den_lcm(1);
        for (const auto& v : c_) den_lcm = BigInt::lcm(den_lcm, v.den());
        BigInt num_gcd(0);
        for (const auto& v : c_) num_gcd = BigInt::gcd(num_gcd, (v * Rational(den_lcm)).num());
        Rational scale = Rational(den_lcm) / Rational(num_gcd);
        if (leading().sign() < 0) scale = -scale;
        return scale * *this;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ",";
            out += c_[i].to_string();
        }
        return out;
    }

private:
    void prune() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// gcd over Q: content cleared first, Euclidean remainders normalized monic at
// every step. Result is monic (or zero when both inputs are zero).
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a.is_zero() ? Poly::zero() : a.primitive_part();
    Poly y = b.is_zero() ? Poly::zero() : b.primitive_part();
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        if (!r.is_zero()) r = r.monic();
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

// P / gcd(P, P'), made monic: same distinct roots, all simple.
inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
    if (p.degree() == 0) return Poly::constant(Rational(1));
    const Poly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.monic();
    auto [q, r] = divmod(p, g);
    (void)r; // exact by construction
    return q.monic();
}

// --- spectral value ---------------------------------------------------------

// n-th term of the spectral-value supremum: |coeff n|_p^{1/(deg-n)} for
// n < deg, ZERO otherwise (the padding that turns the sup over N into a
// finite max).
inline Magnitude spectral_value_terms(const Poly& p, std::int64_t prime, std::size_t n) {
    require_prime(prime);
    const long deg = p.degree();
    if (deg < 0 || static_cast<long>(n) >= deg) return Magnitude::zero();
    const Magnitude base = padic_magnitude(p.coeff(n), prime);
    return mag_pow(base, Rational(1, deg - static_cast<long>(n)));
}

// max_{0 <= n < deg} |a_n|^{1/(deg-n)}. Degree-0 polynomials have spectral
// value 0 by convention; the zero polynomial is rejected. Non-monic input is
// evaluated by the same formula (meaningful only for monic P).
inline Magnitude spectral_value(const Poly& p, std::int64_t prime) {
    require_prime(prime);
    if (p.is_zero()) throw DomainError("spectral value of the zero polynomial");
    Magnitude best = Magnitude::zero();
    for (long n = 0; n < p.degree(); ++n)
        best = mag_max(best, spectral_value_terms(p, prime, static_cast<std::size_t>(n)));
    return best;
}

} // namespace ultrametric
