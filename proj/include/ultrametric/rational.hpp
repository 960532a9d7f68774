#pragma once

#include <gmp.h>

#include <cstdlib>
#include <string>
#include <utility>

#include "bigint.hpp"
#include "errors.hpp"

namespace ultrametric {

// Exact rational number over GMP's mpq_t. Always canonical: denominator > 0,
// gcd(|num|, den) = 1.
class Rational {
public:
    Rational() { mpq_init(q_); }

    Rational(long v) { // NOLINT(google-explicit-constructor)
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }

    Rational(long num, long den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        mpq_init(q_);
        mpq_set_si(q_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(q_, q_, d);
        mpq_clear(d);
    }

    Rational(const BigInt& num, const BigInt& den) {
        if (den.is_zero()) throw DomainError("rational with zero denominator");
        mpq_init(q_);
        mpq_set_num(q_, num.raw());
        mpq_set_den(q_, den.raw());
        mpq_canonicalize(q_);
    }

    explicit Rational(const BigInt& num) {
        mpq_init(q_);
        mpq_set_z(q_, num.raw());
    }

    Rational(const Rational& other) {
        mpq_init(q_);
        mpq_set(q_, other.q_);
    }

    Rational(Rational&& other) noexcept {
        mpq_init(q_);
        mpq_swap(q_, other.q_);
    }

    Rational& operator=(const Rational& other) {
        if (this != &other) mpq_set(q_, other.q_);
        return *this;
    }

    Rational& operator=(Rational&& other) noexcept {
        mpq_swap(q_, other.q_);
        return *this;
    }

    ~Rational() { mpq_clear(q_); }

    BigInt num() const {
        BigInt n;
        mpz_set(n.raw(), mpq_numref(q_));
        return n;
    }

    BigInt den() const {
        BigInt d;
        mpz_set(d.raw(), mpq_denref(q_));
        return d;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DomainError("rational division by zero");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    Rational& operator+=(const Rational& b) {
        mpq_add(q_, q_, b.q_);
        return *this;
    }

    Rational& operator-=(const Rational& b) {
        mpq_sub(q_, q_, b.q_);
        return *this;
    }

    Rational& operator*=(const Rational& b) {
        mpq_mul(q_, q_, b.q_);
        return *this;
    }

    Rational& operator/=(const Rational& b) {
        if (b.is_zero()) throw DomainError("rational division by zero");
        mpq_div(q_, q_, b.q_);
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) == 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_si(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }

    Rational inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw DomainError("zero to a negative power");
            return Rational(0);
        }
        const Rational base = e < 0 ? inverse() : *this;
        const unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
        Rational r(BigInt(base.num()).pow(k), BigInt(base.den()).pow(k));
        return r;
    }

    double to_double() const { return mpq_get_d(q_); }

    // "n" when the denominator is 1, otherwise "n/d".
    std::string to_string() const {
        char* s = mpq_get_str(nullptr, 10, q_);
        std::string out(s);
        std::free(s);
        return out;
    }

private:
    mpq_t q_;
};

// Strict parser for the textual rational format "n" / "n/d" (optional sign,
// decimal digits). Used by the polynomial and JSON readers, which prepend
// position information to the thrown ParseError.
inline Rational parse_rational(const std::string& text) {
    auto fail = [&](const std::string& why) -> Rational {
        throw ParseError("malformed rational '" + text + "': " + why);
    };
    if (text.empty()) return fail("empty");
    const auto slash = text.find('/');
    const std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
    auto check_int = [&](const std::string& part, bool sign_allowed) {
        if (part.empty()) fail("missing digits");
        std::size_t i = 0;
        if (sign_allowed && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) fail("missing digits");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') fail(std::string("unexpected character '") + part[i] + "'");
    };
    check_int(num_part, true);
    const std::string num_digits = num_part[0] == '+' ? num_part.substr(1) : num_part;
    if (slash == std::string::npos) return Rational(BigInt(num_digits));
    const std::string den_part = text.substr(slash + 1);
    if (den_part.find('/') != std::string::npos) fail("more than one '/'");
    check_int(den_part, false);
    BigInt den(den_part);
    if (den.is_zero()) fail("zero denominator");
    return Rational(BigInt(num_digits), den);
}

} // namespace ultrametric
