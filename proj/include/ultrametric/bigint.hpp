#pragma once

#include <gmp.h>

#include <cstdint>
#include <string>
#include <utility>

#include "errors.hpp"

namespace ultrametric {

// Value-semantic arbitrary-precision integer over GMP's mpz_t.
// Only the operations the library actually needs are exposed.
class BigInt {
public:
    BigInt() { mpz_init(z_); }

    BigInt(long v) { mpz_init_set_si(z_, v); } // NOLINT(google-explicit-constructor)

    explicit BigInt(const std::string& decimal) {
        if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw ParseError("not a decimal integer: '" + decimal + "'");
        }
    }

    BigInt(const BigInt& other) { mpz_init_set(z_, other.z_); }

    BigInt(BigInt&& other) noexcept {
        mpz_init(z_);
        mpz_swap(z_, other.z_);
    }

    BigInt& operator=(const BigInt& other) {
        if (this != &other) mpz_set(z_, other.z_);
        return *this;
    }

    BigInt& operator=(BigInt&& other) noexcept {
        mpz_swap(z_, other.z_);
        return *this;
    }

    ~BigInt() { mpz_clear(z_); }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }

    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.z_, z_);
        return r;
    }

    BigInt& operator+=(const BigInt& b) {
        mpz_add(z_, z_, b.z_);
        return *this;
    }

    BigInt& operator-=(const BigInt& b) {
        mpz_sub(z_, z_, b.z_);
        return *this;
    }

    BigInt& operator*=(const BigInt& b) {
        mpz_mul(z_, z_, b.z_);
        return *this;
    }

    // Truncated division; throws on zero divisor.
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw DomainError("integer division by zero");
        BigInt r;
        mpz_tdiv_q(r.z_, a.z_, b.z_);
        return r;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw DomainError("integer division by zero");
        BigInt r;
        mpz_tdiv_r(r.z_, a.z_, b.z_);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_si(z_, 1) == 0; }
    int sign() const { return mpz_sgn(z_); }

    BigInt abs() const {
        BigInt r;
        mpz_abs(r.z_, z_);
        return r;
    }

    static BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }

    static BigInt lcm(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_lcm(r.z_, a.z_, b.z_);
        return r;
    }

    BigInt pow(unsigned long e) const {
        BigInt r;
        mpz_pow_ui(r.z_, z_, e);
        return r;
    }

    // Largest r with r^n <= this; requires this >= 0 and n >= 1.
    BigInt nth_root_floor(unsigned long n) const {
        if (sign() < 0) throw DomainError("nth root of a negative integer");
        if (n == 0) throw InputError("0th root");
        BigInt r;
        mpz_root(r.z_, z_, n);
        return r;
    }

    bool divisible_by(const BigInt& d) const {
        if (d.is_zero()) return is_zero();
        return mpz_divisible_p(z_, d.z_) != 0;
    }

    // Divides out every factor `p` in place; returns how many were removed.
    // Undefined for |this| <= 0 is avoided: zero returns 0 and is untouched.
    long remove_factor(const BigInt& p) {
        if (is_zero()) return 0;
        return static_cast<long>(mpz_remove(z_, z_, p.z_));
    }

    bool is_probable_prime() const { return mpz_probab_prime_p(z_, 40) != 0; }

    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }

    long to_long() const {
        if (!fits_long()) throw ResourceError("integer does not fit in a machine word: " + to_string());
        return mpz_get_si(z_);
    }

    double to_double() const { return mpz_get_d(z_); }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    const mpz_t& raw() const { return z_; }
    mpz_t& raw() { return z_; }

private:
    mpz_t z_;
};

} // namespace ultrametric
