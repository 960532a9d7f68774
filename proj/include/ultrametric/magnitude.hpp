#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "bigint.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace ultrametric {

enum class Ordering { less, equal, greater };

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    return BigInt(p).is_probable_prime();
}

inline void require_prime(std::int64_t p) {
    if (!is_prime(p)) throw InputError("p must be prime, got " + std::to_string(p));
}

// Exponent of the p-adic valuation: a rational number or +infinity (v(0)).
// Infinity absorbs addition and exceeds every finite value.
class ValExp {
public:
    ValExp() : infinite_(false), value_(0) {}
    ValExp(Rational v) : infinite_(false), value_(std::move(v)) {} // NOLINT(google-explicit-constructor)
    ValExp(long v) : infinite_(false), value_(v) {}                // NOLINT(google-explicit-constructor)

    static ValExp infinity() {
        ValExp v;
        v.infinite_ = true;
        return v;
    }

    bool is_infinite() const { return infinite_; }

    const Rational& finite_value() const {
        if (infinite_) throw DomainError("infinite valuation has no finite value");
        return value_;
    }

    friend ValExp operator+(const ValExp& a, const ValExp& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return ValExp(a.value_ + b.value_);
    }

    friend ValExp operator-(const ValExp& a, const ValExp& b) {
        if (b.infinite_) throw DomainError("cannot subtract an infinite valuation");
        if (a.infinite_) return infinity();
        return ValExp(a.value_ - b.value_);
    }

    friend bool operator==(const ValExp& a, const ValExp& b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.value_ == b.value_;
    }

    friend bool operator!=(const ValExp& a, const ValExp& b) { return !(a == b); }

    friend bool operator<(const ValExp& a, const ValExp& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }

    friend bool operator<=(const ValExp& a, const ValExp& b) { return a < b || a == b; }
    friend bool operator>(const ValExp& a, const ValExp& b) { return b < a; }
    friend bool operator>=(const ValExp& a, const ValExp& b) { return b <= a; }

    std::string to_string() const { return infinite_ ? "inf" : value_.to_string(); }

private:
    bool infinite_;
    Rational value_;
};

// Element of the multiplicative value group prod_p p^(q_p) with q_p rational,
// extended by an absorbing ZERO. Every norm value of the library lives here,
// so identities like multiplicativity hold as exact equalities.
//
// Invariants: keys are distinct primes, no stored exponent is zero, the empty
// map denotes 1.
class Magnitude {
public:
    Magnitude() : zero_(true) {}

    static Magnitude zero() { return Magnitude(); }

    static Magnitude one() {
        Magnitude m;
        m.zero_ = false;
        return m;
    }

    static Magnitude prime_power(std::int64_t p, const Rational& exponent) {
        require_prime(p);
        Magnitude m = one();
        if (!exponent.is_zero()) m.factors_.emplace(p, exponent);
        return m;
    }

    bool is_zero() const { return zero_; }
    bool is_one() const { return !zero_ && factors_.empty(); }

    const std::map<std::int64_t, Rational>& factors() const {
        if (zero_) throw DomainError("ZERO magnitude has no factorization");
        return factors_;
    }

    // Exponent of p (zero if absent); ZERO magnitude has no exponents.
    Rational exponent(std::int64_t p) const {
        const auto it = factors_.find(p);
        return it == factors_.end() ? Rational(0) : it->second;
    }

    friend Magnitude operator*(const Magnitude& a, const Magnitude& b) {
        if (a.zero_ || b.zero_) return zero();
        Magnitude r = a;
        for (const auto& [p, e] : b.factors_) {
            auto it = r.factors_.find(p);
            if (it == r.factors_.end()) {
                r.factors_.emplace(p, e);
            } else {
                it->second += e;
                if (it->second.is_zero()) r.factors_.erase(it);
            }
        }
        return r;
    }

    Magnitude& operator*=(const Magnitude& b) { return *this = *this * b; }

    // Exact exponent scaling. ZERO^q is ZERO for q > 0 and undefined otherwise.
    Magnitude pow(const Rational& q) const {
        if (zero_) {
            if (q.sign() <= 0) throw DomainError("ZERO magnitude to a nonpositive power");
            return zero();
        }
        Magnitude r = one();
        if (q.is_zero()) return r;
        for (const auto& [p, e] : factors_) r.factors_.emplace(p, e * q);
        return r;
    }

    Magnitude inverse() const { return pow(Rational(-1)); }

    friend bool operator==(const Magnitude& a, const Magnitude& b) {
        if (a.zero_ != b.zero_) return false;
        if (a.zero_) return true;
        return a.factors_ == b.factors_;
    }

    friend bool operator!=(const Magnitude& a, const Magnitude& b) { return !(a == b); }

    double to_double() const {
        if (zero_) return 0.0;
        double log_sum = 0.0;
        for (const auto& [p, e] : factors_) log_sum += e.to_double() * std::log(static_cast<double>(p));
        return std::exp(log_sum);
    }

    // "1", "0", or factors joined like "2^{1/4}*5^{-1}".
    std::string to_string() const {
        if (zero_) return "0";
        if (factors_.empty()) return "1";
        std::string out;
        for (const auto& [p, e] : factors_) {
            if (!out.empty()) out += "*";
            out += std::to_string(p) + "^{" + e.to_string() + "}";
        }
        return out;
    }

private:
    bool zero_;
    std::map<std::int64_t, Rational> factors_;
};

// --- p-adic valuation and the norm <-> valuation dictionary ---------------

// Exact p-adic valuation of a rational; INFINITY iff x = 0.
inline ValExp vp(const Rational& x, std::int64_t p) {
    require_prime(p);
    if (x.is_zero()) return ValExp::infinity();
    BigInt n = x.num().abs();
    BigInt d = x.den();
    const BigInt bp(static_cast<long>(p));
    const long vn = n.remove_factor(bp);
    const long vd = d.remove_factor(bp);
    return ValExp(Rational(vn - vd));
}

// |x|_p = p^{-v_p(x)}; ZERO iff x = 0.
inline Magnitude padic_magnitude(const Rational& x, std::int64_t p) {
    const ValExp v = vp(x, p);
    if (v.is_infinite()) return Magnitude::zero();
    return Magnitude::prime_power(p, -v.finite_value());
}

inline Magnitude mag_mul(const Magnitude& a, const Magnitude& b) { return a * b; }

inline Magnitude mag_pow(const Magnitude& m, const Rational& q) { return m.pow(q); }

// Rank-one dictionary, concrete hom fixed as v -> p^{-v}.
inline Magnitude magnitude_of_valuation(const ValExp& v, std::int64_t p) {
    require_prime(p);
    if (v.is_infinite()) return Magnitude::zero();
    return Magnitude::prime_power(p, -v.finite_value());
}

inline ValExp valuation_of_magnitude(const Magnitude& m, std::int64_t p) {
    require_prime(p);
    if (m.is_zero()) return ValExp::infinity();
    for (const auto& [q, e] : m.factors()) {
        if (q != p)
            throw DomainError("magnitude supported on prime " + std::to_string(q) +
                              ", not on " + std::to_string(p));
        (void)e;
    }
    return ValExp(-m.exponent(p));
}

inline double mag_to_float(const Magnitude& m) { return m.to_double(); }

// --- exact comparison ------------------------------------------------------

namespace detail {

// lcm of exponent denominators across one magnitude's factor map.
inline BigInt exponent_denominator_lcm(const Magnitude& m, BigInt acc) {
    for (const auto& [p, e] : m.factors()) {
        (void)p;
        acc = BigInt::lcm(acc, e.den());
    }
    return acc;
}

} // namespace detail

inline constexpr long kDefaultExponentBound = 1'000'000;

// Total order on magnitudes matching their real values. Nonzero magnitudes
// are compared by clearing the common denominator N of all exponent
// differences and cross-multiplying the integer products prod p^k. Integer
// exponents beyond `exponent_bound` raise ResourceError instead of risking a
// wrong (or never-terminating) answer.
inline Ordering mag_compare(const Magnitude& a, const Magnitude& b,
                            long exponent_bound = kDefaultExponentBound) {
    if (a.is_zero() && b.is_zero()) return Ordering::equal;
    if (a.is_zero()) return Ordering::less;
    if (b.is_zero()) return Ordering::greater;

    std::map<std::int64_t, Rational> diff;
    for (const auto& [p, e] : a.factors()) diff[p] = e;
    for (const auto& [p, e] : b.factors()) {
        auto it = diff.find(p);
        if (it == diff.end()) {
            diff.emplace(p, -e);
        } else {
            it->second -= e;
            if (it->second.is_zero()) diff.erase(it);
        }
    }
    if (diff.empty()) return Ordering::equal;

    BigInt n_common(1);
    for (const auto& [p, e] : diff) {
        (void)p;
        n_common = BigInt::lcm(n_common, e.den());
    }

    BigInt lhs(1), rhs(1);
    const BigInt bound(exponent_bound);
    for (const auto& [p, e] : diff) {
        const BigInt k = e.num() * (n_common / e.den());
        if (k.abs() > bound)
            throw ResourceError("cross-power exponent " + k.to_string() + " exceeds bound " +
                                bound.to_string());
        const auto ku = static_cast<unsigned long>(k.abs().to_long());
        if (k.sign() > 0)
            lhs *= BigInt(static_cast<long>(p)).pow(ku);
        else
            rhs *= BigInt(static_cast<long>(p)).pow(ku);
    }
    if (lhs == rhs) return Ordering::equal;
    return lhs < rhs ? Ordering::less : Ordering::greater;
}

inline bool mag_le(const Magnitude& a, const Magnitude& b) {
    return mag_compare(a, b) != Ordering::greater;
}

inline Magnitude mag_max(const Magnitude& a, const Magnitude& b) {
    return mag_compare(a, b) == Ordering::less ? b : a;
}

inline Magnitude mag_min(const Magnitude& a, const Magnitude& b) {
    return mag_compare(a, b) == Ordering::greater ? b : a;
}

// Exact factorization of a positive rational into a magnitude, by trial
// division of numerator and denominator. Factors above `trial_bound` raise
// ResourceError (the value would not be representable as found primes).
inline Magnitude magnitude_from_positive_rational(const Rational& c,
                                                  long trial_bound = kDefaultExponentBound) {
    if (c.sign() <= 0) throw InputError("magnitude of a nonpositive rational");
    Magnitude m = Magnitude::one();
    auto absorb = [&](BigInt n, long side) {
        long p = 2;
        while (!n.is_one()) {
            if (p > trial_bound)
                throw ResourceError("trial division bound exceeded while factoring " + c.to_string());
            if (BigInt(p) * BigInt(p) > n) {
                // remaining cofactor is prime
                m *= Magnitude::prime_power(n.to_long(), Rational(side));
                break;
            }
            const long k = n.remove_factor(BigInt(p));
            if (k > 0) m *= Magnitude::prime_power(p, Rational(side * k));
            p = p == 2 ? 3 : p + 2;
        }
    };
    absorb(c.num(), 1);
    absorb(c.den(), -1);
    return m;
}

namespace detail {

// Decomposition m = rational_part * (radical ^ (1/N)) with the radical an
// N-th-power-free positive integer (every prime exponent reduced mod N).
struct RadicalForm {
    Rational rational_part; // positive
    BigInt radical;         // positive integer, exponents in [0, N)
};

inline RadicalForm radical_form(const Magnitude& m, const BigInt& n_common, long exponent_bound) {
    RadicalForm f{Rational(1), BigInt(1)};
    const BigInt bound(exponent_bound);
    for (const auto& [p, e] : m.factors()) {
        const BigInt k = e.num() * (n_common / e.den());
        if (k.abs() > bound)
            throw ResourceError("cleared exponent " + k.to_string() + " exceeds bound " +
                                bound.to_string());
        // floor-divide k by N
        BigInt q = k / n_common;
        BigInt r = k % n_common;
        if (r.sign() < 0) {
            q -= BigInt(1);
            r += n_common;
        }
        const BigInt bp(static_cast<long>(p));
        if (!q.is_zero()) {
            const long ql = q.to_long();
            if (ql > 0)
                f.rational_part *= Rational(bp.pow(static_cast<unsigned long>(ql)));
            else
                f.rational_part /= Rational(bp.pow(static_cast<unsigned long>(-ql)));
        }
        if (!r.is_zero()) f.radical *= bp.pow(static_cast<unsigned long>(r.to_long()));
    }
    return f;
}

// Compare rational_part^N * radical against q^N exactly (both sides of
// m <=> q * s^{1/N} raised to the N-th power).
inline Ordering compare_scaled_radical(const RadicalForm& m, const Rational& q, const BigInt& s,
                                       unsigned long n) {
    // m.rational_part^N * m.radical  vs  q^N * s
    const Rational lhs = m.rational_part.pow(static_cast<long>(n)) * Rational(m.radical);
    const Rational rhs = q.pow(static_cast<long>(n)) * Rational(s);
    if (lhs == rhs) return Ordering::equal;
    return lhs < rhs ? Ordering::less : Ordering::greater;
}

} // namespace detail

// Exact comparison of m against the real sum a + b. The sum usually leaves
// the value group, so three routes are combined:
//   1. m <= max(a, b) settles it (magnitudes are nonnegative);
//   2. commensurable radical parts reduce to a single cross-powered compare;
//   3. distinct N-th-power-free radicals can never be exactly equal, so
//      escalating exact rational brackets from integer nth-roots terminate.
inline Ordering mag_compare_to_sum(const Magnitude& m, const Magnitude& a, const Magnitude& b,
                                   long exponent_bound = kDefaultExponentBound) {
    if (a.is_zero()) return mag_compare(m, b, exponent_bound);
    if (b.is_zero()) return mag_compare(m, a, exponent_bound);
    if (m.is_zero()) return Ordering::less;
    if (mag_compare(m, a, exponent_bound) != Ordering::greater) return Ordering::less;
    if (mag_compare(m, b, exponent_bound) != Ordering::greater) return Ordering::less;

    // common exponent denominator across all three magnitudes
    BigInt n_common(1);
    n_common = detail::exponent_denominator_lcm(m, n_common);
    n_common = detail::exponent_denominator_lcm(a, n_common);
    n_common = detail::exponent_denominator_lcm(b, n_common);
    if (n_common > BigInt(exponent_bound))
        throw ResourceError("common exponent denominator exceeds bound");
    const auto n = static_cast<unsigned long>(n_common.to_long());

    const auto fm = detail::radical_form(m, n_common, exponent_bound);
    const auto fa = detail::radical_form(a, n_common, exponent_bound);
    const auto fb = detail::radical_form(b, n_common, exponent_bound);

    if (fa.radical == fb.radical) {
        const Rational q = fa.rational_part + fb.rational_part;
        return detail::compare_scaled_radical(fm, q, fa.radical, n);
    }

    // Distinct radicals: equality is impossible; bracket with exact rationals.
    const BigInt ten(10);
    for (unsigned long digits = 8; digits <= 512; digits *= 2) {
        const BigInt scale = ten.pow(digits);
        auto bracket = [&](const detail::RadicalForm& f) {
            // f.radical^{1/N} * 10^digits lies in [root, root + 2)
            const BigInt root = (f.radical * scale.pow(n)).nth_root_floor(n);
            const Rational lo = f.rational_part * Rational(root, scale);
            const Rational hi = f.rational_part * Rational(root + BigInt(2), scale);
            return std::pair<Rational, Rational>(lo, hi);
        };
        const auto [m_lo, m_hi] = bracket(fm);
        const auto [a_lo, a_hi] = bracket(fa);
        const auto [b_lo, b_hi] = bracket(fb);
        if (m_hi < a_lo + b_lo) return Ordering::less;
        if (m_lo > a_hi + b_hi) return Ordering::greater;
    }
    throw ResourceError("sum comparison failed to separate at 512 digits");
}

} // namespace ultrametric
