#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "extension.hpp"
#include "magnitude.hpp"
#include "rational.hpp"

namespace ultrametric {

// Element of Z/n, the finite carrier of TABLE seminorms.
struct Residue {
    std::int64_t value = 0;   // normalized into [0, modulus)
    std::int64_t modulus = 2; // >= 2

    Residue() = default;

    Residue(std::int64_t v, std::int64_t n) : modulus(n) {
        if (n < 2) throw InputError("residue modulus must be >= 2");
        value = ((v % n) + n) % n;
    }

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.modulus == b.modulus && a.value == b.value;
    }
};

// A point of whichever carrier a seminorm lives on: Q, an extension, or Z/n.
using CarrierElement = std::variant<Rational, FieldElement, Residue>;

inline CarrierElement ce_add(const CarrierElement& a, const CarrierElement& b) {
    if (a.index() != b.index()) throw InputError("carrier mismatch in addition");
    if (std::holds_alternative<Rational>(a))
        return std::get<Rational>(a) + std::get<Rational>(b);
    if (std::holds_alternative<FieldElement>(a))
        return std::get<FieldElement>(a) + std::get<FieldElement>(b);
    const auto& ra = std::get<Residue>(a);
    const auto& rb = std::get<Residue>(b);
    if (ra.modulus != rb.modulus) throw InputError("residues of different moduli");
    return Residue(ra.value + rb.value, ra.modulus);
}

inline CarrierElement ce_mul(const CarrierElement& a, const CarrierElement& b) {
    if (a.index() != b.index()) throw InputError("carrier mismatch in multiplication");
    if (std::holds_alternative<Rational>(a))
        return std::get<Rational>(a) * std::get<Rational>(b);
    if (std::holds_alternative<FieldElement>(a))
        return std::get<FieldElement>(a) * std::get<FieldElement>(b);
    const auto& ra = std::get<Residue>(a);
    const auto& rb = std::get<Residue>(b);
    if (ra.modulus != rb.modulus) throw InputError("residues of different moduli");
    return Residue(ra.value * rb.value, ra.modulus);
}

inline CarrierElement ce_neg(const CarrierElement& a) {
    if (std::holds_alternative<Rational>(a)) return -std::get<Rational>(a);
    if (std::holds_alternative<FieldElement>(a)) return -std::get<FieldElement>(a);
    const auto& r = std::get<Residue>(a);
    return Residue(-r.value, r.modulus);
}

inline CarrierElement ce_pow(const CarrierElement& a, long n) {
    if (n < 0) throw InputError("carrier power with negative exponent");
    if (std::holds_alternative<Rational>(a)) return std::get<Rational>(a).pow(n);
    if (std::holds_alternative<FieldElement>(a)) return std::get<FieldElement>(a).pow(n);
    const auto& r = std::get<Residue>(a);
    Residue acc(1, r.modulus);
    Residue base = r;
    auto k = static_cast<unsigned long>(n);
    while (k) {
        if (k & 1) acc = Residue(acc.value * base.value, r.modulus);
        base = Residue(base.value * base.value, r.modulus);
        k >>= 1;
    }
    return acc;
}

inline bool ce_eq(const CarrierElement& a, const CarrierElement& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<Rational>(a)) return std::get<Rational>(a) == std::get<Rational>(b);
    if (std::holds_alternative<FieldElement>(a))
        return std::get<FieldElement>(a) == std::get<FieldElement>(b);
    return std::get<Residue>(a) == std::get<Residue>(b);
}

inline std::string ce_to_string(const CarrierElement& a) {
    if (std::holds_alternative<Rational>(a)) return std::get<Rational>(a).to_string();
    if (std::holds_alternative<FieldElement>(a)) return std::get<FieldElement>(a).to_string();
    return std::to_string(std::get<Residue>(a).value) + " (mod " +
           std::to_string(std::get<Residue>(a).modulus) + ")";
}

// A named, evaluatable seminorm in unbundled form: the function is a value
// decoupled from its carrier's algebraic structure, so several seminorms can
// coexist on one carrier.
class SeminormSpec {
public:
    enum class Kind { padic, scaled, max_pow, basis, spectral, table };
    enum class Carrier { rationals, extension, residues };

    // x -> |x|_p on Q
    static SeminormSpec padic(std::int64_t p) {
        require_prime(p);
        SeminormSpec s;
        s.kind_ = Kind::padic;
        s.p_ = p;
        return s;
    }

    // x -> c * |x|_p on Q, c a positive rational (factored exactly)
    static SeminormSpec scaled(const Rational& c, std::int64_t p) {
        require_prime(p);
        if (c.sign() <= 0) throw InputError("scale must be positive");
        SeminormSpec s;
        s.kind_ = Kind::scaled;
        s.p_ = p;
        s.scale_rat_ = c;
        s.scale_ = magnitude_from_positive_rational(c);
        return s;
    }

    // x -> max(|x|_p, |x|_p^k) on Q: power-multiplicative, not multiplicative
    static SeminormSpec max_pow(std::int64_t p, long k) {
        require_prime(p);
        if (k < 2) throw InputError("max_pow exponent must be >= 2");
        SeminormSpec s;
        s.kind_ = Kind::max_pow;
        s.p_ = p;
        s.k_ = k;
        return s;
    }

    static SeminormSpec basis(ExtensionField::Ptr ext) {
        SeminormSpec s;
        s.kind_ = Kind::basis;
        s.ext_ = std::move(ext);
        return s;
    }

    static SeminormSpec spectral(ExtensionField::Ptr ext) {
        SeminormSpec s;
        s.kind_ = Kind::spectral;
        s.ext_ = std::move(ext);
        return s;
    }

    // finite table on Z/n; requires value(0) = 0 and value(-x) = value(x)
    static SeminormSpec table(std::int64_t modulus, std::vector<Magnitude> values) {
        if (modulus < 2) throw InputError("table modulus must be >= 2");
        if (modulus > (std::int64_t{1} << 31)) throw InputError("table modulus too large");
        if (static_cast<std::int64_t>(values.size()) != modulus)
            throw InputError("table needs one value per residue");
        if (!values[0].is_zero()) throw InputError("table value at 0 must be ZERO");
        for (std::int64_t r = 1; r < modulus; ++r)
            if (values[static_cast<std::size_t>(r)] != values[static_cast<std::size_t>(modulus - r)])
                throw InputError("table must satisfy value(-x) = value(x); fails at " +
                                 std::to_string(r));
        SeminormSpec s;
        s.kind_ = Kind::table;
        s.modulus_ = modulus;
        s.values_ = std::move(values);
        return s;
    }

    Kind kind() const { return kind_; }

    Carrier carrier() const {
        switch (kind_) {
        case Kind::padic:
        case Kind::scaled:
        case Kind::max_pow: return Carrier::rationals;
        case Kind::basis:
        case Kind::spectral: return Carrier::extension;
        case Kind::table: return Carrier::residues;
        }
        return Carrier::rationals;
    }

    std::int64_t prime() const {
        return carrier() == Carrier::extension ? ext_->prime() : p_;
    }

    long max_pow_exponent() const { return k_; }
    const Rational& scale_rational() const { return scale_rat_; }
    const ExtensionField::Ptr& extension() const { return ext_; }
    std::int64_t table_modulus() const { return modulus_; }
    const std::vector<Magnitude>& table_values() const { return values_; }

    Magnitude eval(const Rational& x) const {
        switch (kind_) {
        case Kind::padic: return padic_magnitude(x, p_);
        case Kind::scaled:
            return x.is_zero() ? Magnitude::zero() : scale_ * padic_magnitude(x, p_);
        case Kind::max_pow: {
            const Magnitude m = padic_magnitude(x, p_);
            if (m.is_zero()) return m;
            return mag_compare(m, Magnitude::one()) != Ordering::greater ? m
                                                                         : m.pow(Rational(k_));
        }
        default: throw InputError("seminorm carrier is not Q");
        }
    }

    Magnitude eval(const FieldElement& x) const {
        if (carrier() != Carrier::extension) throw InputError("seminorm carrier is not an extension");
        if (!same_field(*x.parent(), *ext_)) throw InputError("element of a different extension");
        return kind_ == Kind::basis ? basis_norm(x) : spectral_norm(x);
    }

    Magnitude eval(const Residue& x) const {
        if (kind_ != Kind::table) throw InputError("seminorm carrier is not Z/n");
        if (x.modulus != modulus_) throw InputError("residue modulus does not match table");
        return values_[static_cast<std::size_t>(x.value)];
    }

    Magnitude eval(const CarrierElement& x) const {
        if (std::holds_alternative<Rational>(x)) return eval(std::get<Rational>(x));
        if (std::holds_alternative<FieldElement>(x)) return eval(std::get<FieldElement>(x));
        return eval(std::get<Residue>(x));
    }

    CarrierElement carrier_zero() const {
        switch (carrier()) {
        case Carrier::rationals: return Rational(0);
        case Carrier::extension: return ext_->zero();
        case Carrier::residues: return Residue(0, modulus_);
        }
        return Rational(0);
    }

    CarrierElement carrier_one() const {
        switch (carrier()) {
        case Carrier::rationals: return Rational(1);
        case Carrier::extension: return ext_->one();
        case Carrier::residues: return Residue(1, modulus_);
        }
        return Rational(1);
    }

    std::string name() const {
        switch (kind_) {
        case Kind::padic: return "padic(" + std::to_string(p_) + ")";
        case Kind::scaled: return "scaled(" + scale_rat_.to_string() + "," + std::to_string(p_) + ")";
        case Kind::max_pow:
            return "max_pow(" + std::to_string(p_) + "," + std::to_string(k_) + ")";
        case Kind::basis: return "basis";
        case Kind::spectral: return "spectral";
        case Kind::table: return "table(" + std::to_string(modulus_) + ")";
        }
        return "?";
    }

private:
    SeminormSpec() = default;

    Kind kind_ = Kind::padic;
    std::int64_t p_ = 2;
    long k_ = 2;
    Rational scale_rat_{1};
    Magnitude scale_ = Magnitude::one();
    ExtensionField::Ptr ext_;
    std::int64_t modulus_ = 0;
    std::vector<Magnitude> values_;
};

// Exact record of a convergent construction: a limit is claimed only when
// the last `window` evaluated terms agree exactly; otherwise only the float
// bracket is asserted.
struct LimitEstimate {
    long terms_evaluated = 0;
    Magnitude last_term;      // exact infimum of the evaluated terms
    bool stabilized = false;
    double bracket_low = 0.0; // min float over evaluated terms
    double bracket_high = 0.0;// float of the exact running infimum
};

// --- smoothing seminorm (n-th root of f at x^n) -----------------------------

// f(x^n)^{1/n}, the n-th term of the smoothing infimum.
inline Magnitude smoothing_term(const SeminormSpec& f, const CarrierElement& x, long n) {
    if (n < 1) throw InputError("smoothing term index must be >= 1");
    return mag_pow(f.eval(ce_pow(x, n)), Rational(1, n));
}

// Terms at n = 1, 2, 4, ..., max_n (doubling keeps exponent denominators
// small). Early-stops once `window` consecutive evaluated terms agree.
inline LimitEstimate smoothing_estimate(const SeminormSpec& f, const CarrierElement& x,
                                        long max_n = 1024, long window = 4) {
    if (max_n < 1) throw InputError("max_n must be >= 1");
    if (window < 1) throw InputError("window must be >= 1");
    LimitEstimate est;
    Magnitude inf;
    bool first = true;
    double float_low = 0.0;
    std::deque<Magnitude> recent;
    CarrierElement power = x;
    for (long n = 1; n <= max_n; n *= 2) {
        if (n > 1) power = ce_mul(power, power);
        const Magnitude term = mag_pow(f.eval(power), Rational(1, n));
        const double tf = term.to_double();
        if (first) {
            inf = term;
            float_low = tf;
            first = false;
        } else {
            inf = mag_min(inf, term);
            float_low = std::min(float_low, tf);
        }
        ++est.terms_evaluated;
        recent.push_back(term);
        if (static_cast<long>(recent.size()) > window) recent.pop_front();
        if (static_cast<long>(recent.size()) == window) {
            bool all_equal = true;
            for (const auto& t : recent)
                if (t != recent.front()) all_equal = false;
            if (all_equal) {
                est.stabilized = true;
                break;
            }
        }
    }
    est.last_term = inf;
    est.bracket_low = float_low;
    est.bracket_high = inf.to_double();
    return est;
}

// --- seminorm from a constant (y becomes multiplicative in the limit) -------

namespace detail {

// Sampled power-multiplicativity check: f(z^n) = f(z)^n for n in {2,3} on the
// given points. Violations carry the witness.
inline void require_pow_mul_on(const SeminormSpec& f, const std::vector<CarrierElement>& pts) {
    for (const auto& z : pts) {
        const Magnitude fz = f.eval(z);
        for (long n : {2L, 3L}) {
            const Magnitude lhs = f.eval(ce_pow(z, n));
            const Magnitude rhs = fz.is_zero() ? Magnitude::zero() : fz.pow(Rational(n));
            if (lhs != rhs)
                throw PreconditionError("f is not power-multiplicative: f(" + ce_to_string(z) +
                                        "^" + std::to_string(n) + ") = " + lhs.to_string() +
                                        " but f(x)^" + std::to_string(n) + " = " + rhs.to_string());
        }
    }
}

} // namespace detail

// f(x * y^n) / f(y)^n, the n-th term of the constant-smoothing limit.
inline Magnitude seminorm_from_const_term(const SeminormSpec& f, const CarrierElement& y,
                                          const CarrierElement& x, long n) {
    if (n < 1) throw InputError("term index must be >= 1");
    detail::require_pow_mul_on(f, {y, x});
    const Magnitude fy = f.eval(y);
    if (fy.is_zero()) throw DomainError("f(y) must be nonzero");
    return f.eval(ce_mul(x, ce_pow(y, n))) * fy.pow(Rational(-n));
}

// Terms at n = 1..max_n; antitonicity is asserted term-by-term (a violation
// falsifies the power-multiplicativity hypothesis and is reported with its
// index). Early-stops once `window` consecutive terms agree.
inline LimitEstimate seminorm_from_const_estimate(const SeminormSpec& f, const CarrierElement& y,
                                                  const CarrierElement& x, long max_n = 64,
                                                  long window = 4) {
    if (max_n < 1) throw InputError("max_n must be >= 1");
    if (window < 1) throw InputError("window must be >= 1");
    detail::require_pow_mul_on(f, {y, x});
    const Magnitude fy = f.eval(y);
    if (fy.is_zero()) throw DomainError("f(y) must be nonzero");
    const Magnitude fy_inv = fy.inverse();

    LimitEstimate est;
    Magnitude prev;
    bool first = true;
    double float_low = 0.0;
    std::deque<Magnitude> recent;
    CarrierElement xyn = x;
    Magnitude denom = Magnitude::one();
    for (long n = 1; n <= max_n; ++n) {
        xyn = ce_mul(xyn, y);
        denom *= fy_inv;
        const Magnitude term = f.eval(xyn) * denom;
        if (!first && mag_compare(term, prev) == Ordering::greater)
            throw PreconditionError("sequence is not antitone at n = " + std::to_string(n) +
                                    ": term " + term.to_string() + " > previous " + prev.to_string());
        const double tf = term.to_double();
        float_low = first ? tf : std::min(float_low, tf);
        first = false;
        prev = term;
        ++est.terms_evaluated;
        recent.push_back(term);
        if (static_cast<long>(recent.size()) > window) recent.pop_front();
        if (static_cast<long>(recent.size()) == window) {
            bool all_equal = true;
            for (const auto& t : recent)
                if (t != recent.front()) all_equal = false;
            if (all_equal) {
                est.stabilized = true;
                break;
            }
        }
    }
    est.last_term = prev; // antitone: the last term is the running infimum
    est.bracket_low = float_low;
    est.bracket_high = prev.to_double();
    return est;
}

// --- seminorm from a bounded function (sup of f(xy)/f(y)) -------------------

// sup_{y, f(y) != 0} f(x*y)/f(y), with the ratio taken as 0 when f(y) = 0.
// Computable exactly on finite carriers (exhaustive max after exhaustively
// verifying the hypotheses) and for multiplicative f, where the closed form
// is f(x) itself. PADIC and SPECTRAL are multiplicative by construction;
// other infinite-carrier kinds are rejected.
inline Magnitude seminorm_from_bounded(const SeminormSpec& f, const CarrierElement& x) {
    switch (f.kind()) {
    case SeminormSpec::Kind::padic:
    case SeminormSpec::Kind::spectral:
        return f.eval(x); // multiplicative fixed point
    case SeminormSpec::Kind::table: break;
    default:
        throw InputError("seminorm_from_bounded needs a finite carrier or a multiplicative f; " +
                         f.name() + " is neither");
    }

    const std::int64_t n = f.table_modulus();
    if (!std::holds_alternative<Residue>(x)) throw InputError("table seminorm expects a residue");
    const Residue rx = std::get<Residue>(x);
    if (rx.modulus != n) throw InputError("residue modulus does not match table");

    auto fr = [&](std::int64_t v) { return f.eval(Residue(v, n)); };

    // exhaustive hypothesis checks, each violation reported with a witness
    if (!fr(0).is_zero()) throw PreconditionError("f(0) = 0 fails: f(0) = " + fr(0).to_string());
    for (std::int64_t a = 0; a < n; ++a) {
        if (fr(-a) != fr(a))
            throw PreconditionError("f(-x) = f(x) fails at x = " + std::to_string(a));
        for (std::int64_t b = a; b < n; ++b) {
            if (mag_compare_to_sum(fr(a + b), fr(a), fr(b)) == Ordering::greater)
                throw PreconditionError("subadditivity fails at (" + std::to_string(a) + ", " +
                                        std::to_string(b) + "): f(a+b) = " + fr(a + b).to_string() +
                                        " > f(a) + f(b)");
            if ((fr(a).is_zero() || fr(b).is_zero()) && !fr(a * b).is_zero())
                throw PreconditionError("no bounding constant exists: f(" + std::to_string(a) +
                                        "*" + std::to_string(b) + ") = " + fr(a * b).to_string() +
                                        " but f(a)*f(b) = 0");
        }
    }

    Magnitude best = Magnitude::zero();
    for (std::int64_t y = 0; y < n; ++y) {
        const Magnitude fy = fr(y);
        if (fy.is_zero()) continue; // ratio is 0 by convention
        best = mag_max(best, fr(rx.value * y) * fy.inverse());
    }
    return best;
}

// --- axiom checking ---------------------------------------------------------

enum class Axiom { seminorm, norm, nonarch, pow_mul, mult, extends, bounded_mult, isometry };

inline std::string axiom_name(Axiom a) {
    switch (a) {
    case Axiom::seminorm: return "SEMINORM";
    case Axiom::norm: return "NORM";
    case Axiom::nonarch: return "NONARCH";
    case Axiom::pow_mul: return "POW_MUL";
    case Axiom::mult: return "MULT";
    case Axiom::extends: return "EXTENDS";
    case Axiom::bounded_mult: return "BOUNDED_MULT";
    case Axiom::isometry: return "ISOMETRY";
    }
    return "?";
}

struct AxiomCheck {
    Axiom axiom = Axiom::seminorm;
    bool pass = false;
    std::string witness;            // counterexample with exact values when failing
    std::optional<Magnitude> bound; // least sampled c for BOUNDED_MULT
};

// Runs the requested axiom profile over the sample set; every verdict is
// either PASS over all sampled tuples or a counterexample with exact values.
inline std::vector<AxiomCheck> check_axioms(const SeminormSpec& f,
                                            const std::vector<CarrierElement>& samples,
                                            const std::vector<Axiom>& profile,
                                            const std::vector<Automorphism>& isometry_auts = {}) {
    if (samples.empty()) throw InputError("sample set must be nonempty");
    for (const auto& s : samples) f.eval(s); // carrier mismatch surfaces here

    auto seminorm_witness = [&]() -> std::string {
        const CarrierElement zero = f.carrier_zero();
        if (!f.eval(zero).is_zero()) return "f(0) = " + f.eval(zero).to_string() + " != 0";
        const Magnitude f1 = f.eval(f.carrier_one());
        if (mag_compare(f1, Magnitude::one()) == Ordering::greater)
            return "f(1) = " + f1.to_string() + " > 1";
        for (const auto& x : samples) {
            if (f.eval(ce_neg(x)) != f.eval(x))
                return "f(-x) != f(x) at x = " + ce_to_string(x) + ": " +
                       f.eval(ce_neg(x)).to_string() + " vs " + f.eval(x).to_string();
        }
        for (std::size_t i = 0; i < samples.size(); ++i)
            for (std::size_t j = i; j < samples.size(); ++j) {
                const auto& x = samples[i];
                const auto& y = samples[j];
                if (mag_compare_to_sum(f.eval(ce_add(x, y)), f.eval(x), f.eval(y)) ==
                    Ordering::greater)
                    return "subadditivity fails at (" + ce_to_string(x) + ", " + ce_to_string(y) +
                           "): f(x+y) = " + f.eval(ce_add(x, y)).to_string();
                if (mag_compare(f.eval(ce_mul(x, y)), f.eval(x) * f.eval(y)) == Ordering::greater)
                    return "submultiplicativity fails at (" + ce_to_string(x) + ", " +
                           ce_to_string(y) + "): f(xy) = " + f.eval(ce_mul(x, y)).to_string() +
                           " > f(x)f(y) = " + (f.eval(x) * f.eval(y)).to_string();
            }
        return {};
    };

    std::vector<AxiomCheck> report;
    for (const Axiom ax : profile) {
        AxiomCheck check;
        check.axiom = ax;
        std::string witness;
        switch (ax) {
        case Axiom::seminorm: witness = seminorm_witness(); break;
        case Axiom::norm: {
            witness = seminorm_witness();
            if (witness.empty())
                for (const auto& x : samples)
                    if (f.eval(x).is_zero() && !ce_eq(x, f.carrier_zero())) {
                        witness = "definiteness fails: f(" + ce_to_string(x) + ") = 0 but x != 0";
                        break;
                    }
            break;
        }
        case Axiom::nonarch: {
            for (std::size_t i = 0; i < samples.size() && witness.empty(); ++i)
                for (std::size_t j = i; j < samples.size(); ++j) {
                    const auto& x = samples[i];
                    const auto& y = samples[j];
                    const Magnitude lhs = f.eval(ce_add(x, y));
                    const Magnitude rhs = mag_max(f.eval(x), f.eval(y));
                    if (mag_compare(lhs, rhs) == Ordering::greater) {
                        witness = "strong triangle inequality fails at (" + ce_to_string(x) + ", " +
                                  ce_to_string(y) + "): f(x+y) = " + lhs.to_string() +
                                  " > max = " + rhs.to_string();
                        break;
                    }
                }
            break;
        }
        case Axiom::pow_mul: {
            for (const auto& x : samples) {
                if (!witness.empty()) break;
                const Magnitude fx = f.eval(x);
                for (long n : {2L, 3L, 5L}) {
                    const Magnitude lhs = f.eval(ce_pow(x, n));
                    const Magnitude rhs = fx.is_zero() ? Magnitude::zero() : fx.pow(Rational(n));
                    if (lhs != rhs) {
                        witness = "power-multiplicativity fails at (" + ce_to_string(x) + ", " +
                                  std::to_string(n) + "): f(x^n) = " + lhs.to_string() +
                                  " != f(x)^n = " + rhs.to_string();
                        break;
                    }
                }
            }
            break;
        }
        case Axiom::mult: {
            const Magnitude f1 = f.eval(f.carrier_one());
            if (!f1.is_one()) {
                witness = "f(1) = " + f1.to_string() + " != 1";
                break;
            }
            for (std::size_t i = 0; i < samples.size() && witness.empty(); ++i)
                for (std::size_t j = i; j < samples.size(); ++j) {
                    const auto& x = samples[i];
                    const auto& y = samples[j];
                    const Magnitude lhs = f.eval(ce_mul(x, y));
                    const Magnitude rhs = f.eval(x) * f.eval(y);
                    if (lhs != rhs) {
                        witness = "multiplicativity fails at (" + ce_to_string(x) + ", " +
                                  ce_to_string(y) + "): f(xy) = " + lhs.to_string() +
                                  " != f(x)f(y) = " + rhs.to_string();
                        break;
                    }
                }
            break;
        }
        case Axiom::extends: {
            if (f.carrier() == SeminormSpec::Carrier::residues)
                throw InputError("EXTENDS has no meaning on a finite carrier");
            const std::int64_t p = f.prime();
            std::vector<Rational> rationals = {Rational(0),          Rational(1), Rational(-1),
                                               Rational(2),          Rational(1, 2),
                                               Rational(p),          Rational(1, p),
                                               Rational(p) * Rational(p), Rational(3, 4)};
            for (const auto& s : samples) {
                if (std::holds_alternative<Rational>(s)) rationals.push_back(std::get<Rational>(s));
                if (std::holds_alternative<FieldElement>(s)) {
                    const auto& e = std::get<FieldElement>(s);
                    bool scalar = true;
                    for (std::size_t i = 1; i < e.coords().size(); ++i)
                        if (!e.coords()[i].is_zero()) scalar = false;
                    if (scalar) rationals.push_back(e.coords()[0]);
                }
            }
            for (const auto& q : rationals) {
                const Magnitude lhs = f.carrier() == SeminormSpec::Carrier::extension
                                          ? f.eval(f.extension()->embed(q))
                                          : f.eval(q);
                const Magnitude rhs = padic_magnitude(q, p);
                if (lhs != rhs) {
                    witness = "extension fails at q = " + q.to_string() + ": f(q) = " +
                              lhs.to_string() + " != |q|_p = " + rhs.to_string();
                    break;
                }
            }
            break;
        }
        case Axiom::bounded_mult: {
            Magnitude least_c = Magnitude::zero();
            for (std::size_t i = 0; i < samples.size() && witness.empty(); ++i)
                for (std::size_t j = i; j < samples.size(); ++j) {
                    const auto& x = samples[i];
                    const auto& y = samples[j];
                    const Magnitude prod = f.eval(x) * f.eval(y);
                    const Magnitude fxy = f.eval(ce_mul(x, y));
                    if (prod.is_zero()) {
                        if (!fxy.is_zero()) {
                            witness = "no bounding constant: f(xy) = " + fxy.to_string() +
                                      " with f(x)f(y) = 0 at (" + ce_to_string(x) + ", " +
                                      ce_to_string(y) + ")";
                            break;
                        }
                        continue;
                    }
                    least_c = mag_max(least_c, fxy * prod.inverse());
                }
            if (witness.empty()) {
                if (least_c.is_zero()) least_c = Magnitude::one(); // all products vanished
                check.bound = least_c;
            }
            break;
        }
        case Axiom::isometry: {
            if (isometry_auts.empty())
                throw InputError("ISOMETRY profile needs at least one validated automorphism");
            for (const auto& sigma : isometry_auts) {
                if (!witness.empty()) break;
                for (const auto& s : samples) {
                    if (!std::holds_alternative<FieldElement>(s))
                        throw InputError("ISOMETRY needs extension-element samples");
                    const auto& x = std::get<FieldElement>(s);
                    const Magnitude lhs = f.eval(sigma.apply(x));
                    const Magnitude rhs = f.eval(x);
                    if (lhs != rhs) {
                        witness = "isometry fails for sigma: alpha -> " +
                                  sigma.gen_image().to_string() + " at x = " + x.to_string() +
                                  ": f(sigma(x)) = " + lhs.to_string() + " != f(x) = " +
                                  rhs.to_string();
                        break;
                    }
                }
            }
            break;
        }
        }
        check.pass = witness.empty();
        check.witness = std::move(witness);
        report.push_back(std::move(check));
    }
    return report;
}

// SeminormSpec overload of the Galois sup-norm.
inline Magnitude alg_norm_of_galois(const SeminormSpec& norm, const std::vector<Automorphism>& auts,
                                    const FieldElement& x) {
    return alg_norm_of_galois([&](const FieldElement& e) { return norm.eval(e); }, auts, x);
}

} // namespace ultrametric
