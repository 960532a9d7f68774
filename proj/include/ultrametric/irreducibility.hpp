#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "magnitude.hpp"
#include "poly.hpp"

namespace ultrametric {

// Certificates that a monic modulus stays irreducible over the p-adic field.
// Irreducibility is certified, never decided: Eisenstein (possibly after a
// variable shift), irreducibility mod p, or an explicit user assertion that
// is recorded verbatim.
struct IrredCertificate {
    enum class Kind { eisenstein, eisenstein_shift, mod_p, asserted };

    Kind kind = Kind::eisenstein;
    Rational shift;   // eisenstein_shift only
    std::string note; // asserted only

    static IrredCertificate eisenstein() { return {}; }

    static IrredCertificate eisenstein_shift(Rational s) {
        IrredCertificate c;
        c.kind = Kind::eisenstein_shift;
        c.shift = std::move(s);
        return c;
    }

    static IrredCertificate mod_p() {
        IrredCertificate c;
        c.kind = Kind::mod_p;
        return c;
    }

    static IrredCertificate asserted(std::string note) {
        IrredCertificate c;
        c.kind = Kind::asserted;
        c.note = std::move(note);
        return c;
    }

    std::string kind_name() const {
        switch (kind) {
        case Kind::eisenstein: return "eisenstein";
        case Kind::eisenstein_shift: return "eisenstein_shift";
        case Kind::mod_p: return "mod_p";
        case Kind::asserted: return "asserted";
        }
        return "?";
    }
};

// Eisenstein at p (after an optional variable shift): v_p(a_i) >= 1 for all
// i < m and v_p(a_0) = 1. Valid over Q_p for rational coefficients too; only
// the prime p matters.
inline bool eisenstein_check(const Poly& p, std::int64_t prime,
                             const std::optional<Rational>& shift = std::nullopt) {
    require_prime(prime);
    if (p.is_zero() || !p.is_monic()) throw DomainError("eisenstein check requires a monic polynomial");
    if (p.degree() < 1) throw DomainError("eisenstein check requires degree >= 1");
    const Poly q = shift ? p.shift_variable(*shift) : p;
    const ValExp one{Rational(1)};
    for (long i = 0; i < q.degree(); ++i) {
        const ValExp v = vp(q.coeff(static_cast<std::size_t>(i)), prime);
        if (i == 0) {
            if (v != one) return false;
        } else if (v < one) {
            return false;
        }
    }
    return true;
}

namespace detail {

// F_p arithmetic on small primes; coefficients in [0, p).
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw DomainError("element not invertible mod p");
    return (t % p + p) % p;
}

// remainder of a by b over F_p, b monic-normalized by the caller
inline std::vector<std::int64_t> fp_mod(std::vector<std::int64_t> a,
                                        const std::vector<std::int64_t>& b, std::int64_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::int64_t lead = a.back();
        if (lead != 0) {
            const std::size_t off = a.size() - 1 - db;
            for (std::size_t j = 0; j <= db; ++j) a[off + j] = ((a[off + j] - lead * b[j]) % p + p) % p;
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

} // namespace detail

// Brute-force irreducibility over F_p: reduce mod p, then trial-divide by
// every monic polynomial of degree 1..deg/2. The envelope (deg <= 8,
// p <= 997) keeps the enumeration finite; it is exhaustive by design.
inline bool irreducible_mod_p(const Poly& p, std::int64_t prime) {
    require_prime(prime);
    if (p.is_zero() || !p.is_monic()) throw DomainError("mod-p check requires a monic polynomial");
    if (p.degree() > 8 || prime > 997)
        throw DomainError("mod-p brute force limited to deg <= 8 and p <= 997");

    const long deg = p.degree();
    std::vector<std::int64_t> f(static_cast<std::size_t>(deg) + 1);
    for (long i = 0; i <= deg; ++i) {
        const Rational c = p.coeff(static_cast<std::size_t>(i));
        const ValExp v = vp(c, prime);
        if (!v.is_infinite() && v.finite_value().sign() < 0)
            throw DomainError("mod-p check requires p-integral coefficients, got " + c.to_string());
        if (c.is_zero()) {
            f[static_cast<std::size_t>(i)] = 0;
            continue;
        }
        const std::int64_t n = (c.num() % BigInt(prime)).to_long();
        const std::int64_t d = (c.den() % BigInt(prime)).to_long();
        f[static_cast<std::size_t>(i)] =
            ((n % prime + prime) % prime) * detail::mod_inverse((d % prime + prime) % prime, prime) % prime;
    }

    if (deg <= 1) return true;

    // enumerate monic divisors degree by degree
    for (long d = 1; d <= deg / 2; ++d) {
        std::vector<std::int64_t> div(static_cast<std::size_t>(d) + 1, 0);
        div.back() = 1;
        while (true) {
            if (detail::fp_mod(f, div, prime).empty()) return false;
            // next candidate: increment the d low coefficients in base p
            long i = 0;
            for (; i < d; ++i) {
                if (++div[static_cast<std::size_t>(i)] < prime) break;
                div[static_cast<std::size_t>(i)] = 0;
            }
            if (i == d) break;
        }
    }
    return true;
}

// Validates a certificate against (f, p); throws CertificateError naming the
// failing condition. ASSERTED always validates (and is surfaced in outputs).
inline void validate_certificate(const Poly& f, std::int64_t prime, const IrredCertificate& cert) {
    switch (cert.kind) {
    case IrredCertificate::Kind::eisenstein:
        if (!eisenstein_check(f, prime))
            throw CertificateError("eisenstein certificate rejected: coefficients of " + f.to_string() +
                                   " do not satisfy v_" + std::to_string(prime) +
                                   "(a_i) >= 1 for i < deg with v(a_0) = 1");
        return;
    case IrredCertificate::Kind::eisenstein_shift:
        if (!eisenstein_check(f, prime, cert.shift))
            throw CertificateError("shifted eisenstein certificate rejected: f(X + " +
                                   cert.shift.to_string() + ") is not eisenstein at " +
                                   std::to_string(prime));
        return;
    case IrredCertificate::Kind::mod_p:
        if (!irreducible_mod_p(f, prime))
            throw CertificateError("mod-p certificate rejected: " + f.to_string() +
                                   " is reducible modulo " + std::to_string(prime));
        return;
    case IrredCertificate::Kind::asserted:
        return;
    }
}

} // namespace ultrametric
