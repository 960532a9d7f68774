#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "irreducibility.hpp"
#include "magnitude.hpp"
#include "poly.hpp"

namespace ultrametric {

class FieldElement;
class ExtensionField;

// Q[X]/(f) viewed inside the algebraic closure of Q_p. The certificate is
// validated at construction (so the quotient stays a field over Q_p), and
// the structure constants e_i * e_j = sum_k c_ijk e_k of the power basis
// e_i = alpha^i are precomputed. Immutable afterwards.
class ExtensionField : public std::enable_shared_from_this<ExtensionField> {
public:
    using Ptr = std::shared_ptr<const ExtensionField>;

    static Ptr create(std::int64_t p, Poly modulus, IrredCertificate cert) {
        require_prime(p);
        if (modulus.is_zero() || !modulus.is_monic() || modulus.degree() < 1)
            throw DomainError("extension modulus must be monic of degree >= 1");
        validate_certificate(modulus, p, cert);
        return Ptr(new ExtensionField(p, std::move(modulus), std::move(cert)));
    }

    std::int64_t prime() const { return p_; }
    const Poly& modulus() const { return modulus_; }
    const IrredCertificate& certificate() const { return cert_; }
    long degree() const { return modulus_.degree(); }

    // c_ijk with 0 <= i,j,k < degree
    const Rational& struct_const(std::size_t i, std::size_t j, std::size_t k) const {
        return power_table_[i + j][k];
    }

    // coordinates of alpha^m reduced mod f, m <= 2(n-1)
    const std::vector<Rational>& power_coords(std::size_t m) const { return power_table_[m]; }

    FieldElement element(std::vector<Rational> coords) const;
    FieldElement embed(const Rational& q) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement generator() const;

private:
    ExtensionField(std::int64_t p, Poly modulus, IrredCertificate cert)
        : p_(p), modulus_(std::move(modulus)), cert_(std::move(cert)) {
        const auto n = static_cast<std::size_t>(modulus_.degree());
        power_table_.reserve(2 * n - 1);
        Poly pw = Poly::constant(Rational(1));
        for (std::size_t m = 0; m + 1 < 2 * n; ++m) {
            std::vector<Rational> coords(n, Rational(0));
            for (std::size_t i = 0; i < pw.coeffs().size(); ++i) coords[i] = pw.coeffs()[i];
            power_table_.push_back(std::move(coords));
            pw = divmod(pw * Poly::monomial(1), modulus_).second;
        }
    }

    std::int64_t p_;
    Poly modulus_;
    IrredCertificate cert_;
    std::vector<std::vector<Rational>> power_table_;
};

inline bool same_field(const ExtensionField& a, const ExtensionField& b) {
    return a.prime() == b.prime() && a.modulus() == b.modulus();
}

// Element of an extension, given by its coordinates in the power basis
// {1, alpha, ..., alpha^(n-1)}. Immutable value type.
class FieldElement {
public:
    FieldElement(ExtensionField::Ptr parent, std::vector<Rational> coords)
        : parent_(std::move(parent)), coords_(std::move(coords)) {
        if (static_cast<long>(coords_.size()) != parent_->degree())
            throw InputError("element needs " + std::to_string(parent_->degree()) +
                             " coordinates, got " + std::to_string(coords_.size()));
    }

    const ExtensionField::Ptr& parent() const { return parent_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    // polynomial representative of minimal degree
    Poly representative() const { return Poly(coords_); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return same_field(*a.parent_, *b.parent_) && a.coords_ == b.coords_;
    }

    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check_same_parent(b);
        std::vector<Rational> c(a.coords_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
        return FieldElement(a.parent_, std::move(c));
    }

    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check_same_parent(b);
        std::vector<Rational> c(a.coords_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] - b.coords_[i];
        return FieldElement(a.parent_, std::move(c));
    }

    FieldElement operator-() const {
        std::vector<Rational> c(coords_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
        return FieldElement(parent_, std::move(c));
    }

    // product through the precomputed structure constants
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check_same_parent(b);
        const auto n = a.coords_.size();
        std::vector<Rational> c(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coords_[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b.coords_[j].is_zero()) continue;
                const Rational prod = a.coords_[i] * b.coords_[j];
                const auto& pw = a.parent_->power_coords(i + j);
                for (std::size_t k = 0; k < n; ++k)
                    if (!pw[k].is_zero()) c[k] += prod * pw[k];
            }
        }
        return FieldElement(a.parent_, std::move(c));
    }

    friend FieldElement operator*(const Rational& s, const FieldElement& a) {
        std::vector<Rational> c(a.coords_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.coords_[i];
        return FieldElement(a.parent_, std::move(c));
    }

    // extended Euclid against the modulus; with a valid certificate the gcd
    // is constant for every nonzero element
    FieldElement inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        Poly r0 = parent_->modulus(), r1 = representative();
        Poly t0 = Poly::zero(), t1 = Poly::constant(Rational(1));
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            r0 = std::exchange(r1, r);
            t0 = std::exchange(t1, t0 - q * t1);
        }
        if (r0.degree() != 0)
            throw DomainError("element is a zero divisor: modulus is reducible over Q (gcd " +
                              r0.to_string() + ")");
        const Poly inv_rep = divmod(r0.leading().inverse() * t0, parent_->modulus()).second;
        std::vector<Rational> c(coords_.size(), Rational(0));
        for (std::size_t i = 0; i < inv_rep.coeffs().size(); ++i) c[i] = inv_rep.coeffs()[i];
        return FieldElement(parent_, std::move(c));
    }

    FieldElement pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        FieldElement acc = parent_->one();
        FieldElement base = *this;
        auto k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) out += ",";
            out += coords_[i].to_string();
        }
        return out + ")";
    }

private:
    void check_same_parent(const FieldElement& other) const {
        if (!same_field(*parent_, *other.parent_))
            throw InputError("elements of different extensions");
    }

    ExtensionField::Ptr parent_;
    std::vector<Rational> coords_;
};

inline FieldElement ExtensionField::element(std::vector<Rational> coords) const {
    return FieldElement(shared_from_this(), std::move(coords));
}

inline FieldElement ExtensionField::embed(const Rational& q) const {
    std::vector<Rational> c(static_cast<std::size_t>(degree()), Rational(0));
    c[0] = q;
    return FieldElement(shared_from_this(), std::move(c));
}

inline FieldElement ExtensionField::zero() const { return embed(Rational(0)); }
inline FieldElement ExtensionField::one() const { return embed(Rational(1)); }

inline FieldElement ExtensionField::generator() const {
    std::vector<Rational> c(static_cast<std::size_t>(degree()), Rational(0));
    if (degree() == 1) {
        // alpha = the root of the linear modulus, i.e. -a_0
        c[0] = -modulus().coeff(0);
    } else {
        c[1] = Rational(1);
    }
    return FieldElement(shared_from_this(), std::move(c));
}

namespace detail {

// Fraction-free (Bareiss) determinant of an integer matrix.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return BigInt(1);
    int sign = 1;
    BigInt prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return BigInt(0);
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = BigInt(0);
        }
        prev = m[k][k];
    }
    BigInt det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// Lagrange interpolation through (t_i, v_i), exact over Q.
inline Poly lagrange_interpolate(const std::vector<long>& ts, const std::vector<Rational>& vs) {
    Poly acc = Poly::zero();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Poly basis = Poly::constant(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < ts.size(); ++j) {
            if (j == i) continue;
            basis = basis * Poly(std::vector<Rational>{Rational(-ts[j]), Rational(1)});
            denom *= Rational(ts[i] - ts[j]);
        }
        acc = acc + (vs[i] / denom) * basis;
    }
    return acc;
}

} // namespace detail

// Characteristic polynomial of the multiplication-by-x matrix over Q,
// computed exactly: denominators cleared once, det(tI - B) sampled at n+1
// integer points with fraction-free elimination, then interpolated.
inline Poly char_poly(const FieldElement& x) {
    const auto n = static_cast<std::size_t>(x.parent()->degree());

    // columns: x * e_j in the power basis
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> ej(n, Rational(0));
        ej[j] = Rational(1);
        const FieldElement col = x * FieldElement(x.parent(), std::move(ej));
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coords()[i];
    }

    BigInt den(1);
    for (const auto& row : m)
        for (const auto& v : row) den = BigInt::lcm(den, v.den());

    // integer matrix B = den * M
    std::vector<std::vector<BigInt>> b(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational scaled = Rational(den) * m[i][j];
            b[i][j] = scaled.num();
        }

    // chi_B by interpolation at t = 0..n
    std::vector<long> ts;
    std::vector<Rational> vs;
    for (long t = 0; t <= static_cast<long>(n); ++t) {
        std::vector<std::vector<BigInt>> mt(n, std::vector<BigInt>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                mt[i][j] = i == j ? BigInt(t) - b[i][j] : -b[i][j];
        ts.push_back(t);
        vs.emplace_back(detail::bareiss_determinant(std::move(mt)));
    }
    const Poly chi_b = detail::lagrange_interpolate(ts, vs);

    // chi_M(X) = den^{-n} chi_B(den X): coefficient k picks up den^{k-n}
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational scale = k >= n ? Rational(1)
                                      : Rational(BigInt(1), den.pow(static_cast<unsigned long>(n - k)));
        coeffs[k] = chi_b.coeff(k) * scale;
    }
    Poly chi(std::move(coeffs));
    if (chi.degree() != static_cast<long>(n) || !chi.is_monic())
        throw Error("internal", "characteristic polynomial is not monic of full degree");
    return chi;
}

// Minimal polynomial over Q_p (with rational coefficients): the squarefree
// part of the characteristic polynomial. With a valid certificate the
// quotient tensored up to Q_p is a field, so char = minpoly^k and the
// gcd-based squarefree part recovers exactly the minimal polynomial.
inline Poly min_poly(const FieldElement& x) { return squarefree_part(char_poly(x)); }

// Spectral norm: spectral value of the minimal polynomial at the parent's p.
inline Magnitude spectral_norm(const FieldElement& x) {
    return spectral_value(min_poly(x), x.parent()->prime());
}

// Independent route: all conjugates of x share one magnitude, so
// |x| = |a_0|^{1/m} from the constant coefficient of the minimal polynomial.
inline Magnitude norm_const_coeff_oracle(const FieldElement& x) {
    if (x.is_zero()) throw DomainError("constant-coefficient oracle needs x != 0");
    const Poly mp = min_poly(x);
    return mag_pow(padic_magnitude(mp.coeff(0), x.parent()->prime()), Rational(1, mp.degree()));
}

// max_i |a_i|_p over the coordinates in the power basis
// {1, alpha, ..., alpha^(n-1)}.
inline Magnitude basis_norm(const FieldElement& x) {
    Magnitude best = Magnitude::zero();
    for (const auto& c : x.coords()) best = mag_max(best, padic_magnitude(c, x.parent()->prime()));
    return best;
}

// c = max(1, max_ijk |c_ijk|_p); satisfies ||xy|| <= c ||x|| ||y||.
inline Magnitude basis_norm_bound(const ExtensionField& ext) {
    Magnitude best = Magnitude::one();
    const auto n = static_cast<std::size_t>(ext.degree());
    for (std::size_t s = 0; s + 1 < 2 * n; ++s)
        for (std::size_t k = 0; k < n; ++k)
            best = mag_max(best, padic_magnitude(ext.power_coords(s)[k], ext.prime()));
    return best;
}

// K-algebra automorphism of the extension, given by the image of the
// generator; the image must be a root of the modulus.
class Automorphism {
public:
    explicit Automorphism(FieldElement gen_image) : gen_image_(std::move(gen_image)) {
        // f(gen_image) = 0, evaluated by Horner inside the extension
        const Poly& f = gen_image_.parent()->modulus();
        FieldElement acc = gen_image_.parent()->zero();
        for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
            acc = acc * gen_image_ + *it * gen_image_.parent()->one();
        if (!acc.is_zero())
            throw InputError("automorphism image " + gen_image_.to_string() +
                             " is not a root of the modulus (f(image) = " + acc.to_string() + ")");
    }

    static Automorphism identity(const ExtensionField::Ptr& ext) {
        return Automorphism(ext->generator());
    }

    const FieldElement& gen_image() const { return gen_image_; }
    const ExtensionField::Ptr& parent() const { return gen_image_.parent(); }

    FieldElement apply(const FieldElement& x) const {
        if (!same_field(*x.parent(), *parent())) throw InputError("automorphism of a different extension");
        FieldElement acc = parent()->zero();
        for (auto it = x.coords().rbegin(); it != x.coords().rend(); ++it)
            acc = acc * gen_image_ + *it * parent()->one();
        return acc;
    }

private:
    FieldElement gen_image_;
};

// max over the listed automorphisms of norm(sigma(x)); norm is any callable
// FieldElement -> Magnitude.
template <typename NormFn>
    requires std::invocable<NormFn&, const FieldElement&>
Magnitude alg_norm_of_galois(NormFn&& norm, const std::vector<Automorphism>& auts,
                             const FieldElement& x) {
    if (auts.empty()) throw InputError("automorphism list must be nonempty");
    Magnitude best = Magnitude::zero();
    for (const auto& sigma : auts) best = mag_max(best, norm(sigma.apply(x)));
    return best;
}

} // namespace ultrametric
