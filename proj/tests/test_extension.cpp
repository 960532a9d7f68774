#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include <ultrametric/extension.hpp>

#include "support.hpp"

using namespace ultrametric;

namespace {

Magnitude pp(long p, const Rational& e) { return Magnitude::prime_power(p, e); }

ExtensionField::Ptr sqrt5() {
    return ExtensionField::create(5, Poly({-5, 0, 1}), IrredCertificate::eisenstein());
}

ExtensionField::Ptr cbrt5() {
    return ExtensionField::create(5, Poly({-5, 0, 0, 1}), IrredCertificate::eisenstein());
}

ExtensionField::Ptr cyclotomic5() {
    return ExtensionField::create(5, Poly({1, 1, 1, 1, 1}),
                                  IrredCertificate::eisenstein_shift(Rational(1)));
}

// Q(gamma), gamma^4 - 14 gamma^2 + 9 = 0; asserted (mixed ramification)
ExtensionField::Ptr quartic_gamma() {
    return ExtensionField::create(5, Poly({9, 0, -14, 0, 1}),
                                  IrredCertificate::asserted("irreducible over Q_5 by hand"));
}

FieldElement random_element(std::mt19937_64& rng, const ExtensionField::Ptr& ext, long bound) {
    std::vector<Rational> c;
    for (long i = 0; i < ext->degree(); ++i) c.push_back(testsupport::random_rational(rng, bound));
    return ext->element(std::move(c));
}

} // namespace

TEST_CASE("extension construction and certificates") {
    CHECK(sqrt5()->degree() == 2);
    CHECK_THROWS_AS(ExtensionField::create(5, Poly({-6, 0, 1}), IrredCertificate::eisenstein()),
                    CertificateError);
    CHECK_THROWS_AS(ExtensionField::create(5, Poly({5, -7, 1}), IrredCertificate::mod_p()),
                    CertificateError);
    CHECK_NOTHROW(ExtensionField::create(5, Poly({-2, 0, 1}), IrredCertificate::mod_p()));
    CHECK_THROWS_AS(ExtensionField::create(5, Poly({1, 0, 2}), IrredCertificate::eisenstein()),
                    DomainError);
    CHECK_THROWS_AS(ExtensionField::create(4, Poly({-5, 0, 1}), IrredCertificate::eisenstein()),
                    InputError);
    // rational coefficients allowed under ASSERTED
    const auto inv5 = ExtensionField::create(
        5, Poly(std::vector<Rational>{Rational(-1, 5), Rational(0), Rational(1)}),
        IrredCertificate::asserted("X^2 - 1/5 has no root in Q_5"));
    CHECK(inv5->degree() == 2);
}

TEST_CASE("structure constants are symmetric") {
    const auto ext = cyclotomic5();
    const auto n = static_cast<std::size_t>(ext->degree());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                CHECK(ext->struct_const(i, j, k) == ext->struct_const(j, i, k));
}

TEST_CASE("element arithmetic in Q(sqrt 5)") {
    const auto ext = sqrt5();
    const FieldElement alpha = ext->generator();
    const FieldElement one = ext->one();
    CHECK((one + alpha) * (one - alpha) == ext->embed(Rational(-4)));
    CHECK(alpha.inverse() == ext->element({Rational(0), Rational(1, 5)}));
    CHECK(alpha * alpha.inverse() == one);
    CHECK(alpha.pow(2) == ext->embed(Rational(5)));
    CHECK(alpha.pow(-2) == ext->embed(Rational(1, 5)));
    CHECK_THROWS_AS(ext->zero().inverse(), DomainError);

    const auto other = cbrt5();
    CHECK_THROWS_AS(alpha * other->generator(), InputError);
    CHECK_THROWS_AS(ext->element({Rational(1)}), InputError); // wrong coordinate count
}

TEST_CASE("characteristic polynomials") {
    const auto ext = sqrt5();
    const FieldElement alpha = ext->generator();
    CHECK(char_poly(alpha) == Poly({-5, 0, 1}));
    CHECK(char_poly(ext->one() + alpha) == Poly({-4, -2, 1}));
    CHECK(char_poly(ext->embed(Rational(2))) == Poly({4, -4, 1})); // (X-2)^2
    CHECK(char_poly(ext->zero()) == Poly({0, 0, 1}));

    // degree-1 extension: char(x) = X - x
    const auto line = ExtensionField::create(5, Poly({-5, 1}), IrredCertificate::eisenstein());
    CHECK(char_poly(line->embed(Rational(7, 3))) == Poly(std::vector<Rational>{Rational(-7, 3), Rational(1)}));
}

TEST_CASE("minimal polynomials") {
    const auto ext = sqrt5();
    CHECK(min_poly(ext->embed(Rational(2))) == Poly({-2, 1}));
    CHECK(min_poly(ext->one() + ext->generator()) == Poly({-4, -2, 1}));
    CHECK(min_poly(ext->zero()) == Poly({0, 1}));

    // (17 gamma - gamma^3)/6 in Q(gamma) is a square root of 5
    const auto q = quartic_gamma();
    const FieldElement x =
        q->element({Rational(0), Rational(17, 6), Rational(0), Rational(-1, 6)});
    CHECK(x * x == q->embed(Rational(5)));
    CHECK(char_poly(x) == Poly({-5, 0, 1}) * Poly({-5, 0, 1}));
    CHECK(min_poly(x) == Poly({-5, 0, 1}));
}

TEST_CASE("minimal polynomial annihilates and divides") {
    std::mt19937_64 rng(71);
    for (const auto& ext : {sqrt5(), cbrt5(), cyclotomic5()}) {
        for (int i = 0; i < 10; ++i) {
            const FieldElement x = random_element(rng, ext, 30);
            const Poly mp = min_poly(x);
            // evaluate mp at x inside the extension
            FieldElement acc = ext->zero();
            for (auto it = mp.coeffs().rbegin(); it != mp.coeffs().rend(); ++it)
                acc = acc * x + *it * ext->one();
            CHECK(acc.is_zero());
            CHECK(divmod(char_poly(x), mp).second.is_zero());
        }
    }
}

TEST_CASE("spectral norm on elements") {
    const auto ext = sqrt5();
    const FieldElement alpha = ext->generator();
    CHECK(spectral_norm(ext->embed(Rational(10))) == pp(5, Rational(-1)));
    CHECK(spectral_norm(alpha) == pp(5, Rational(-1, 2)));
    CHECK(spectral_norm(ext->one() + alpha).is_one());
    CHECK(spectral_norm(ext->zero()).is_zero());
}

TEST_CASE("constant coefficient oracle") {
    const auto ext = sqrt5();
    const FieldElement alpha = ext->generator();
    CHECK(norm_const_coeff_oracle(alpha) == pp(5, Rational(-1, 2)));
    CHECK(norm_const_coeff_oracle(ext->one() + alpha).is_one());
    CHECK(norm_const_coeff_oracle(ext->embed(Rational(10))) == pp(5, Rational(-1)));
    CHECK_THROWS_AS(norm_const_coeff_oracle(ext->zero()), DomainError);
}

TEST_CASE("basis norm and its bounding constant") {
    const auto ext = sqrt5();
    CHECK(basis_norm(ext->element({Rational(3), Rational(5)})).is_one());
    CHECK(basis_norm(ext->zero()).is_zero());
    CHECK(basis_norm(ext->element({Rational(1, 5), Rational(1)})) == pp(5, Rational(1)));
    CHECK(basis_norm_bound(*ext).is_one());

    const auto inv5 = ExtensionField::create(
        5, Poly(std::vector<Rational>{Rational(-1, 5), Rational(0), Rational(1)}),
        IrredCertificate::asserted("no root in Q_5"));
    CHECK(basis_norm_bound(*inv5) == pp(5, Rational(1)));

    const auto line = ExtensionField::create(5, Poly({-5, 1}), IrredCertificate::eisenstein());
    CHECK(basis_norm_bound(*line).is_one());
}

TEST_CASE("automorphisms") {
    const auto ext = sqrt5();
    const FieldElement alpha = ext->generator();
    const Automorphism conj(ext->element({Rational(0), Rational(-1)}));
    CHECK(conj.apply(ext->element({Rational(3), Rational(5)})) ==
          ext->element({Rational(3), Rational(-5)}));
    CHECK_THROWS_AS(Automorphism(ext->one() + alpha), InputError);
    const Automorphism id = Automorphism::identity(ext);
    CHECK(id.apply(ext->element({Rational(3), Rational(5)})) ==
          ext->element({Rational(3), Rational(5)}));
    CHECK_THROWS_AS(conj.apply(cbrt5()->generator()), InputError);
}

TEST_CASE("galois sup-norm over explicit automorphism lists") {
    const auto ext = sqrt5();
    const FieldElement alpha = ext->generator();
    const std::vector<Automorphism> auts = {Automorphism::identity(ext),
                                            Automorphism(ext->element({Rational(0), Rational(-1)}))};
    CHECK(alg_norm_of_galois([](const FieldElement& e) { return spectral_norm(e); }, auts, alpha) ==
          pp(5, Rational(-1, 2)));
    CHECK(alg_norm_of_galois([](const FieldElement& e) { return basis_norm(e); }, auts,
                             ext->element({Rational(3), Rational(5)}))
              .is_one());
    CHECK_THROWS_AS(
        alg_norm_of_galois([](const FieldElement& e) { return spectral_norm(e); }, {}, alpha),
        InputError);
}

TEST_CASE("spectral norm extends the p-adic norm") {
    std::mt19937_64 rng(101);
    for (const auto& ext : {sqrt5(), cbrt5(), cyclotomic5()}) {
        for (int i = 0; i < 25; ++i) {
            const Rational q = testsupport::random_rational(rng);
            CHECK(spectral_norm(ext->embed(q)) == padic_magnitude(q, ext->prime()));
        }
    }
}

TEST_CASE("spectral norm is multiplicative and nonarchimedean") {
    std::mt19937_64 rng(103);
    for (const auto& ext : {sqrt5(), cbrt5(), cyclotomic5()}) {
        for (int i = 0; i < 12; ++i) {
            const FieldElement x = random_element(rng, ext, 100);
            const FieldElement y = random_element(rng, ext, 100);
            CHECK(spectral_norm(x * y) == spectral_norm(x) * spectral_norm(y));
            CHECK(mag_compare(spectral_norm(x + y),
                              mag_max(spectral_norm(x), spectral_norm(y))) != Ordering::greater);
        }
    }
}

TEST_CASE("spectral norm is power multiplicative") {
    std::mt19937_64 rng(107);
    for (const auto& ext : {sqrt5(), cyclotomic5()}) {
        for (int i = 0; i < 8; ++i) {
            const FieldElement x = random_element(rng, ext, 50);
            const Magnitude base = spectral_norm(x);
            for (long n : {2L, 3L, 5L}) {
                const Magnitude lhs = spectral_norm(x.pow(n));
                const Magnitude rhs = base.is_zero() ? Magnitude::zero() : base.pow(Rational(n));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("oracle agreement on random nonzero elements") {
    std::mt19937_64 rng(109);
    for (const auto& ext : {sqrt5(), cbrt5(), cyclotomic5()}) {
        for (int i = 0; i < 12; ++i) {
            FieldElement x = random_element(rng, ext, 100);
            if (x.is_zero()) continue;
            CHECK(norm_const_coeff_oracle(x) == spectral_norm(x));
        }
    }
}

TEST_CASE("automorphisms are isometries for the spectral norm") {
    std::mt19937_64 rng(113);
    const auto ext = sqrt5();
    const Automorphism conj(ext->element({Rational(0), Rational(-1)}));
    for (int i = 0; i < 25; ++i) {
        const FieldElement x = random_element(rng, ext, 1000);
        CHECK(spectral_norm(conj.apply(x)) == spectral_norm(x));
    }
}

TEST_CASE("basis norm bound holds on random pairs") {
    std::mt19937_64 rng(127);
    const auto inv5 = ExtensionField::create(
        5, Poly(std::vector<Rational>{Rational(-1, 5), Rational(0), Rational(1)}),
        IrredCertificate::asserted("no root in Q_5"));
    for (const auto& ext : {sqrt5(), inv5}) {
        const Magnitude c = basis_norm_bound(*ext);
        for (int i = 0; i < 40; ++i) {
            const FieldElement x = random_element(rng, ext, 1000);
            const FieldElement y = random_element(rng, ext, 1000);
            CHECK(mag_compare(basis_norm(x * y), c * basis_norm(x) * basis_norm(y)) !=
                  Ordering::greater);
        }
    }
}

TEST_CASE("embedded square roots of 5 share one spectral norm") {
    const auto ext = sqrt5();
    const auto q = quartic_gamma();
    const FieldElement direct = ext->generator();
    const FieldElement indirect =
        q->element({Rational(0), Rational(17, 6), Rational(0), Rational(-1, 6)});
    CHECK(spectral_norm(direct) == pp(5, Rational(-1, 2)));
    CHECK(spectral_norm(indirect) == pp(5, Rational(-1, 2)));
}
