// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit status is the number of
// failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <ultrametric/cli.hpp>
#include <ultrametric/extension.hpp>
#include <ultrametric/json_io.hpp>
#include <ultrametric/magnitude.hpp>
#include <ultrametric/newton.hpp>
#include <ultrametric/poly.hpp>
#include <ultrametric/seminorm.hpp>

#include "support.hpp"

using namespace ultrametric;

namespace {

struct Criterion {
    int number;
    std::string name;
    std::function<bool(std::string&)> body;
};

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

std::vector<ExtensionField::Ptr> certified_extensions() {
    return {sqrt5(), cbrt5(), cyclotomic5()};
}

FieldElement random_element(std::mt19937_64& rng, const ExtensionField::Ptr& ext, long bound) {
    std::vector<Rational> c;
    for (long i = 0; i < ext->degree(); ++i) c.push_back(testsupport::random_rational(rng, bound));
    return ext->element(std::move(c));
}

// 1. spectral_norm(embed(x)) = |x|_p for 200 random rationals, p in {2,3,5,7},
//    in under 5 seconds.
bool criterion_extends(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1001);
    const std::vector<std::int64_t> primes = {2, 3, 5, 7};
    std::vector<ExtensionField::Ptr> exts;
    for (const auto p : primes)
        exts.push_back(ExtensionField::create(
            p, Poly(std::vector<Rational>{Rational(-static_cast<long>(p)), Rational(0), Rational(1)}),
            IrredCertificate::eisenstein()));
    for (int i = 0; i < 200; ++i) {
        const Rational x = testsupport::random_rational(rng, 1'000'000);
        for (std::size_t k = 0; k < primes.size(); ++k) {
            if (spectral_norm(exts[k]->embed(x)) != padic_magnitude(x, primes[k])) {
                detail = "mismatch at x = " + x.to_string() + ", p = " + std::to_string(primes[k]);
                return false;
            }
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 5.0) {
        detail = "runtime " + std::to_string(secs) + "s exceeds 5s";
        return false;
    }
    return true;
}

// 2. spectral_norm(xy) = spectral_norm(x) * spectral_norm(y), 100 random pairs
//    in each certified extension, in under 30 seconds.
bool criterion_multiplicative(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1002);
    for (const auto& ext : certified_extensions()) {
        for (int i = 0; i < 100; ++i) {
            const FieldElement x = random_element(rng, ext, 1'000'000);
            const FieldElement y = random_element(rng, ext, 1'000'000);
            if (spectral_norm(x * y) != spectral_norm(x) * spectral_norm(y)) {
                detail = "mismatch in " + ext->modulus().to_string() + " at x = " + x.to_string() +
                         ", y = " + y.to_string();
                return false;
            }
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 30.0) {
        detail = "runtime " + std::to_string(secs) + "s exceeds 30s";
        return false;
    }
    return true;
}

// 3. strong triangle inequality and power-multiplicativity (n in {2,3,5}).
bool criterion_nonarch_powmul(std::string& detail) {
    std::mt19937_64 rng(1003);
    for (const auto& ext : certified_extensions()) {
        for (int i = 0; i < 100; ++i) {
            const FieldElement x = random_element(rng, ext, 1'000'000);
            const FieldElement y = random_element(rng, ext, 1'000'000);
            if (mag_compare(spectral_norm(x + y),
                            mag_max(spectral_norm(x), spectral_norm(y))) == Ordering::greater) {
                detail = "triangle inequality fails at x = " + x.to_string() + ", y = " + y.to_string();
                return false;
            }
        }
        for (int i = 0; i < 12; ++i) {
            const FieldElement x = random_element(rng, ext, 1000);
            const Magnitude base = spectral_norm(x);
            for (long n : {2L, 3L, 5L}) {
                const Magnitude expect = base.is_zero() ? Magnitude::zero() : base.pow(Rational(n));
                if (spectral_norm(x.pow(n)) != expect) {
                    detail = "power-multiplicativity fails at x = " + x.to_string() +
                             ", n = " + std::to_string(n);
                    return false;
                }
            }
        }
    }
    return true;
}

// 4. Newton-polygon oracle on 100 random monic split products of degree <= 6.
bool criterion_newton_oracle(std::string& detail) {
    std::mt19937_64 rng(1004);
    const std::vector<std::int64_t> primes = {2, 3, 5, 7};
    for (int i = 0; i < 100; ++i) {
        const std::int64_t prime = primes[static_cast<std::size_t>(i % 4)];
        const long deg = 1 + i % 6;
        Poly p({1});
        Magnitude largest = Magnitude::zero();
        for (long k = 0; k < deg; ++k) {
            const Rational r = testsupport::random_rational(rng, 400);
            p = p * Poly::linear_root(r);
            largest = mag_max(largest, padic_magnitude(r, prime));
        }
        Magnitude polygon_max = Magnitude::zero();
        for (const auto& m : root_magnitudes(p, prime)) polygon_max = mag_max(polygon_max, m);
        if (spectral_value(p, prime) != largest || polygon_max != largest) {
            detail = "three-way equality fails for " + p.to_string() + " at p = " +
                     std::to_string(prime);
            return false;
        }
    }
    return true;
}

// 5. norm_const_coeff_oracle = spectral_norm on 100 random nonzero elements.
bool criterion_const_coeff_oracle(std::string& detail) {
    std::mt19937_64 rng(1005);
    const auto exts = certified_extensions();
    int done = 0;
    while (done < 100) {
        const auto& ext = exts[static_cast<std::size_t>(done % 3)];
        const FieldElement x = random_element(rng, ext, 1'000'000);
        if (x.is_zero()) continue;
        if (norm_const_coeff_oracle(x) != spectral_norm(x)) {
            detail = "oracle mismatch at x = " + x.to_string() + " in " +
                     ext->modulus().to_string();
            return false;
        }
        ++done;
    }
    return true;
}

// 6. sqrt(5) in Q(sqrt 5) and (17g - g^3)/6 in Q(g), g^4 - 14g^2 + 9, both
//    have spectral norm exactly 5^{-1/2}.
bool criterion_embedding_invariance(std::string& detail) {
    const Magnitude expect = pp(5, Rational(-1, 2));
    if (spectral_norm(sqrt5()->generator()) != expect) {
        detail = "direct square root fails";
        return false;
    }
    const auto q = ExtensionField::create(5, Poly({9, 0, -14, 0, 1}),
                                          IrredCertificate::asserted("irreducible over Q_5"));
    const FieldElement x = q->element({Rational(0), Rational(17, 6), Rational(0), Rational(-1, 6)});
    if (spectral_norm(x) != expect) {
        detail = "embedded square root fails";
        return false;
    }
    return true;
}

// 7. Galois isometry in Q(sqrt 5) and agreement of the sup-norm with the
//    spectral norm, 100 samples.
bool criterion_galois_isometry(std::string& detail) {
    std::mt19937_64 rng(1007);
    const auto ext = sqrt5();
    const std::vector<Automorphism> auts = {Automorphism::identity(ext),
                                            Automorphism(ext->element({Rational(0), Rational(-1)}))};
    for (int i = 0; i < 100; ++i) {
        const FieldElement x = random_element(rng, ext, 1'000'000);
        const Magnitude direct = spectral_norm(x);
        if (spectral_norm(auts[1].apply(x)) != direct) {
            detail = "conjugation is not an isometry at x = " + x.to_string();
            return false;
        }
        if (alg_norm_of_galois(SeminormSpec::spectral(ext), auts, x) != direct) {
            detail = "sup over G(L/K) differs at x = " + x.to_string();
            return false;
        }
    }
    return true;
}

// 8. Basis-norm bounds: c = 1 for Q(sqrt 5), c = 5 for Q[X]/(X^2 - 1/5);
//    ||xy|| <= c ||x|| ||y|| on 200 random pairs in each.
bool criterion_basis_bound(std::string& detail) {
    std::mt19937_64 rng(1008);
    const auto a = sqrt5();
    const auto b = ExtensionField::create(
        5, Poly(std::vector<Rational>{Rational(-1, 5), Rational(0), Rational(1)}),
        IrredCertificate::asserted("X^2 - 1/5 has no root in Q_5"));
    if (!basis_norm_bound(*a).is_one()) {
        detail = "bound for Q(sqrt 5) is " + basis_norm_bound(*a).to_string() + ", expected 1";
        return false;
    }
    if (basis_norm_bound(*b) != pp(5, Rational(1))) {
        detail = "bound for X^2 - 1/5 is " + basis_norm_bound(*b).to_string() + ", expected 5";
        return false;
    }
    for (const auto& ext : {a, b}) {
        const Magnitude c = basis_norm_bound(*ext);
        for (int i = 0; i < 200; ++i) {
            const FieldElement x = random_element(rng, ext, 1'000'000);
            const FieldElement y = random_element(rng, ext, 1'000'000);
            if (mag_compare(basis_norm(x * y), c * basis_norm(x) * basis_norm(y)) ==
                Ordering::greater) {
                detail = "bound violated at x = " + x.to_string() + ", y = " + y.to_string();
                return false;
            }
        }
    }
    return true;
}

// 9. Smoothing closed form for f = 2|.|_5: terms are 2^{1/n} |x|_5 exactly,
//    float bracket at max_n = 1024 within 1e-3 of |x|_5.
bool criterion_smoothing_closed_form(std::string& detail) {
    const SeminormSpec f = SeminormSpec::scaled(Rational(2), 5);
    for (const Rational& x : {Rational(5), Rational(75, 8), Rational(3)}) {
        for (long n = 1; n <= 1024; n *= 2) {
            const Magnitude expect =
                pp(2, Rational(1, n)) * padic_magnitude(x, 5);
            if (smoothing_term(f, x, n) != expect) {
                detail = "term mismatch at x = " + x.to_string() + ", n = " + std::to_string(n);
                return false;
            }
        }
        const LimitEstimate est = smoothing_estimate(f, x, 1024, 4);
        const double target = mag_to_float(padic_magnitude(x, 5));
        if (std::abs(est.bracket_low - target) >= 1e-3 ||
            std::abs(est.bracket_high - target) >= 1e-3) {
            detail = "bracket [" + std::to_string(est.bracket_low) + ", " +
                     std::to_string(est.bracket_high) + "] not within 1e-3 of " +
                     std::to_string(target);
            return false;
        }
    }
    return true;
}

// 10. seminorm_from_const for f = max(|.|, |.|^2), y = 1/5: exact stabilized
//     limits, multiplicativity of the limit on 50 samples, antitone sequences.
bool criterion_from_const(std::string& detail) {
    const SeminormSpec f = SeminormSpec::max_pow(5, 2);
    const Rational y(1, 5);
    auto limit = [&](const Rational& x, bool& ok) -> Magnitude {
        const LimitEstimate est = seminorm_from_const_estimate(f, y, x, 64, 4);
        ok = est.stabilized;
        return est.last_term;
    };
    bool ok = false;
    if (limit(Rational(5), ok) != pp(5, Rational(-2)) || !ok) {
        detail = "g(5) wrong or unstabilized";
        return false;
    }
    if (limit(Rational(1, 5), ok) != pp(5, Rational(2)) || !ok) {
        detail = "g(1/5) wrong or unstabilized";
        return false;
    }
    if (!limit(Rational(1), ok).is_one() || !ok) {
        detail = "g(1) wrong or unstabilized";
        return false;
    }
    std::mt19937_64 rng(1010);
    for (int i = 0; i < 50; ++i) {
        const Rational x = testsupport::random_rational(rng, 1'000'000);
        bool ok_x = false, ok_xy = false, ok_y = false;
        const Magnitude gx = limit(x, ok_x);
        const Magnitude gxy = limit(x * y, ok_xy);
        const Magnitude gy = limit(y, ok_y);
        if (!(ok_x && ok_xy && ok_y)) {
            detail = "limit did not stabilize at sample " + x.to_string();
            return false;
        }
        if (gxy != gx * gy) {
            detail = "g(xy) != g(x) g(y) at x = " + x.to_string();
            return false;
        }
    }
    return true; // antitonicity is asserted inside the estimator, which throws on violation
}

// 11. seminorm_from_bounded on Z/4 with f = {0,2,2,2}: output {0,1,1,1}
//     exactly, and the output is a nonarchimedean ring seminorm, exhaustively.
bool criterion_from_bounded(std::string& detail) {
    const SeminormSpec f = SeminormSpec::table(
        4, {Magnitude::zero(), pp(2, Rational(1)), pp(2, Rational(1)), pp(2, Rational(1))});
    std::vector<Magnitude> out;
    for (std::int64_t r = 0; r < 4; ++r) out.push_back(seminorm_from_bounded(f, Residue(r, 4)));
    if (!out[0].is_zero() || !out[1].is_one() || !out[2].is_one() || !out[3].is_one()) {
        detail = "output table is not {0,1,1,1}";
        return false;
    }
    const SeminormSpec g = SeminormSpec::table(4, out);
    std::vector<CarrierElement> all;
    for (std::int64_t r = 0; r < 4; ++r) all.emplace_back(Residue(r, 4));
    for (const auto& check : check_axioms(g, all, {Axiom::seminorm, Axiom::nonarch})) {
        if (!check.pass) {
            detail = axiom_name(check.axiom) + " fails: " + check.witness;
            return false;
        }
    }
    return true;
}

// 12. Uniqueness smoke test: smoothing the basis norm of Q(sqrt 5) brackets
//     the spectral norm within 1e-3 at max_n = 1024.
bool criterion_uniqueness_bracket(std::string& detail) {
    const auto ext = sqrt5();
    const SeminormSpec f = SeminormSpec::basis(ext);
    const FieldElement alpha = ext->generator();
    const std::vector<FieldElement> xs = {alpha, ext->one() + alpha,
                                          ext->element({Rational(3), Rational(5)})};
    for (const auto& x : xs) {
        const LimitEstimate est = smoothing_estimate(f, CarrierElement(x), 1024, 4);
        const double target = mag_to_float(spectral_norm(x));
        const double width = est.bracket_high - est.bracket_low;
        if (width > 1e-3) {
            detail = "bracket width " + std::to_string(width) + " too wide at x = " + x.to_string();
            return false;
        }
        if (target < est.bracket_low || target > est.bracket_high) {
            detail = "bracket misses the spectral norm at x = " + x.to_string();
            return false;
        }
    }
    return true;
}

// 13. CLI golden transcripts, byte-identical.
bool criterion_cli_golden(std::string& detail) {
    auto invoke = [](std::vector<std::string> args, int& code) {
        std::ostringstream out, err;
        code = run(std::move(args), out, err);
        return out.str();
    };
    int code = -1;
    if (invoke({"vp", "--p", "5", "50"}, code) != "{\"valuation\":\"2\"}\n" || code != 0) {
        detail = "vp transcript differs";
        return false;
    }
    if (invoke({"spectral-value", "--p", "5", "--poly", "5,-7,1"}, code) !=
            "{\"magnitude\":{\"factors\":{}}}\n" ||
        code != 0) {
        detail = "spectral-value transcript differs";
        return false;
    }
    testsupport::TempFile ext(R"({"p":5,"modulus":"-5,0,1","certificate":{"kind":"eisenstein"}})");
    if (invoke({"ext-norm", "--ext", ext.path(), "--element", "0,1"}, code) !=
            "{\"magnitude\":{\"factors\":{\"5\":\"-1/2\"}}}\n" ||
        code != 0) {
        detail = "ext-norm transcript differs";
        return false;
    }
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "spectral norm extends the p-adic norm (200 rationals, p in {2,3,5,7}, < 5s)",
         criterion_extends},
        {2, "spectral norm is multiplicative (100 pairs in each certified extension, < 30s)",
         criterion_multiplicative},
        {3, "strong triangle inequality and power-multiplicativity", criterion_nonarch_powmul},
        {4, "Newton-polygon oracle on split products", criterion_newton_oracle},
        {5, "constant-coefficient oracle equals the spectral norm", criterion_const_coeff_oracle},
        {6, "embedding invariance of the spectral norm of sqrt(5)", criterion_embedding_invariance},
        {7, "Galois isometry and sup-norm agreement", criterion_galois_isometry},
        {8, "basis-norm bounding constants and inequality", criterion_basis_bound},
        {9, "smoothing closed form for the scaled norm", criterion_smoothing_closed_form},
        {10, "seminorm-from-const limits, multiplicativity, antitonicity", criterion_from_const},
        {11, "seminorm-from-bounded on Z/4, exhaustive", criterion_from_bounded},
        {12, "smoothed basis norm brackets the spectral norm", criterion_uniqueness_bracket},
        {13, "CLI golden transcripts", criterion_cli_golden},
    };

    const auto suite_start = std::chrono::steady_clock::now();
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = false;
        try {
            pass = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", c.number,
                    c.name.c_str(), secs, detail.empty() ? "" : " -- ", detail.c_str());
        if (!pass) ++failures;
    }
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
    std::printf("%d/%zu criteria passed in %.2fs\n", static_cast<int>(criteria.size()) - failures,
                criteria.size(), total);
    return failures;
}
