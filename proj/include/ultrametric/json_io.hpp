#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "extension.hpp"
#include "irreducibility.hpp"
#include "magnitude.hpp"
#include "newton.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "seminorm.hpp"

namespace ultrametric {

using nlohmann::json;

// --- polynomial / element text format ---------------------------------------

// Comma-separated rationals; whitespace tolerated. Parse errors carry the
// 1-based character position of the offending token.
inline std::vector<Rational> parse_coefficient_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] != ',') continue;
        std::size_t a = start, b = i;
        while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
        const std::string token = text.substr(a, b - a);
        if (token.empty())
            throw ParseError("empty coefficient at position " + std::to_string(a + 1));
        try {
            out.push_back(parse_rational(token));
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " at position " + std::to_string(a + 1));
        }
        start = i + 1;
    }
    return out;
}

// Polynomial text form, low degree first, e.g. "5,-7,1" for X^2-7X+5;
// trailing zeros are stripped.
inline Poly parse_polynomial(const std::string& text) {
    return Poly(parse_coefficient_list(text));
}

// --- magnitudes and valuations ----------------------------------------------

inline json magnitude_to_json(const Magnitude& m, bool with_approx = false) {
    json j;
    if (m.is_zero()) {
        j["zero"] = true;
    } else {
        json factors = json::object();
        for (const auto& [p, e] : m.factors()) factors[std::to_string(p)] = e.to_string();
        j["factors"] = std::move(factors);
    }
    if (with_approx) j["approx"] = m.to_double();
    return j;
}

inline Magnitude magnitude_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("magnitude must be a JSON object");
    if (j.contains("zero")) {
        if (j["zero"].get<bool>()) return Magnitude::zero();
        throw ParseError("magnitude 'zero' field must be true when present");
    }
    if (!j.contains("factors")) throw ParseError("magnitude needs 'zero' or 'factors'");
    Magnitude m = Magnitude::one();
    for (const auto& [key, value] : j["factors"].items()) {
        std::int64_t p = 0;
        try {
            p = std::stoll(key);
        } catch (...) {
            throw ParseError("bad prime key '" + key + "'");
        }
        const Rational e = value.is_string() ? parse_rational(value.get<std::string>())
                                             : Rational(value.get<long>());
        m *= Magnitude::prime_power(p, e);
    }
    return m;
}

inline json valexp_to_json(const ValExp& v) { return v.to_string(); }

inline ValExp valexp_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return ValExp::infinity();
    if (j.is_string()) return ValExp(parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return ValExp(Rational(j.get<long>()));
    throw ParseError("valuation must be 'inf' or a rational string");
}

// --- extension descriptors ---------------------------------------------------

inline IrredCertificate certificate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("certificate needs a 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "eisenstein") return IrredCertificate::eisenstein();
    if (kind == "eisenstein_shift") {
        if (!j.contains("shift")) throw ParseError("eisenstein_shift needs a 'shift'");
        const auto& s = j["shift"];
        return IrredCertificate::eisenstein_shift(
            s.is_string() ? parse_rational(s.get<std::string>()) : Rational(s.get<long>()));
    }
    if (kind == "mod_p") return IrredCertificate::mod_p();
    if (kind == "asserted")
        return IrredCertificate::asserted(j.value("note", std::string{}));
    throw ParseError("unknown certificate kind '" + kind + "'");
}

inline json certificate_to_json(const IrredCertificate& cert) {
    json j;
    j["kind"] = cert.kind_name();
    if (cert.kind == IrredCertificate::Kind::eisenstein_shift) j["shift"] = cert.shift.to_string();
    if (cert.kind == IrredCertificate::Kind::asserted) j["note"] = cert.note;
    return j;
}

inline ExtensionField::Ptr extension_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("extension descriptor must be a JSON object");
    if (!j.contains("p") || !j.contains("modulus") || !j.contains("certificate"))
        throw ParseError("extension descriptor needs 'p', 'modulus' and 'certificate'");
    const auto p = j["p"].get<std::int64_t>();
    const Poly modulus = parse_polynomial(j["modulus"].get<std::string>());
    return ExtensionField::create(p, modulus, certificate_from_json(j["certificate"]));
}

inline json extension_to_json(const ExtensionField& ext) {
    json j;
    j["p"] = ext.prime();
    j["modulus"] = ext.modulus().to_string();
    j["certificate"] = certificate_to_json(ext.certificate());
    return j;
}

// Element in the power basis: a coefficient string ("0,1") or JSON array,
// padded with zeros up to the extension degree.
inline FieldElement element_from_coords(const ExtensionField::Ptr& ext,
                                        std::vector<Rational> coords) {
    const auto n = static_cast<std::size_t>(ext->degree());
    if (coords.size() > n)
        throw InputError("element has " + std::to_string(coords.size()) +
                         " coordinates but the extension has degree " + std::to_string(n));
    coords.resize(n, Rational(0));
    return ext->element(std::move(coords));
}

inline FieldElement element_from_json(const ExtensionField::Ptr& ext, const json& j) {
    std::vector<Rational> coords;
    if (j.is_string()) {
        coords = parse_coefficient_list(j.get<std::string>());
    } else if (j.is_array()) {
        for (const auto& v : j)
            coords.push_back(v.is_string() ? parse_rational(v.get<std::string>())
                                           : Rational(v.get<long>()));
    } else {
        throw ParseError("element must be a coefficient string or array");
    }
    return element_from_coords(ext, std::move(coords));
}

inline std::vector<Automorphism> automorphisms_from_json(const ExtensionField::Ptr& ext,
                                                         const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("automorphism file must be a nonempty array");
    std::vector<Automorphism> out;
    for (const auto& entry : j) out.emplace_back(element_from_json(ext, entry));
    return out;
}

// --- seminorm descriptors -----------------------------------------------------

inline SeminormSpec seminorm_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("seminorm descriptor needs a 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "padic") return SeminormSpec::padic(j.at("p").get<std::int64_t>());
    if (kind == "scaled") {
        const auto& c = j.at("c");
        return SeminormSpec::scaled(
            c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()),
            j.at("p").get<std::int64_t>());
    }
    if (kind == "max_pow")
        return SeminormSpec::max_pow(j.at("p").get<std::int64_t>(), j.at("k").get<long>());
    if (kind == "basis") return SeminormSpec::basis(extension_from_json(j.at("ext")));
    if (kind == "spectral") return SeminormSpec::spectral(extension_from_json(j.at("ext")));
    if (kind == "table") {
        const auto n = j.at("n").get<std::int64_t>();
        if (n < 2) throw ParseError("table modulus must be >= 2");
        std::vector<Magnitude> values(static_cast<std::size_t>(n), Magnitude::zero());
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (const auto& [key, value] : j.at("values").items()) {
            std::int64_t r = 0;
            try {
                r = std::stoll(key);
            } catch (...) {
                throw ParseError("bad residue key '" + key + "'");
            }
            if (r < 0 || r >= n) throw ParseError("residue key out of range: " + key);
            values[static_cast<std::size_t>(r)] = magnitude_from_json(value);
            seen[static_cast<std::size_t>(r)] = true;
        }
        for (std::int64_t r = 0; r < n; ++r)
            if (!seen[static_cast<std::size_t>(r)])
                throw ParseError("table is missing a value for residue " + std::to_string(r));
        return SeminormSpec::table(n, std::move(values));
    }
    throw ParseError("unknown seminorm kind '" + kind + "'");
}

// One carrier element in textual/JSON form, interpreted by the seminorm's
// carrier: rationals as "n/d", extension elements as coefficient lists,
// residues as integers.
inline CarrierElement carrier_element_from_json(const SeminormSpec& f, const json& j) {
    switch (f.carrier()) {
    case SeminormSpec::Carrier::rationals:
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long>());
        throw ParseError("rational sample must be a string or integer");
    case SeminormSpec::Carrier::extension:
        return element_from_json(f.extension(), j);
    case SeminormSpec::Carrier::residues:
        if (j.is_number_integer()) return Residue(j.get<std::int64_t>(), f.table_modulus());
        if (j.is_string()) {
            try {
                return Residue(std::stoll(j.get<std::string>()), f.table_modulus());
            } catch (const std::exception&) {
                throw ParseError("residue sample must be an integer");
            }
        }
        throw ParseError("residue sample must be an integer");
    }
    throw ParseError("unreachable carrier");
}

inline CarrierElement carrier_element_from_text(const SeminormSpec& f, const std::string& text) {
    switch (f.carrier()) {
    case SeminormSpec::Carrier::rationals: {
        try {
            return parse_rational(text);
        } catch (const ParseError& e) {
            throw ParseError(std::string("carrier element: ") + e.what());
        }
    }
    case SeminormSpec::Carrier::extension:
        return element_from_coords(f.extension(), parse_coefficient_list(text));
    case SeminormSpec::Carrier::residues: {
        try {
            return Residue(std::stoll(text), f.table_modulus());
        } catch (const std::exception&) {
            throw ParseError("residue must be an integer, got '" + text + "'");
        }
    }
    }
    throw ParseError("unreachable carrier");
}

inline std::vector<CarrierElement> samples_from_json(const SeminormSpec& f, const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("sample file must be a nonempty JSON array");
    std::vector<CarrierElement> out;
    for (const auto& entry : j) out.push_back(carrier_element_from_json(f, entry));
    return out;
}

// --- results -------------------------------------------------------------------

inline json newton_to_json(const NewtonPolygon& np, const std::vector<Magnitude>& roots,
                           bool with_approx = false) {
    json j;
    j["prime"] = np.prime;
    json verts = json::array();
    for (const auto& [i, v] : np.vertices) verts.push_back(json::array({i, v.to_string()}));
    j["vertices"] = std::move(verts);
    json segs = json::array();
    for (const auto& s : np.segments) {
        json seg;
        seg["length"] = s.length;
        seg["slope"] = s.slope.to_string();
        segs.push_back(std::move(seg));
    }
    j["segments"] = std::move(segs);
    json rm = json::array();
    for (const auto& m : roots) rm.push_back(magnitude_to_json(m, with_approx));
    j["root_magnitudes"] = std::move(rm);
    return j;
}

inline json limit_estimate_to_json(const LimitEstimate& est, bool with_approx = false) {
    json j;
    j["terms_evaluated"] = est.terms_evaluated;
    j["last_term"] = magnitude_to_json(est.last_term, with_approx);
    j["stabilized"] = est.stabilized;
    j["float_bracket"] = json::array({est.bracket_low, est.bracket_high});
    return j;
}

inline json axiom_report_to_json(const std::vector<AxiomCheck>& report, bool with_approx = false) {
    json results = json::array();
    for (const auto& check : report) {
        json entry;
        entry["axiom"] = axiom_name(check.axiom);
        entry["pass"] = check.pass;
        if (!check.witness.empty()) entry["witness"] = check.witness;
        if (check.bound) entry["bound"] = magnitude_to_json(*check.bound, with_approx);
        results.push_back(std::move(entry));
    }
    json j;
    j["results"] = std::move(results);
    return j;
}

} // namespace ultrametric
