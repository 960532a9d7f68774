#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "errors.hpp"
#include "extension.hpp"
#include "json_io.hpp"
#include "magnitude.hpp"
#include "newton.hpp"
#include "poly.hpp"
#include "seminorm.hpp"

namespace ultrametric {

namespace cli_detail {

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("bad JSON in '" + path + "': " + e.what());
    }
}

inline std::vector<Axiom> parse_profile(const std::string& text) {
    std::vector<Axiom> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] != ',') continue;
        std::string token = text.substr(start, i - start);
        start = i + 1;
        std::string lower;
        for (char c : token)
            if (!std::isspace(static_cast<unsigned char>(c)))
                lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (lower.empty()) continue;
        if (lower == "seminorm") out.push_back(Axiom::seminorm);
        else if (lower == "norm") out.push_back(Axiom::norm);
        else if (lower == "nonarch") out.push_back(Axiom::nonarch);
        else if (lower == "pow_mul") out.push_back(Axiom::pow_mul);
        else if (lower == "mult") out.push_back(Axiom::mult);
        else if (lower == "extends") out.push_back(Axiom::extends);
        else if (lower == "bounded_mult") out.push_back(Axiom::bounded_mult);
        else if (lower == "isometry") out.push_back(Axiom::isometry);
        else throw InputError("unknown axiom '" + token + "' in profile");
    }
    if (out.empty()) throw InputError("empty axiom profile");
    return out;
}

} // namespace cli_detail

// Runs one CLI invocation; `args` excludes the program name. JSON results on
// `out`, JSON error documents on `err`. Exit status: 0 success, 1 on
// mathematical/domain errors, 2 on usage/parse errors.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact nonarchimedean norms: p-adic valuations, spectral norms on certified "
                 "extensions, Newton polygons, and seminorm smoothing",
                 "ultrametric"};
    app.require_subcommand(1);

    bool approx = false;
    bool json_output = true; // the only output format; flag kept for scripts

    struct {
        std::int64_t p = 0;
        std::string value, poly, ext_file, element, seminorm_file, samples_file, auts_file;
        std::string y, profile;
        long max_n = 1024;
        long fc_max_n = 64;
        long window = 4;
    } opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--approx", approx, "add decimal approximations to magnitudes");
        sub->add_flag("--json", json_output, "emit JSON (default, always on)");
    };

    CLI::App* vp_cmd = app.add_subcommand("vp", "p-adic valuation of a rational");
    vp_cmd->add_option("--p,-p", opt.p, "prime")->required();
    vp_cmd->add_option("value", opt.value, "rational, 'n' or 'n/d'")->required();
    add_common(vp_cmd);

    CLI::App* norm_cmd = app.add_subcommand("norm", "p-adic magnitude of a rational");
    norm_cmd->add_option("--p,-p", opt.p, "prime")->required();
    norm_cmd->add_option("value", opt.value, "rational, 'n' or 'n/d'")->required();
    add_common(norm_cmd);

    CLI::App* sv_cmd = app.add_subcommand("spectral-value", "spectral value of a polynomial");
    sv_cmd->add_option("--p,-p", opt.p, "prime")->required();
    sv_cmd->add_option("--poly", opt.poly, "coefficients, low degree first")->required();
    add_common(sv_cmd);

    CLI::App* newton_cmd =
        app.add_subcommand("newton", "Newton polygon and root magnitudes of a monic polynomial");
    newton_cmd->add_option("--p,-p", opt.p, "prime")->required();
    newton_cmd->add_option("--poly", opt.poly, "coefficients, low degree first")->required();
    add_common(newton_cmd);

    CLI::App* extnorm_cmd =
        app.add_subcommand("ext-norm", "spectral norm of an element of a described extension");
    extnorm_cmd->add_option("--ext", opt.ext_file, "extension descriptor JSON file")->required();
    extnorm_cmd->add_option("--element", opt.element, "power-basis coordinates")->required();
    add_common(extnorm_cmd);

    CLI::App* basis_cmd = app.add_subcommand("basis-norm", "power-basis norm of an element");
    basis_cmd->add_option("--ext", opt.ext_file, "extension descriptor JSON file")->required();
    basis_cmd->add_option("--element", opt.element, "power-basis coordinates")->required();
    add_common(basis_cmd);

    CLI::App* galois_cmd =
        app.add_subcommand("galois-norm", "max of a norm over a list of automorphisms");
    galois_cmd->add_option("--ext", opt.ext_file, "extension descriptor JSON file")->required();
    galois_cmd->add_option("--element", opt.element, "power-basis coordinates")->required();
    galois_cmd->add_option("--auts", opt.auts_file, "JSON array of generator images")->required();
    galois_cmd->add_option("--seminorm", opt.seminorm_file,
                           "seminorm descriptor (default: spectral norm on the extension)");
    add_common(galois_cmd);

    CLI::App* smooth_cmd =
        app.add_subcommand("smooth", "smoothing seminorm estimate inf_n f(x^n)^(1/n)");
    smooth_cmd->add_option("--seminorm", opt.seminorm_file, "seminorm descriptor JSON file")
        ->required();
    smooth_cmd->add_option("--element", opt.element, "carrier element")->required();
    smooth_cmd->add_option("--max-n", opt.max_n, "largest term index (doubling schedule)");
    smooth_cmd->add_option("--window", opt.window, "stabilization window");
    add_common(smooth_cmd);

    CLI::App* fromconst_cmd = app.add_subcommand(
        "from-const", "seminorm-from-constant estimate of lim f(x*y^n)/f(y)^n");
    fromconst_cmd->add_option("--seminorm", opt.seminorm_file, "seminorm descriptor JSON file")
        ->required();
    fromconst_cmd->add_option("--y", opt.y, "the constant y, a carrier element")->required();
    fromconst_cmd->add_option("--element", opt.element, "carrier element x")->required();
    fromconst_cmd->add_option("--max-n", opt.fc_max_n, "largest term index");
    fromconst_cmd->add_option("--window", opt.window, "stabilization window");
    add_common(fromconst_cmd);

    CLI::App* frombounded_cmd = app.add_subcommand(
        "from-bounded", "seminorm from a bounded function, sup_y f(x*y)/f(y)");
    frombounded_cmd->add_option("--seminorm", opt.seminorm_file, "seminorm descriptor JSON file")
        ->required();
    frombounded_cmd->add_option("--element", opt.element, "carrier element x")->required();
    add_common(frombounded_cmd);

    CLI::App* check_cmd = app.add_subcommand("check", "run an axiom profile over a sample file");
    check_cmd->add_option("--seminorm", opt.seminorm_file, "seminorm descriptor JSON file")
        ->required();
    check_cmd->add_option("--samples", opt.samples_file, "JSON array of carrier elements")
        ->required();
    check_cmd
        ->add_option("--profile", opt.profile,
                     "comma list of seminorm,norm,nonarch,pow_mul,mult,extends,bounded_mult,isometry")
        ->required();
    check_cmd->add_option("--auts", opt.auts_file, "JSON array of generator images (isometry)");
    add_common(check_cmd);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));

        json result;
        if (*vp_cmd) {
            result["valuation"] = vp(parse_rational(opt.value), opt.p).to_string();
        } else if (*norm_cmd) {
            result["magnitude"] = magnitude_to_json(padic_magnitude(parse_rational(opt.value), opt.p), approx);
        } else if (*sv_cmd) {
            result["magnitude"] =
                magnitude_to_json(spectral_value(parse_polynomial(opt.poly), opt.p), approx);
        } else if (*newton_cmd) {
            const Poly p = parse_polynomial(opt.poly);
            result = newton_to_json(newton_polygon(p, opt.p), root_magnitudes(p, opt.p), approx);
        } else if (*extnorm_cmd) {
            const auto ext = extension_from_json(cli_detail::load_json_file(opt.ext_file));
            const FieldElement x = element_from_coords(ext, parse_coefficient_list(opt.element));
            result["magnitude"] = magnitude_to_json(spectral_norm(x), approx);
        } else if (*basis_cmd) {
            const auto ext = extension_from_json(cli_detail::load_json_file(opt.ext_file));
            const FieldElement x = element_from_coords(ext, parse_coefficient_list(opt.element));
            result["magnitude"] = magnitude_to_json(basis_norm(x), approx);
        } else if (*galois_cmd) {
            const auto ext = extension_from_json(cli_detail::load_json_file(opt.ext_file));
            const FieldElement x = element_from_coords(ext, parse_coefficient_list(opt.element));
            const auto auts =
                automorphisms_from_json(ext, cli_detail::load_json_file(opt.auts_file));
            const SeminormSpec norm =
                opt.seminorm_file.empty()
                    ? SeminormSpec::spectral(ext)
                    : seminorm_from_json(cli_detail::load_json_file(opt.seminorm_file));
            result["magnitude"] = magnitude_to_json(alg_norm_of_galois(norm, auts, x), approx);
        } else if (*smooth_cmd) {
            const SeminormSpec f =
                seminorm_from_json(cli_detail::load_json_file(opt.seminorm_file));
            const CarrierElement x = carrier_element_from_text(f, opt.element);
            result = limit_estimate_to_json(smoothing_estimate(f, x, opt.max_n, opt.window), approx);
        } else if (*fromconst_cmd) {
            const SeminormSpec f =
                seminorm_from_json(cli_detail::load_json_file(opt.seminorm_file));
            const CarrierElement y = carrier_element_from_text(f, opt.y);
            const CarrierElement x = carrier_element_from_text(f, opt.element);
            result = limit_estimate_to_json(
                seminorm_from_const_estimate(f, y, x, opt.fc_max_n, opt.window), approx);
        } else if (*frombounded_cmd) {
            const SeminormSpec f =
                seminorm_from_json(cli_detail::load_json_file(opt.seminorm_file));
            const CarrierElement x = carrier_element_from_text(f, opt.element);
            result["magnitude"] = magnitude_to_json(seminorm_from_bounded(f, x), approx);
        } else if (*check_cmd) {
            const SeminormSpec f =
                seminorm_from_json(cli_detail::load_json_file(opt.seminorm_file));
            const auto samples = samples_from_json(f, cli_detail::load_json_file(opt.samples_file));
            const auto profile = cli_detail::parse_profile(opt.profile);
            std::vector<Automorphism> auts;
            if (!opt.auts_file.empty()) {
                if (f.carrier() != SeminormSpec::Carrier::extension)
                    throw InputError("--auts requires a seminorm on an extension carrier");
                auts = automorphisms_from_json(f.extension(),
                                               cli_detail::load_json_file(opt.auts_file));
            }
            result = axiom_report_to_json(check_axioms(f, samples, profile, auts), approx);
        }

        out << result.dump() << "\n";
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        err << json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
        return e.kind() == "parse" ? 2 : 1;
    } catch (const json::exception& e) {
        err << json{{"error", "parse"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
}

} // namespace ultrametric
