// cuspmap: command-line front end for the cusp-map toolkit.
//
// Subcommands: expand-circular, check-admissible, gen-curve,
// verify-asymptotics, oracle-compare. Structured results go to JSON, curves
// to CSV; identical inputs produce byte-identical outputs.
//
// Exit codes: 0 pass, 1 a verification check failed, 2 bad input
// (parameters, file content, domain violations), 3 I/O failure.

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cusp/curve.hpp"
#include "cusp/errors.hpp"
#include "cusp/geodesic.hpp"
#include "cusp/limits.hpp"
#include "cusp/serialize.hpp"
#include "cusp/series.hpp"
#include "cusp/slitmap.hpp"

namespace {

using cusp::cx;
using ordered_json = nlohmann::ordered_json;

double parse_real(const std::string& tok) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw cusp::ParseFailure("expected a real number, got '" + tok + "'");
    return v;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        if (std::fflush(stdout) != 0) throw cusp::IoFailure("write error on stdout");
    } else {
        cusp::write_text_file(out_path, text);
    }
}

// --config FILE expansion: the JSON object carries "subcommand" plus one key
// per long option (arrays for multi-token options, true for plain flags).
// Insertion order of the file is preserved, so runs are reproducible.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::string cfg_path;
    bool found = false;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw cusp::ParseFailure("--config needs a file path");
            cfg_path = args[i + 1];
            args.erase(args.begin() + (long)i, args.begin() + (long)i + 2);
            found = true;
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            cfg_path = args[i].substr(9);
            args.erase(args.begin() + (long)i);
            found = true;
            break;
        }
    }
    if (!found) return args;
    if (!args.empty())
        throw cusp::ParseFailure("--config replaces all other command-line arguments");

    ordered_json j;
    try {
        j = ordered_json::parse(cusp::read_text_file(cfg_path));
    } catch (const nlohmann::json::exception& e) {
        throw cusp::ParseFailure(std::string("invalid config JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("subcommand") || !j.at("subcommand").is_string())
        throw cusp::ParseFailure("config must be an object with a \"subcommand\" string");

    std::vector<std::string> out;
    if (j.contains("tol-scale")) {
        out.push_back("--tol-scale");
        out.push_back(j.at("tol-scale").dump());
    }
    out.push_back(j.at("subcommand").get<std::string>());
    auto push_value = [](std::vector<std::string>& dst, const ordered_json& v) {
        if (v.is_string())
            dst.push_back(v.get<std::string>());
        else if (v.is_number())
            dst.push_back(v.dump());
        else
            throw cusp::ParseFailure("config values must be strings, numbers, arrays or true");
    };
    for (const auto& [key, value] : j.items()) {
        if (key == "subcommand" || key == "tol-scale") continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) out.push_back("--" + key);
            continue;
        }
        out.push_back("--" + key);
        if (value.is_array())
            for (const auto& e : value) push_value(out, e);
        else
            push_value(out, value);
    }
    return out;
}

cusp::ApproachPath make_path(const std::string& spec, double t_min, double t_max, int n) {
    if (spec == "vertical") return cusp::ApproachPath::vertical(t_min, t_max, n);
    if (spec.rfind("ray:", 0) == 0)
        return cusp::ApproachPath::ray(parse_real(spec.substr(4)), t_min, t_max, n);
    throw cusp::ParseFailure("--path must be 'vertical' or 'ray:<theta>'");
}

// Builds the map evaluator named by the two --map tokens. The oracle variant
// reads a negative-side boundary trace, rebuilds the slit polyline from it
// (origin first, then samples from the cusp outward) and fits the geodesic
// composition; the half-plane scale is left at 1, which the limit ratios do
// not see (rescaling z only perturbs the 1/log corrections).
cusp::MapEvaluator make_evaluator(const std::vector<std::string>& spec, double& a_default,
                                  bool& is_oracle) {
    is_oracle = false;
    if (spec[0] == "series") {
        auto s = std::make_shared<cusp::LogSeries>(
            cusp::series_from_json(cusp::read_text_file(spec[1])));
        a_default = s->a;
        return [s](cx z) { return cusp::f_eval(*s, z); };
    }
    if (spec[0] == "circular") {
        cusp::CircularArc arc{parse_real(spec[1])};
        a_default = 1.0;
        return [arc](cx z) { return cusp::chr_eval(arc, z); };
    }
    if (spec[0] == "oracle") {
        cusp::CuspCurve curve = cusp::curve_from_csv(cusp::read_text_file(spec[1]));
        if (curve.side != cusp::CurveSide::negative_axis)
            throw cusp::ParseFailure("oracle input must be a negative-side trace");
        cusp::SlitPolyline slit;
        slit.vertices.push_back(cx(0.0, 0.0));
        for (auto it = curve.samples.rbegin(); it != curve.samples.rend(); ++it)
            slit.vertices.push_back(cx(it->u, it->v));
        auto m = std::make_shared<cusp::GeodesicMap>(cusp::fit_geodesic(slit));
        m->normalized = true;
        m->lambda = 1.0;
        if (!std::isinf(m->p_inf) && m->p_inf < m->p_plus) m->lambda = -1.0;
        a_default = 1.0;
        is_oracle = true;
        return [m](cx z) { return cusp::eval_geodesic(*m, z); };
    }
    throw cusp::ParseFailure("--map kind must be series, circular or oracle");
}

int cmd_verify(const std::vector<std::string>& map_spec, const std::string& theorem, double d,
               std::optional<double> a_flag, const std::string& path_spec, double t_min,
               double t_max, int n_pts, double tol, const std::string& out) {
    double a_default = 1.0;
    bool is_oracle = false;
    cusp::MapEvaluator f = make_evaluator(map_spec, a_default, is_oracle);
    if (is_oracle && t_min < 1e-8 * (1.0 - 1e-12))
        throw cusp::OutOfDomain("oracle-backed paths need |z| >= 1e-8");

    cusp::ApproachPath path = make_path(path_spec, t_min, t_max, n_pts);
    double a = a_flag.value_or(a_default);

    cusp::LimitEstimate est;
    bool unit_target = true;
    if (theorem == "1") {
        est = cusp::ratio_theorem1(f, a, path);
    } else if (theorem == "2") {
        est = cusp::ratio_theorem2(cusp::power_transform(f, d), a, d, path);
    } else {
        // Reference-convention ratio: the limit depends on how the caller's
        // coefficient relates to the map's curvature, so only convergence of
        // the extrapolation is checked.
        est = cusp::kaiser_ratio(f, a, d, path);
        unit_target = false;
    }

    ordered_json j;
    auto& ratios = j["ratios"] = ordered_json::array();
    for (const auto& [t, r] : est.ratios) ratios.push_back({t, r.real(), r.imag()});
    j["extrapolated"] = {est.extrapolated.real(), est.extrapolated.imag()};
    j["residual"] = est.fit_residual;
    emit(j.dump(2) + "\n", out);

    bool ok = est.fit_residual <= tol;
    if (unit_target) ok = ok && std::abs(est.extrapolated - cx(1.0, 0.0)) <= tol;
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = expand_config(std::move(args));
    } catch (const cusp::IoFailure& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    CLI::App app{"Conformal cusp maps: series expansion, admissibility, boundary curves,\n"
                 "asymptotic ratio verification and an independent mapping oracle."};
    app.require_subcommand(0, 1);
    double tol_scale = 1.0;
    app.add_option("--tol-scale", tol_scale,
                   "Multiplier applied to every pass/fail tolerance this run")
        ->check(CLI::PositiveNumber);

    // expand-circular
    auto* cmd_exp = app.add_subcommand("expand-circular",
                                       "Expand the explicit circular-arc map into log-power "
                                       "series coefficients (JSON)");
    double exp_alpha = 0.0;
    int exp_nmax = 8, exp_kmax = 16;
    std::string exp_out;
    cmd_exp->add_option("--alpha", exp_alpha, "Arc angle in (0, 2pi]")->required();
    cmd_exp->add_option("--nmax", exp_nmax, "Rows n = 1..nmax");
    cmd_exp->add_option("--kmax", exp_kmax, "Columns k = 0..kmax");
    cmd_exp->add_option("--out", exp_out, "Output path (default: stdout)");

    // check-admissible
    auto* cmd_adm = app.add_subcommand("check-admissible",
                                       "Evaluate the four admissibility conditions of a series "
                                       "file and write a report (JSON)");
    std::string adm_series, adm_out;
    double adm_radius = 0.0;
    cmd_adm->add_option("--series", adm_series, "Series coefficients JSON file")->required();
    cmd_adm->add_option("--radius", adm_radius, "Half-disk radius for the grid sups")->required();
    cmd_adm->add_option("--out", adm_out, "Report path (default: stdout)");

    // gen-curve
    auto* cmd_gen = app.add_subcommand("gen-curve",
                                       "Trace the boundary curve of a series map over a "
                                       "log-spaced window (CSV)");
    std::string gen_series, gen_side = "neg", gen_out;
    double gen_xmin = 1e-12, gen_xmax = 1e-4;
    int gen_n = 64;
    std::optional<double> gen_power;
    cmd_gen->add_option("--series", gen_series, "Series coefficients JSON file")->required();
    cmd_gen->add_option("--side", gen_side, "Axis side: neg or pos")
        ->check(CLI::IsMember({"neg", "pos"}));
    cmd_gen->add_option("--xmin", gen_xmin, "Smallest |x|")->check(CLI::PositiveNumber);
    cmd_gen->add_option("--xmax", gen_xmax, "Largest |x|")->check(CLI::PositiveNumber);
    cmd_gen->add_option("--n", gen_n, "Sample count");
    cmd_gen->add_option("--power-d", gen_power, "Trace the d-th power transform instead");
    cmd_gen->add_option("--out", gen_out, "Output path (default: stdout)");

    // verify-asymptotics
    auto* cmd_ver = app.add_subcommand("verify-asymptotics",
                                       "Sample the normalized ratio along a path to 0 and "
                                       "extrapolate the limit (JSON)");
    std::vector<std::string> ver_map;
    std::string ver_theorem = "1", ver_path = "vertical", ver_out;
    double ver_d = 1.0, ver_tmin = 1e-16, ver_tmax = 1e-4, ver_tol = 1e-2;
    std::optional<double> ver_a;
    int ver_npts = 48;
    cmd_ver->add_option("--map", ver_map,
                        "Map under test: 'series <file>' | 'circular <alpha>' | "
                        "'oracle <curve.csv>'")
        ->expected(2)
        ->required();
    cmd_ver->add_option("--theorem", ver_theorem, "Normalizer: 1, 2 or kaiser")
        ->check(CLI::IsMember({"1", "2", "kaiser"}));
    cmd_ver->add_option("--d", ver_d, "Tangency order (theorem 2 / kaiser)")
        ->check(CLI::PositiveNumber);
    cmd_ver->add_option("--a", ver_a, "Curvature coefficient (default: from the map)");
    cmd_ver->add_option("--path", ver_path, "vertical or ray:<theta>");
    cmd_ver->add_option("--tmin", ver_tmin, "Smallest |z| on the path")->check(CLI::PositiveNumber);
    cmd_ver->add_option("--tmax", ver_tmax, "Largest |z| on the path")->check(CLI::PositiveNumber);
    cmd_ver->add_option("--npts", ver_npts, "Path sample count");
    cmd_ver->add_option("--tol", ver_tol, "Pass tolerance on the extrapolated limit")
        ->check(CLI::PositiveNumber);
    cmd_ver->add_option("--out", ver_out, "Output path (default: stdout)");

    // oracle-compare
    auto* cmd_orc = app.add_subcommand("oracle-compare",
                                       "Fit the geodesic oracle to the discretized arc and "
                                       "compare against the explicit map (JSON)");
    double orc_alpha = 0.0, orc_tol = 1e-2;
    int orc_vertices = 0;
    std::string orc_out;
    cmd_orc->add_option("--alpha", orc_alpha, "Arc angle in (0, 2pi]")->required();
    cmd_orc->add_option("--vertices", orc_vertices, "Polyline vertex count")->required();
    cmd_orc->add_option("--tol", orc_tol, "Pass tolerance on the max relative error")
        ->check(CLI::PositiveNumber);
    cmd_orc->add_option("--out", orc_out, "Output path (default: stdout)");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_exp->parsed()) {
            cusp::CircularArc arc{exp_alpha};
            emit(cusp::series_to_json(cusp::chr_expand(arc, exp_nmax, exp_kmax)), exp_out);
            return 0;
        }
        if (cmd_adm->parsed()) {
            cusp::LogSeries s = cusp::series_from_json(cusp::read_text_file(adm_series));
            auto report = cusp::check_admissibility(s, adm_radius);
            emit(cusp::admissibility_to_json(report), adm_out);
            return report.all_pass() ? 0 : 1;
        }
        if (cmd_gen->parsed()) {
            cusp::LogSeries s = cusp::series_from_json(cusp::read_text_file(gen_series));
            auto side = gen_side == "neg" ? cusp::CurveSide::negative_axis
                                          : cusp::CurveSide::positive_axis;
            auto xs = cusp::log_spaced_abscissae(gen_xmin, gen_xmax, gen_n, side);
            cusp::CuspCurve c = gen_power ? cusp::power_curve(s, *gen_power, xs)
                                          : cusp::trace_boundary(s, xs);
            emit(cusp::curve_to_csv(c), gen_out);
            return 0;
        }
        if (cmd_ver->parsed()) {
            return cmd_verify(ver_map, ver_theorem, ver_d, ver_a, ver_path, ver_tmin, ver_tmax,
                              ver_npts, ver_tol * tol_scale, ver_out);
        }
        if (cmd_orc->parsed()) {
            cusp::CircularArc arc{orc_alpha};
            double err =
                cusp::compare_with_explicit(arc, orc_vertices, cusp::default_compare_points());
            bool ok = err <= orc_tol * tol_scale;
            ordered_json j;
            j["alpha"] = orc_alpha;
            j["vertices"] = orc_vertices;
            j["max_rel_error"] = err;
            j["pass"] = ok;
            emit(j.dump(2) + "\n", orc_out);
            return ok ? 0 : 1;
        }
        std::fputs(app.help().c_str(), stdout);
        return 2;
    } catch (const cusp::IoFailure& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const cusp::ParseFailure& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
