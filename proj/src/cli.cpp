#include <entvis/cli.hpp>

#include <entvis/corrected.hpp>
#include <entvis/correlation.hpp>
#include <entvis/density.hpp>
#include <entvis/errors.hpp>
#include <entvis/radon.hpp>
#include <entvis/state.hpp>
#include <entvis/validation.hpp>
#include <entvis/visibility.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace entvis {

double parse_angle(const std::string& raw) {
    std::string s = raw;
    double sign = 1.0;
    if (!s.empty() && s[0] == '-') {
        sign = -1.0;
        s = s.substr(1);
    }
    static const std::pair<const char*, double> tokens[] = {
        {"0", 0.0},           {"pi/8", pi / 8.0}, {"pi/4", pi / 4.0},
        {"3pi/8", 3 * pi / 8}, {"pi/2", pi / 2.0}, {"3pi/4", 3 * pi / 4}};
    for (const auto& [name, value] : tokens) {
        if (s == name) return sign * value;
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(raw, &used);
        if (used != raw.size() || !std::isfinite(v)) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid angle '" + raw + "' (radians or 0, pi/8, pi/4, 3pi/8, pi/2, 3pi/4)");
    }
}

std::pair<std::size_t, std::size_t> parse_grid_size(const std::string& s) {
    const auto x = s.find('x');
    if (x == std::string::npos) throw ConfigError("grid size must look like NxM");
    try {
        std::size_t u1 = 0, u2 = 0;
        const std::string a = s.substr(0, x);
        const std::string b = s.substr(x + 1);
        const long n = std::stol(a, &u1);
        const long m = std::stol(b, &u2);
        if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument(s);
        if (n < 2 || m < 2) throw ConfigError("grid needs at least 2 samples per axis, got " + s);
        return {static_cast<std::size_t>(n), static_cast<std::size_t>(m)};
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("invalid grid size '" + s + "'");
    }
}

SweepRow sweep_row(const SetupParams& p, double param_value) {
    const StateConstants k(p);
    const double ac = std::abs(k.c);
    const double as = std::abs(k.s);
    const LimitDeviations dev = limit_deviations(p);
    const double dv = dev.v_minus_abs_cos;
    const double df = corrected_F_deviation(p);
    SweepRow r{};
    r.param = param_value;
    r.v2_plus_d2 = 1.0 - dev.epsilon;
    r.v2_plus_f2 = 1.0 + dv * (2.0 * ac + dv) + df * (2.0 * as + df);
    r.v2_plus_r2 = 1.0 - vr_deficit(p);
    r.bound = epsilon_and_bound(p).bound;
    return r;
}

std::vector<SweepRow> run_sweep(const SetupParams& base, const std::string& param, double start, double stop,
                                std::size_t count, unsigned threads) {
    if (count < 2) throw ConfigError("sweep count must be >= 2");
    if (!(std::isfinite(start) && std::isfinite(stop))) throw ConfigError("sweep bounds must be finite");
    if (param != "a" && param != "xi" && param != "h1" && param != "h2") {
        throw ConfigError("sweep parameter must be one of a, xi, h1, h2");
    }
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) {
        values[i] = i + 1 == count ? stop
                                   : start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    // validate every point before spawning workers
    std::vector<SetupParams> points;
    points.reserve(count);
    for (double v : values) {
        if (param == "a") points.push_back(base.with_a(v));
        else if (param == "xi") points.push_back(base.with_xi(v));
        else if (param == "h1") points.emplace_back(base.a(), v, base.h2(), base.xi());
        else points.emplace_back(base.a(), base.h1(), v, base.xi());
    }
    std::vector<SweepRow> rows(count);
    parallel_for(count, threads, [&](std::size_t i) { rows[i] = sweep_row(points[i], values[i]); });
    return rows;
}

namespace {

struct Common {
    double a = 30.0;
    double h1 = 1.0;
    double h2 = 2.0;
    std::string xi = "pi/4";
    std::string format = "csv";
    std::string out;
    unsigned threads = 1;
    double tol_quad = 1e-10;
};

void add_params(CLI::App* cmd, Common& c, bool xi_required = false) {
    cmd->add_option("--a", c.a, "squeezing parameter a = 1/(4 sigma^2)")->capture_default_str();
    cmd->add_option("--h1", c.h1, "half-separation of the first double slit")->capture_default_str();
    cmd->add_option("--h2", c.h2, "half-separation of the second double slit")->capture_default_str();
    auto* xi = cmd->add_option("--xi", c.xi, "entanglement angle (radians or pi/8-style token)");
    if (xi_required) xi->required();
    else xi->capture_default_str();
}

void add_output(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    cmd->add_option("--out", c.out, "output path (default: stdout)");
    cmd->add_option("--threads", c.threads, "worker threads (0 = hardware)")->capture_default_str();
}

SetupParams make_params(const Common& c) {
    try {
        return {c.a, c.h1, c.h2, parse_angle(c.xi)};
    } catch (const ParameterError& e) {
        throw ConfigError(e.what());
    }
}

// Writes to --out or the given stream; files are opened in binary mode so
// line endings stay "\n".
class Sink {
  public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
            if (!*file_) throw ConfigError("cannot open output file '" + path + "'");
            os_ = file_.get();
        }
    }
    std::ostream& os() { return *os_; }
    void finish() {
        os_->flush();
        if (!*os_) throw ConfigError("write failed");
    }

  private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_;
};

struct Figure {
    std::string name;
    BasisPair basis;
    bool corrected;
    double a, h1, h2;
};

Figure figure_preset(const std::string& name) {
    if (name == "fig2") return {name, kKK, false, 30.0, 1.0, 2.0};
    if (name == "fig3") return {name, kKK, true, 30.0, 1.0, 2.0};
    if (name == "fig5") return {name, kXX, false, 30.0, 1.0, 1.0};
    if (name == "fig6") return {name, kKX, false, 30.0, 1.0, 1.0};
    throw ConfigError("unknown grid figure '" + name + "' (fig2, fig3, fig5, fig6)");
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"entvis: one- and two-particle visibility of entangled Gaussian double-slit states"};
    app.require_subcommand(1);

    Common g;
    std::string grid_size = "512x512";
    std::string grid_basis = "kk";
    std::string grid_figure;
    bool grid_corrected = false;
    std::string convention = "b4_xi";
    auto* grid = app.add_subcommand("grid", "sample a joint density on a grid");
    add_params(grid, g);
    add_output(grid, g);
    grid->add_option("--basis", grid_basis, "xx, kk, kx or xk")->capture_default_str();
    grid->add_option("--grid", grid_size, "samples NxM")->capture_default_str();
    grid->add_option("--figure", grid_figure, "preset: fig2 (kk), fig3 (corrected kk), fig5 (xx), fig6 (kx)");
    grid->add_flag("--corrected", grid_corrected, "corrected wavenumber distribution instead of |psi|^2");
    grid->add_option("--convention", convention, "B^4 convention of the corrected density: b4_xi or b4_quarter_pi")
        ->capture_default_str();

    Common r;
    double floor = kDefaultDetectabilityFloor;
    auto* report = app.add_subcommand("report", "visibility, corrected and correlation reports for one point");
    add_params(report, r);
    add_output(report, r);
    r.format = "json";
    report->add_option("--floor", floor, "detectability floor for |rho(k1,k2)|")->capture_default_str();
    report->add_option("--convention", convention, "B^4 convention: b4_xi or b4_quarter_pi")->capture_default_str();

    Common s;
    s.a = 2.0;
    s.h2 = 1.0;
    s.xi = "0.3";
    std::string sweep_param = "a";
    double sweep_start = 2.0;
    double sweep_stop = 8.0;
    std::size_t sweep_count = 121;
    std::string sweep_figure;
    auto* sweep = app.add_subcommand("sweep", "complementarity sums along a parameter sweep");
    add_params(sweep, s);
    add_output(sweep, s);
    sweep->add_option("--param", sweep_param, "a, xi, h1 or h2")->capture_default_str();
    sweep->add_option("--start", sweep_start)->capture_default_str();
    sweep->add_option("--stop", sweep_stop)->capture_default_str();
    sweep->add_option("--count", sweep_count)->capture_default_str();
    sweep->add_option("--figure", sweep_figure, "preset: fig4 or fig7 (a from 2 to 8, 121 points, h1 = h2 = 1)");

    Common m;
    std::string observable = "k1";
    std::string phi_str;
    std::string kind = "marginal";
    std::string method = "closed";
    std::string radon_basis = "kk";
    double offset = 0.0;
    std::size_t axis_points = 1001;
    auto* radon = app.add_subcommand("radon", "one-dimensional marginal or slice along a Radon direction");
    add_params(radon, m);
    add_output(radon, m);
    radon->add_option("--observable", observable, "k1, k2, k+, k-, s+, s-")->capture_default_str();
    radon->add_option("--phi", phi_str, "custom angle (numeric method only)");
    radon->add_option("--kind", kind, "marginal or slice")->check(CLI::IsMember({"marginal", "slice"}));
    radon->add_option("--method", method, "closed or numeric")->check(CLI::IsMember({"closed", "numeric"}));
    radon->add_option("--basis", radon_basis, "basis of the transformed density")->capture_default_str();
    radon->add_option("--offset", offset, "perpendicular offset of a slice")->capture_default_str();
    radon->add_option("--axis-points", axis_points)->capture_default_str();
    radon->add_option("--tol-quad", m.tol_quad)->capture_default_str();

    Common e;
    std::string eval_basis = "kk";
    double eu = 0.0;
    double ev = 0.0;
    auto* eval = app.add_subcommand("eval", "amplitude and density at one point");
    add_params(eval, e);
    eval->add_option("--basis", eval_basis)->capture_default_str();
    eval->add_option("--u", eu, "coordinate of subsystem 1")->capture_default_str();
    eval->add_option("--v", ev, "coordinate of subsystem 2")->capture_default_str();

    ValidationOptions vopt;
    std::string vformat = "csv";
    std::string vout;
    auto* validate = app.add_subcommand("validate", "cross-check closed forms against the quadrature oracle");
    validate->add_flag("--quick", vopt.quick, "reduced lattice");
    validate->add_option("--tol-scale", vopt.tol_scale, "multiply every tolerance (0 forces failure)")
        ->capture_default_str();
    validate->add_option("--tol-quad", vopt.tol_quad, "quadrature tolerance")->capture_default_str();
    validate->add_option("--threads", vopt.threads)->capture_default_str();
    validate->add_option("--format", vformat)->check(CLI::IsMember({"csv", "json"}));
    validate->add_option("--out", vout);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int rc = app.exit(ex, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*grid) {
            BasisPair basis = parse_basis(grid_basis);
            bool corrected = grid_corrected;
            if (!grid_figure.empty()) {
                if (grid->count("--xi") == 0) throw ConfigError("--figure requires an explicit --xi");
                const Figure f = figure_preset(grid_figure);
                basis = f.basis;
                corrected = f.corrected;
                g.a = f.a;
                g.h1 = f.h1;
                g.h2 = f.h2;
            }
            if (corrected && basis != kKK) throw ConfigError("the corrected density is defined in the kk basis");
            const SetupParams p = make_params(g);
            const auto [nu, nv] = parse_grid_size(grid_size);
            const Grid2D gr = default_grid(p, basis, nu, nv);
            std::vector<double> values;
            if (corrected) {
                const B4Convention conv = parse_convention(convention);
                values = evaluate_on_grid([&](double u, double v) { return corrected_density(p, u, v, conv); }, gr,
                                          g.threads);
            } else {
                values = evaluate_density(p, basis, gr, g.threads).values;
            }
            Sink sink(g.out, out);
            if (g.format == "csv") {
                write_grid_csv(sink.os(), gr, values);
            } else {
                nlohmann::json meta = {{"a", p.a()},
                                       {"h1", p.h1()},
                                       {"h2", p.h2()},
                                       {"xi", p.xi()},
                                       {"basis", basis_name(basis)},
                                       {"quantity", corrected ? "corrected_density" : "density"},
                                       {"truncation_std", kDomainStd}};
                if (!grid_figure.empty()) meta["figure"] = grid_figure;
                write_grid_json(sink.os(), gr, values, meta);
            }
            sink.finish();
            return 0;
        }

        if (*report) {
            const SetupParams p = make_params(r);
            const B4Convention conv = parse_convention(convention);
            nlohmann::json j;
            j["visibility"] = to_json(visibility_report(p));
            j["corrected"] = to_json(corrected_F(p, conv));
            j["correlation"] = to_json(complementarity_sums(p, floor));
            Sink sink(r.out, out);
            if (r.format == "json") {
                sink.os() << j.dump(2) << '\n';
            } else {
                sink.os() << "section,key,value\n";
                for (const auto& [section, obj] : j.items()) {
                    for (const auto& [key, val] : obj.items()) {
                        sink.os() << section << ',' << key << ',';
                        if (val.is_number_float()) sink.os() << fmt17(val.get<double>());
                        else sink.os() << (val.is_string() ? val.get<std::string>() : val.dump());
                        sink.os() << '\n';
                    }
                }
            }
            sink.finish();
            return 0;
        }

        if (*sweep) {
            if (!sweep_figure.empty()) {
                if (sweep_figure != "fig4" && sweep_figure != "fig7") {
                    throw ConfigError("unknown sweep figure '" + sweep_figure + "' (fig4, fig7)");
                }
                s.h1 = 1.0;
                s.h2 = 1.0;
                sweep_param = "a";
                sweep_start = 2.0;
                sweep_stop = 8.0;
                sweep_count = 121;
            }
            const SetupParams base = make_params(s);
            double start = sweep_start;
            double stop = sweep_stop;
            if (sweep_param == "xi" && sweep->count("--start") == 0 && sweep->count("--stop") == 0) {
                start = 0.0;
                stop = pi * static_cast<double>(sweep_count - 1) / static_cast<double>(sweep_count);
            }
            const auto rows = run_sweep(base, sweep_param, start, stop, sweep_count, s.threads);
            Sink sink(s.out, out);
            if (s.format == "csv") write_sweep_csv(sink.os(), sweep_param, rows);
            else sink.os() << sweep_json(sweep_param, rows).dump() << '\n';
            sink.finish();
            return 0;
        }

        if (*radon) {
            const SetupParams p = make_params(m);
            const BasisPair basis = parse_basis(radon_basis);
            if (axis_points < 2) throw ConfigError("--axis-points must be >= 2");
            const RadonAngle angle =
                phi_str.empty() ? RadonAngle::of(parse_observable(observable), p) : RadonAngle::custom(parse_angle(phi_str));
            const auto axis = default_axis(p, axis_points);
            Marginal1D res;
            if (kind == "slice") {
                res = slice_numeric(p, basis, angle, offset, axis);
            } else if (method == "numeric") {
                QuadratureOptions qo;
                qo.tol = m.tol_quad;
                qo.threads = m.threads;
                res = radon_numeric(p, basis, angle, axis, qo);
            } else {
                if (basis != kKK) throw ConfigError("closed-form marginals exist for the kk basis only");
                if (angle.observable() == Observable::Custom) {
                    throw ConfigError("closed-form marginals need a named observable; use --method numeric");
                }
                res = closed_form_marginal_curve(p, angle.observable(), axis);
            }
            Sink sink(m.out, out);
            if (m.format == "csv") write_marginal_csv(sink.os(), res);
            else sink.os() << to_json(res).dump() << '\n';
            sink.finish();
            return 0;
        }

        if (*eval) {
            const SetupParams p = make_params(e);
            const BasisPair basis = parse_basis(eval_basis);
            const Amplitude amp = psi(p, basis, eu, ev);
            nlohmann::json j = {{"a", p.a()},     {"h1", p.h1()},      {"h2", p.h2()},
                                {"xi", p.xi()},   {"basis", basis_name(basis)},
                                {"u", eu},        {"v", ev},
                                {"re", amp.re},   {"im", amp.im},
                                {"density", amp.norm2()}, {"b2", normalization_b2(p)}};
            out << j.dump(2) << '\n';
            return 0;
        }

        if (*validate) {
            const auto results = run_validation(vopt);
            const bool ok = all_passed(results);
            Sink sink(vout, out);
            if (vformat == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& c : results) arr.push_back(to_json(c));
                sink.os() << nlohmann::json{{"passed", ok}, {"checks", arr}}.dump(2) << '\n';
            } else {
                for (const auto& c : results) {
                    sink.os() << (c.passed ? "PASS " : "FAIL ") << c.name << ": max_dev=" << fmt17(c.max_deviation)
                              << " tol=" << fmt17(c.tolerance) << " samples=" << c.samples
                              << " time=" << fmt17(c.seconds) << "s\n";
                }
                sink.os() << (ok ? "all checks passed\n" : "validation FAILED\n");
            }
            sink.finish();
            return ok ? 0 : 1;
        }
    } catch (const ConfigError& ex) {
        err << "config error: " << ex.what() << '\n';
        return 2;
    } catch (const ParameterError& ex) {
        err << "config error: " << ex.what() << '\n';
        return 2;
    } catch (const UnsupportedBasisError& ex) {
        err << "config error: " << ex.what() << '\n';
        return 2;
    } catch (const QuadratureError& ex) {
        err << "quadrature failure: " << ex.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace entvis
