#include <entvis/radon.hpp>

#include <entvis/density.hpp>
#include <entvis/errors.hpp>

#include <cmath>

namespace entvis {

std::string observable_name(Observable o) {
    switch (o) {
    case Observable::K1: return "k1";
    case Observable::K2: return "k2";
    case Observable::KPlus: return "k+";
    case Observable::KMinus: return "k-";
    case Observable::SPlus: return "s+";
    case Observable::SMinus: return "s-";
    case Observable::Custom: return "custom";
    }
    return "custom";
}

Observable parse_observable(const std::string& s) {
    if (s == "k1") return Observable::K1;
    if (s == "k2") return Observable::K2;
    if (s == "k+" || s == "kplus") return Observable::KPlus;
    if (s == "k-" || s == "kminus") return Observable::KMinus;
    if (s == "s+" || s == "splus") return Observable::SPlus;
    if (s == "s-" || s == "sminus") return Observable::SMinus;
    throw ConfigError("unknown observable '" + s + "'");
}

RadonAngle::RadonAngle(double phi, Observable o) : phi_(phi), cos_(std::cos(phi)), sin_(std::sin(phi)), obs_(o) {}

RadonAngle RadonAngle::s_plus(const SetupParams& p) {
    const double n = std::hypot(p.h1(), p.h2());
    return {std::atan2(p.h2(), p.h1()), p.h1() / n, p.h2() / n, Observable::SPlus};
}

RadonAngle RadonAngle::s_minus(const SetupParams& p) {
    const double n = std::hypot(p.h1(), p.h2());
    return {-std::atan2(p.h2(), p.h1()), p.h1() / n, -p.h2() / n, Observable::SMinus};
}

RadonAngle RadonAngle::custom(double phi) {
    if (!std::isfinite(phi)) {
        throw ParameterError("Radon angle must be finite");
    }
    double r = std::remainder(phi, pi); // [-pi/2, pi/2]
    if (r <= -pi / 2.0) {
        r += pi;
    }
    return {r, Observable::Custom};
}

RadonAngle RadonAngle::of(Observable o, const SetupParams& p) {
    switch (o) {
    case Observable::K1: return k1();
    case Observable::K2: return k2();
    case Observable::KPlus: return k_plus();
    case Observable::KMinus: return k_minus();
    case Observable::SPlus: return s_plus(p);
    case Observable::SMinus: return s_minus(p);
    case Observable::Custom: break;
    }
    throw ConfigError("custom observables need an explicit angle");
}

double Marginal1D::integral() const {
    double acc = 0.0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        acc += 0.5 * (values[i] + values[i - 1]) * (s[i] - s[i - 1]);
    }
    return acc;
}

std::vector<double> default_axis(const SetupParams& p, std::size_t n) {
    if (n < 2) {
        throw ConfigError("axis needs at least 2 points");
    }
    const auto [lo, hi] = default_domain(p, Basis::Wavenumber, 1);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

namespace {

struct LineSetup {
    double half;  // half-length of the integration variable
    int panels;
};

LineSetup line_setup(const SetupParams& p, BasisPair basis, const RadonAngle& angle) {
    const auto d1 = default_domain(p, basis.first, 1);
    const auto d2 = default_domain(p, basis.second, 2);
    const double half = std::sqrt(2.0) * std::max(d1.second, d2.second);
    double width = 0.0;
    if (basis == kKK) {
        // fastest fringe along the line: cos(2 h1 u -+ 2 h2 v) with
        // du = -sin(phi) dt, dv = cos(phi) dt
        const double omega = 2.0 * (p.h1() * std::abs(angle.sin_phi()) + p.h2() * std::abs(angle.cos_phi()));
        width = std::min(4.0 * pi / omega, 3.0 * std::sqrt(p.a()));
    } else {
        width = std::min(panel_width(p, basis.first, 1), panel_width(p, basis.second, 2));
    }
    return {half, panels_for(2.0 * half, width)};
}

} // namespace

double radon_line(const SetupParams& p, BasisPair basis, const RadonAngle& angle, double s,
                  const QuadratureOptions& opts) {
    const DensityEvaluator f(p, basis);
    const LineSetup ls = line_setup(p, basis, angle);
    const double c = angle.cos_phi();
    const double sn = angle.sin_phi();
    auto line = [&](double t) { return f(s * c - t * sn, s * sn + t * c); };
    return integrate_1d<double>(line, -ls.half, ls.half, ls.panels, opts.tol, opts.max_refinements);
}

Marginal1D radon_numeric(const SetupParams& p, BasisPair basis, const RadonAngle& angle,
                         const std::vector<double>& s_axis, const QuadratureOptions& opts) {
    const DensityEvaluator f(p, basis);
    const LineSetup ls = line_setup(p, basis, angle);
    const double c = angle.cos_phi();
    const double sn = angle.sin_phi();
    Marginal1D out;
    out.observable = angle.observable();
    out.phi = angle.phi();
    out.kind = DistributionKind::Marginal;
    out.s = s_axis;
    out.values.resize(s_axis.size());
    parallel_for(s_axis.size(), opts.threads, [&](std::size_t i) {
        const double s = s_axis[i];
        auto line = [&](double t) { return f(s * c - t * sn, s * sn + t * c); };
        out.values[i] = integrate_1d<double>(line, -ls.half, ls.half, ls.panels, opts.tol, opts.max_refinements);
    });
    return out;
}

double marginal_k1(const SetupParams& p, double k1) {
    const StateConstants k(p);
    const double f = std::cos(2.0 * p.h1() * k1);
    return k.b2 * std::exp(-k1 * k1 / (2.0 * k.a)) / (2.0 * std::sqrt(2.0 * k.a * pi)) *
           (k.e2 * (f + k.c) + 1.0 + f * k.c);
}

double marginal_k2(const SetupParams& p, double k2) {
    const StateConstants k(p);
    const double f = std::cos(2.0 * p.h2() * k2);
    return k.b2 * std::exp(-k2 * k2 / (2.0 * k.a)) / (2.0 * std::sqrt(2.0 * k.a * pi)) *
           (k.e1 * (f + k.c) + 1.0 + f * k.c);
}

double marginal_kpm(const SetupParams& p, int sign, double k) {
    if (sign != 1 && sign != -1) {
        throw ParameterError("sign must be +1 or -1");
    }
    const StateConstants q(p);
    const double a = q.a;
    const double h1 = q.h1;
    const double h2 = q.h2;
    const double r2 = std::sqrt(2.0);
    const double sg = sign * q.s;
    const double brace = 2.0 +
                         2.0 * (std::exp(-a * h1 * h1) * std::cos(r2 * h1 * k) +
                                std::exp(-a * h2 * h2) * std::cos(r2 * h2 * k)) *
                             q.c +
                         std::exp(-a * (h1 + h2) * (h1 + h2)) * std::cos(r2 * (h1 - h2) * k) * (1.0 - sg) +
                         std::exp(-a * (h1 - h2) * (h1 - h2)) * std::cos(r2 * (h1 + h2) * k) * (1.0 + sg);
    return q.b2 * std::exp(-k * k / (2.0 * a)) / (4.0 * std::sqrt(2.0 * a * pi)) * brace;
}

double marginal_spm(const SetupParams& p, int sign, double s) {
    if (sign != 1 && sign != -1) {
        throw ParameterError("sign must be +1 or -1");
    }
    const StateConstants q(p);
    const double a = q.a;
    const double H = q.h1 * q.h1 + q.h2 * q.h2;
    const double rH = std::sqrt(H);
    const double g = q.h1 * q.h1 * q.h2 * q.h2 / H;
    const double sg = sign * q.s;
    const double brace = 2.0 + std::cos(2.0 * s * H / rH) * (1.0 + sg) +
                         std::exp(-8.0 * a * g) * std::cos(2.0 * s * (q.h1 * q.h1 - q.h2 * q.h2) / rH) * (1.0 - sg) +
                         2.0 * std::exp(-2.0 * a * g) *
                             (std::cos(2.0 * s * q.h1 * q.h1 / rH) + std::cos(2.0 * s * q.h2 * q.h2 / rH)) * q.c;
    return q.b2 * std::exp(-s * s / (2.0 * a)) / (4.0 * std::sqrt(2.0 * a * pi)) * brace;
}

double closed_form_marginal(const SetupParams& p, Observable o, double s) {
    switch (o) {
    case Observable::K1: return marginal_k1(p, s);
    case Observable::K2: return marginal_k2(p, s);
    case Observable::KPlus: return marginal_kpm(p, +1, s);
    case Observable::KMinus: return marginal_kpm(p, -1, s);
    case Observable::SPlus: return marginal_spm(p, +1, s);
    case Observable::SMinus: return marginal_spm(p, -1, s);
    case Observable::Custom: break;
    }
    throw UnsupportedBasisError("no closed form for a custom Radon angle");
}

Marginal1D closed_form_marginal_curve(const SetupParams& p, Observable o, const std::vector<double>& s_axis) {
    Marginal1D out;
    out.observable = o;
    out.phi = RadonAngle::of(o, p).phi();
    out.s = s_axis;
    out.values.reserve(s_axis.size());
    for (double s : s_axis) {
        out.values.push_back(closed_form_marginal(p, o, s));
    }
    return out;
}

Marginal1D slice_numeric(const SetupParams& p, BasisPair basis, const RadonAngle& angle, double offset,
                         const std::vector<double>& s_axis) {
    const DensityEvaluator f(p, basis);
    const double c = angle.cos_phi();
    const double sn = angle.sin_phi();
    Marginal1D out;
    out.observable = angle.observable();
    out.phi = angle.phi();
    out.kind = DistributionKind::Slice;
    out.offset = offset;
    out.s = s_axis;
    out.values.reserve(s_axis.size());
    for (double s : s_axis) {
        out.values.push_back(f(s * c - offset * sn, s * sn + offset * c));
    }
    return out;
}

} // namespace entvis
