#include <entvis/correlation.hpp>

#include <entvis/errors.hpp>
#include <entvis/state.hpp>
#include <entvis/visibility.hpp>

#include <cmath>

namespace entvis {

namespace {

// Var(x_i) = B^2/(8a) Q_i, Var(k_i) = a B^2/2 K_i, each with its value at
// cos 2xi = 0 (the xi = pi/4 normaliser) and the difference Q0 - Q.
struct Shape {
    double q1, q2, q1_0, q2_0, dq1, dq2; // position
    double k1, k2, k1_0, k2_0, dk1, dk2; // wavenumber
};

Shape shape(const StateConstants& k) {
    const double a = k.a;
    const double f1 = 4.0 * a * k.h1 * k.h1;
    const double f2 = 4.0 * a * k.h2 * k.h2;
    const double e1 = k.e1;
    const double e2 = k.e2;
    const double c = k.c;
    Shape s{};
    s.q1 = e1 * e2 + e1 * c + (1.0 + e2 * c) * (1.0 + f1);
    s.q2 = e1 * e2 + e2 * c + (1.0 + e1 * c) * (1.0 + f2);
    s.q1_0 = e1 * e2 + 1.0 + f1;
    s.q2_0 = e1 * e2 + 1.0 + f2;
    s.dq1 = -c * (e1 + e2 * (1.0 + f1));
    s.dq2 = -c * (e2 + e1 * (1.0 + f2));
    s.k1 = 1.0 + e2 * c + e1 * (e2 + c) * (1.0 - f1);
    s.k2 = 1.0 + e1 * c + e2 * (e1 + c) * (1.0 - f2);
    s.k1_0 = 1.0 + e1 * e2 * (1.0 - f1);
    s.k2_0 = 1.0 + e1 * e2 * (1.0 - f2);
    s.dk1 = -c * (e2 + e1 * (1.0 - f1));
    s.dk2 = -c * (e1 + e2 * (1.0 - f2));
    return s;
}

// sqrt(r) - 1 for r = (x1_0 x2_0) / (x1 x2), given x_0 - x.
double sqrt_ratio_minus_one(double x1, double x2, double x1_0, double x2_0, double d1, double d2) {
    const double num = d1 * x2_0 + x1 * d2; // x1_0 x2_0 - x1 x2
    const double den = x1 * x2;
    const double r = x1_0 * x2_0 / den;
    return (num / den) / (std::sqrt(r) + 1.0);
}

} // namespace

MomentSet moments_x(const SetupParams& p) {
    const StateConstants k(p);
    const Shape sh = shape(k);
    MomentSet m;
    m.basis = MomentBasis::Position;
    m.cov = k.b2 / 2.0 * k.h1 * k.h2 * k.s;
    m.var1 = k.b2 / (8.0 * k.a) * sh.q1;
    m.var2 = k.b2 / (8.0 * k.a) * sh.q2;
    return m;
}

MomentSet moments_k(const SetupParams& p) {
    const StateConstants k(p);
    const Shape sh = shape(k);
    MomentSet m;
    m.basis = MomentBasis::Wavenumber;
    m.cov = -2.0 * k.a * k.a * k.b2 * k.e1 * k.e2 * k.h1 * k.h2 * k.s;
    m.var1 = 0.5 * k.a * k.b2 * sh.k1;
    m.var2 = 0.5 * k.a * k.b2 * sh.k2;
    return m;
}

double rho_x(const SetupParams& p) {
    const StateConstants k(p);
    const Shape sh = shape(k);
    return 4.0 * k.a * k.h1 * k.h2 * k.s / std::sqrt(sh.q1 * sh.q2);
}

RhoK rho_k(const SetupParams& p) {
    const StateConstants k(p);
    const Shape sh = shape(k);
    RhoK r{};
    r.sign = k.s > 0.0 ? -1 : (k.s < 0.0 ? 1 : 0);
    const double mag = 4.0 * k.a * k.h1 * k.h2 * std::abs(k.s) / std::sqrt(sh.k1 * sh.k2);
    const double expo = -2.0 * k.a * (k.h1 * k.h1 + k.h2 * k.h2);
    r.log10_abs = r.sign == 0 ? -HUGE_VAL : std::log10(mag) + expo / std::log(10.0);
    r.value = r.sign * mag * std::exp(expo);
    return r;
}

double normalized_R(const SetupParams& p) {
    const StateConstants k(p);
    const Shape sh = shape(k);
    return std::abs(k.s) * std::sqrt(sh.q1_0 * sh.q2_0 / (sh.q1 * sh.q2));
}

double normalized_S(const SetupParams& p) {
    const StateConstants k(p);
    const Shape sh = shape(k);
    return std::abs(k.s) * std::sqrt(sh.k1_0 * sh.k2_0 / (sh.k1 * sh.k2));
}

double R_deviation(const SetupParams& p) {
    const StateConstants k(p);
    const Shape sh = shape(k);
    return std::abs(k.s) * sqrt_ratio_minus_one(sh.q1, sh.q2, sh.q1_0, sh.q2_0, sh.dq1, sh.dq2);
}

double S_deviation(const SetupParams& p) {
    const StateConstants k(p);
    const Shape sh = shape(k);
    return std::abs(k.s) * sqrt_ratio_minus_one(sh.k1, sh.k2, sh.k1_0, sh.k2_0, sh.dk1, sh.dk2);
}

double marginal_k1_mixed(const SetupParams& p, double k1) {
    // int C(x)^2 dx = sqrt(pi/2a) (1 + e2) / 2 and int S(x)^2 dx = sqrt(pi/2a) (1 - e2) / 2
    // for the even/odd slit-pair profiles of subsystem 2
    const StateConstants k(p);
    const double t = k.h1 * k1;
    const double ct = std::cos(t);
    const double st = std::sin(t);
    return k.b2 * std::exp(-k1 * k1 / (2.0 * k.a)) / std::sqrt(2.0 * k.a * pi) *
           (ct * ct * k.cos_xi * k.cos_xi * (1.0 + k.e2) + st * st * k.sin_xi * k.sin_xi * (1.0 - k.e2));
}

double vr_deficit(const SetupParams& p) {
    const StateConstants k(p);
    const LimitDeviations dev = limit_deviations(p);
    const double ac = std::abs(k.c);
    const double as = std::abs(k.s);
    const double dv = dev.v_minus_abs_cos;
    const double dr = R_deviation(p);
    return -dv * (2.0 * ac + dv) - dr * (2.0 * as + dr);
}

double vs_deficit(const SetupParams& p) {
    const StateConstants k(p);
    const LimitDeviations dev = limit_deviations(p);
    const double ac = std::abs(k.c);
    const double as = std::abs(k.s);
    const double dv = dev.v_minus_abs_cos;
    const double ds = S_deviation(p);
    return -dv * (2.0 * ac + dv) - ds * (2.0 * as + ds);
}

PracticalityDiagnostic practicality_diagnostic(const SetupParams& p, double floor) {
    if (!(floor >= 0.0)) {
        throw ParameterError("detectability floor must be >= 0");
    }
    const RhoK r = rho_k(p.with_xi(pi / 4.0));
    PracticalityDiagnostic d{};
    d.abs_rho_k_quarter_pi = std::abs(r.value);
    d.log10_abs_rho_k_quarter_pi = r.log10_abs;
    d.floor = floor;
    d.flagged = floor > 0.0 && r.log10_abs < std::log10(floor);
    return d;
}

CorrelationReport complementarity_sums(const SetupParams& p, double floor) {
    const double V = single_particle_V(p);
    CorrelationReport r{p, rho_x(p), rho_k(p), normalized_R(p), normalized_S(p), 0, 0, 0, 0, false};
    r.V2_plus_R2 = 1.0 - vr_deficit(p);
    r.V2_plus_S2 = 1.0 - vs_deficit(p);
    r.rhox2_plus_V2 = r.rho_x * r.rho_x + V * V;
    r.rhok2_plus_V2 = r.rho_k.value * r.rho_k.value + V * V;
    r.detectability_flag = practicality_diagnostic(p, floor).flagged;
    return r;
}

} // namespace entvis
