#include <entvis/corrected.hpp>

#include <entvis/errors.hpp>
#include <entvis/radon.hpp>
#include <entvis/state.hpp>

#include <cmath>
#include <limits>

namespace entvis {

namespace {

void check_sign(int sign) {
    if (sign != 1 && sign != -1) {
        throw ParameterError("sign must be +1 or -1");
    }
}

// Coefficient B^4 of the added product.
double added_b4(const StateConstants& k, B4Convention conv) {
    if (conv == B4Convention::Xi) {
        return k.b2 * k.b2;
    }
    const double bq = normalization_b2(k.params.with_xi(pi / 4.0));
    return bq * bq;
}

// Brace of the corrected slice at phases (t1, t2), common factor exp(-s^2/2a)/(a pi) removed.
double slice_brace(const StateConstants& k, int sign, double t1, double t2, double b4add) {
    const double amp = std::cos(t1) * std::cos(t2) * k.cos_xi - sign * std::sin(t1) * std::sin(t2) * k.sin_xi;
    const double c1 = std::cos(2.0 * t1);
    const double c2 = std::cos(2.0 * t2);
    const double sub = (1.0 + k.e2 * k.c + (k.c + k.e2) * c1) * (1.0 + k.e1 * k.c + (k.c + k.e1) * c2);
    const double add = (1.0 + k.e2 * c1) * (1.0 + k.e1 * c2);
    return k.b2 * amp * amp - k.b2 * k.b2 / 8.0 * sub + b4add / 8.0 * add;
}

} // namespace

std::string convention_name(B4Convention c) { return c == B4Convention::Xi ? "b4_xi" : "b4_quarter_pi"; }

B4Convention parse_convention(const std::string& s) {
    if (s == "b4_xi" || s == "xi") return B4Convention::Xi;
    if (s == "b4_quarter_pi" || s == "quarter_pi" || s == "pi/4") return B4Convention::QuarterPi;
    throw ConfigError("unknown B^4 convention '" + s + "'");
}

double corrected_density(const SetupParams& p, double k1, double k2, B4Convention conv) {
    const StateConstants k(p);
    const double joint = psi(k, kKK, k1, k2).norm2();
    const double sub = marginal_k1(p, k1) * marginal_k2(p, k2);
    const SetupParams quarter = p.with_xi(pi / 4.0);
    double add = marginal_k1(quarter, k1) * marginal_k2(quarter, k2);
    if (conv == B4Convention::Xi) {
        // the marginals at pi/4 carry B^2(pi/4) each; swap in B^2(xi)
        const double ratio = k.b2 / normalization_b2(quarter);
        add *= ratio * ratio;
    }
    return joint - sub + add;
}

double corrected_slice_spm(const SetupParams& p, int sign, double s, B4Convention conv) {
    check_sign(sign);
    const StateConstants k(p);
    const double rH = std::hypot(k.h1, k.h2);
    const double t1 = s * k.h1 * k.h1 / rH;
    const double t2 = s * k.h2 * k.h2 / rH;
    return std::exp(-s * s / (2.0 * k.a)) / (k.a * pi) * slice_brace(k, sign, t1, t2, added_b4(k, conv));
}

double CorrectedSliceEnvelopes::env_minus(double s) const {
    return std::exp(-s * s / (2.0 * a)) / (a * pi) * minus_brace;
}
double CorrectedSliceEnvelopes::env_plus(double s) const {
    return std::exp(-s * s / (2.0 * a)) / (a * pi) * plus_brace;
}
double CorrectedSliceEnvelopes::env_zero(double s) const {
    return std::exp(-s * s / (2.0 * a)) / (a * pi) * zero_brace;
}
double CorrectedSliceEnvelopes::active_upper_brace() const {
    return active_pair == ActivePair::PlusMinus ? plus_brace : zero_brace;
}

CorrectedSliceEnvelopes corrected_envelopes(const SetupParams& p, int sign, B4Convention conv) {
    check_sign(sign);
    const StateConstants k(p);
    const double b4add = added_b4(k, conv);
    CorrectedSliceEnvelopes env;
    env.sign = sign;
    env.a = k.a;
    // slice_brace at the pinned phases, with cos(pi/4)^2 etc. taken exactly
    const double sub = k.b2 * k.b2 / 8.0;
    const double common = -sub * (1.0 + k.e2 * k.c) * (1.0 + k.e1 * k.c) + b4add / 8.0;
    env.minus_brace = k.b2 * (1.0 - sign * k.s) / 4.0 + common;
    env.plus_brace = k.b2 * (1.0 + sign * k.s) / 4.0 + common;
    env.zero_brace = k.b2 * k.sin_xi * k.sin_xi -
                     sub * (1.0 - k.c) * (1.0 - k.e2) * (1.0 - k.c) * (1.0 - k.e1) +
                     b4add / 8.0 * (1.0 - k.e2) * (1.0 - k.e1);
    env.active_pair = p.symmetric() ? ActivePair::ZeroMinus : ActivePair::PlusMinus;
    return env;
}

CorrectedReport corrected_F(const SetupParams& p, B4Convention conv) {
    CorrectedReport r{p, 0.0, 0.0, 0.0, p.symmetric(), conv, 0.0};
    double v[2] = {0.0, 0.0};
    for (int i = 0; i < 2; ++i) {
        const CorrectedSliceEnvelopes env = corrected_envelopes(p, i == 0 ? 1 : -1, conv);
        const double up = env.active_upper_brace();
        const double sum = up + env.minus_brace;
        if (!(sum != 0.0)) {
            throw ParameterError("corrected envelope sum vanishes; visibility undefined");
        }
        v[i] = std::abs((up - env.minus_brace) / sum);
    }
    r.v_splus = v[0];
    r.v_sminus = v[1];
    r.F = std::max(v[0], v[1]);
    const double rH = std::hypot(p.h1(), p.h2());
    r.eval_s = (pi / 4.0) * rH / (p.h1() * p.h1());
    return r;
}

double corrected_F_deviation(const SetupParams& p, B4Convention conv) {
    const StateConstants k(p);
    if (conv != B4Convention::Xi || p.symmetric()) {
        return corrected_F(p, conv).F - std::abs(k.s);
    }
    // env-+ = B^2 (1 -+ s)/4 - B^4 (P - 1)/8 with P - 1 = c(e1 + e2) + e1 e2 c^2,
    // so F = |s| / |1 - 4K| with 4K = B^2 (P - 1) / 2
    const double k4 = k.b2 * (k.c * (k.e1 + k.e2) + k.e1 * k.e2 * k.c * k.c) / 2.0;
    const double as = std::abs(k.s);
    if (1.0 - k4 > 0.0) {
        return as * k4 / (1.0 - k4);
    }
    return corrected_F(p, conv).F - as;
}

double envelope_regime_crossing(const SetupParams& p, int sign, double s_max, std::size_t n, B4Convention conv) {
    check_sign(sign);
    if (n < 2 || !(s_max > 0.0)) {
        throw ConfigError("regime crossing scan needs n >= 2 and s_max > 0");
    }
    const CorrectedSliceEnvelopes env = corrected_envelopes(p, sign, conv);
    const double lo = std::min(env.zero_brace, env.minus_brace);
    const double hi = std::max(env.zero_brace, env.minus_brace);
    const double margin = 1e-9 * std::max(std::abs(lo), std::abs(hi));
    const StateConstants k(p);
    const double b4add = added_b4(k, conv);
    const double rH = std::hypot(k.h1, k.h2);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = s_max * static_cast<double>(i) / static_cast<double>(n - 1);
        const double b = slice_brace(k, sign, s * k.h1 * k.h1 / rH, s * k.h2 * k.h2 / rH, b4add);
        if (b > hi + margin || b < lo - margin) {
            return s;
        }
    }
    return std::numeric_limits<double>::quiet_NaN();
}

} // namespace entvis
