#include <entvis/visibility.hpp>

#include <entvis/density.hpp>
#include <entvis/errors.hpp>
#include <entvis/state.hpp>

#include <cmath>
#include <vector>

namespace entvis {

namespace {

struct SPMConstants {
    double E;  // exp(-2 a g), g = h1^2 h2^2 / (h1^2 + h2^2)
    double E4; // exp(-8 a g)
};

SPMConstants spm_constants(const SetupParams& p) {
    const double h1s = p.h1() * p.h1();
    const double h2s = p.h2() * p.h2();
    const double g = h1s * h2s / (h1s + h2s);
    return {std::exp(-2.0 * p.a() * g), std::exp(-8.0 * p.a() * g)};
}

} // namespace

double EnvelopeSet::env_minus(double s) const { return prefactor * std::exp(-s * s / (2.0 * a)) * minus_brace; }
double EnvelopeSet::env_plus(double s) const { return prefactor * std::exp(-s * s / (2.0 * a)) * plus_brace; }

EnvelopeSet envelopes(const SetupParams& p, Observable o) {
    const StateConstants k(p);
    EnvelopeSet env;
    env.observable = o;
    env.a = k.a;
    switch (o) {
    case Observable::K1:
    case Observable::K2: {
        // cos(2 h k) -> -1 (h k = pi/2) and +1 (h k = pi)
        const double e = o == Observable::K1 ? k.e2 : k.e1;
        env.prefactor = k.b2 / (2.0 * std::sqrt(2.0 * k.a * pi));
        env.minus_brace = (1.0 - k.c) * (1.0 - e);
        env.plus_brace = (1.0 + k.c) * (1.0 + e);
        env.pins = o == Observable::K1 ? "h1*k1->pi/2 | h1*k1->pi" : "h2*k2->pi/2 | h2*k2->pi";
        break;
    }
    case Observable::KPlus:
    case Observable::KMinus: {
        // sqrt2 h1 k, sqrt2 h2 k -> pi/2 (cos of the sum = -1, of the difference = +1)
        // and -> 2 pi (all cosines = +1)
        const double sg = (o == Observable::KPlus ? 1.0 : -1.0) * k.s;
        const double esum = std::exp(-k.a * (k.h1 + k.h2) * (k.h1 + k.h2));
        const double ediff = std::exp(-k.a * (k.h1 - k.h2) * (k.h1 - k.h2));
        const double eh = std::exp(-k.a * k.h1 * k.h1) + std::exp(-k.a * k.h2 * k.h2);
        env.prefactor = k.b2 / (4.0 * std::sqrt(2.0 * k.a * pi));
        env.minus_brace = 2.0 + esum * (1.0 - sg) - ediff * (1.0 + sg);
        env.plus_brace = 2.0 + 2.0 * eh * k.c + esum * (1.0 - sg) + ediff * (1.0 + sg);
        env.pins = "sqrt2*h1*k,sqrt2*h2*k->pi/2 | ->2pi";
        break;
    }
    case Observable::SPlus:
    case Observable::SMinus: {
        // theta_i = s h_i^2 / sqrt(h1^2+h2^2) -> pi/4 and -> pi
        const double sg = (o == Observable::SPlus ? 1.0 : -1.0) * k.s;
        const SPMConstants q = spm_constants(p);
        env.prefactor = k.b2 / (4.0 * std::sqrt(2.0 * k.a * pi));
        env.minus_brace = (1.0 - sg) * (1.0 + q.E4);
        env.plus_brace = 2.0 + (1.0 + sg) + q.E4 * (1.0 - sg) + 4.0 * q.E * k.c;
        env.pins = "s*h1^2/sqrt(H),s*h2^2/sqrt(H)->pi/4 | ->pi";
        break;
    }
    case Observable::Custom:
        throw UnsupportedBasisError("no envelopes for a custom Radon angle");
    }
    return env;
}

double visibility_of(const EnvelopeSet& env) {
    const double sum = env.plus_brace + env.minus_brace;
    if (!(sum != 0.0) || !std::isfinite(sum)) {
        throw ParameterError("envelope sum vanishes; visibility undefined");
    }
    return std::abs((env.plus_brace - env.minus_brace) / sum);
}

double visibility(const SetupParams& p, Observable o) { return visibility_of(envelopes(p, o)); }

double v_single_deviation(double e, double c, double s) {
    const double den = 1.0 + e * c;
    const double s2 = s * s;
    if (c >= 0.0) {
        return e * s2 / den;
    }
    if (e + c <= 0.0) {
        return -e * s2 / den;
    }
    return (e + 2.0 * c + e * c * c) / den;
}

namespace {

double envelope_D(const SetupParams& p) {
    return std::abs(visibility(p, Observable::SPlus) - visibility(p, Observable::SMinus));
}

double v_deviation(const StateConstants& k) {
    return std::max(v_single_deviation(k.e2, k.c, k.s), v_single_deviation(k.e1, k.c, k.s));
}

// D - |s| with V(s+-) = |A +- s| / (d + E4 (1 -+ s)), A = 1 + 2 E c, d = A + 1
double d_deviation(const SetupParams& p, const StateConstants& k) {
    const SPMConstants q = spm_constants(p);
    const double c = k.c;
    const double as = std::abs(k.s);
    const double Ec = q.E * c;
    const double A = 1.0 + 2.0 * Ec;
    const double d = 2.0 + 2.0 * Ec;
    const double Dp = d + q.E4 * (1.0 - k.s);
    const double Dm = d + q.E4 * (1.0 + k.s);
    const double den = Dp * Dm;
    // t = 1 - |s| = c^2 / (1 + |s|); A - |s| = 2 E c + t decides the branch,
    // since A and |s| can both round to 1 while their difference has a sign
    const double t = c * c / (1.0 + as);
    if (A > 0.0 && 2.0 * Ec + t >= 0.0) {
        // A + s and A - s share a sign
        return -as * (2.0 * Ec * d + q.E4 * q.E4 * c * c) / den;
    }
    if (A > 0.0) {
        // opposite signs
        return -(-2.0 * d * (Ec + t * (1.0 + Ec)) - 2.0 * q.E4 * t * (2.0 * Ec + t) + as * q.E4 * q.E4 * c * c) / den;
    }
    return envelope_D(p) - as;
}

} // namespace

// V and D are assembled as |c| + deviation and |s| + deviation: the same
// values as the envelope contrasts, without the rounding of plus - minus, so
// they land on |cos 2xi| and |sin 2xi| exactly once the deviations underflow.
double single_particle_V(const SetupParams& p) {
    const StateConstants k(p);
    return std::abs(k.c) + v_deviation(k);
}

double two_particle_W(const SetupParams& p) {
    return std::abs(visibility(p, Observable::KPlus) - visibility(p, Observable::KMinus));
}

double two_particle_D(const SetupParams& p) {
    const StateConstants k(p);
    return std::abs(k.s) + d_deviation(p, k);
}

LimitDeviations limit_deviations(const SetupParams& p) {
    const StateConstants k(p);
    const double ac = std::abs(k.c);
    const double as = std::abs(k.s);
    LimitDeviations out;
    out.v_minus_abs_cos = v_deviation(k);
    out.d_minus_abs_sin = d_deviation(p, k);
    const double V = ac + out.v_minus_abs_cos;
    const double D = as + out.d_minus_abs_sin;
    // 1 - V^2 - D^2 with cos^2 + sin^2 = 1 taken exactly
    out.epsilon = -out.v_minus_abs_cos * (V + ac) - out.d_minus_abs_sin * (D + as);
    return out;
}

EpsilonBound epsilon_and_bound(const SetupParams& p) {
    return {limit_deviations(p).epsilon, 2.0 * spm_constants(p).E};
}

VisibilityReport visibility_report(const SetupParams& p) {
    VisibilityReport r{p, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, p.regime_warning()};
    r.v_k1 = visibility(p, Observable::K1);
    r.v_k2 = visibility(p, Observable::K2);
    r.v_kplus = visibility(p, Observable::KPlus);
    r.v_kminus = visibility(p, Observable::KMinus);
    r.v_splus = visibility(p, Observable::SPlus);
    r.v_sminus = visibility(p, Observable::SMinus);
    r.V = single_particle_V(p);
    r.W = std::abs(r.v_kplus - r.v_kminus);
    r.D = two_particle_D(p);
    const EpsilonBound eb = epsilon_and_bound(p);
    r.epsilon = eb.epsilon;
    r.bound = eb.bound;
    return r;
}

namespace {

// Phases theta_i = omega_i * s must all sit at +pinned or all at -pinned,
// modulo the period of the marginal's oscillating terms.
struct PinSpec {
    std::vector<double> omega;
    double pinned;
    double period;
};

PinSpec pin_spec(const SetupParams& p, Observable o, int which) {
    const bool lower = which < 0;
    switch (o) {
    case Observable::K1: return {{p.h1()}, lower ? pi / 2.0 : pi, pi};
    case Observable::K2: return {{p.h2()}, lower ? pi / 2.0 : pi, pi};
    case Observable::KPlus:
    case Observable::KMinus: {
        const double r2 = std::sqrt(2.0);
        return {{r2 * p.h1(), r2 * p.h2()}, lower ? pi / 2.0 : 2.0 * pi, 2.0 * pi};
    }
    case Observable::SPlus:
    case Observable::SMinus: {
        const double rH = std::hypot(p.h1(), p.h2());
        return {{p.h1() * p.h1() / rH, p.h2() * p.h2() / rH}, lower ? pi / 4.0 : pi, pi};
    }
    case Observable::Custom: break;
    }
    throw UnsupportedBasisError("no envelopes for a custom Radon angle");
}

bool phase_at(double theta, double target, double period) {
    const double r = std::remainder(theta - target, period);
    return std::abs(r) <= 1e-9 * std::max(1.0, std::abs(theta));
}

} // namespace

PinCheck envelope_pin_check(const SetupParams& p, Observable o, int which) {
    const PinSpec spec = pin_spec(p, o, which);
    const EnvelopeSet env = envelopes(p, o);
    const double smax = default_domain(p, Basis::Wavenumber, 1).second;
    PinCheck out;
    const double w0 = spec.omega[0];
    const long nmax = static_cast<long>(std::ceil(smax * w0 / spec.period)) + 1;
    // pins at a multiple of half the period give the same points for both signs
    const bool self_mirrored = std::abs(std::remainder(2.0 * spec.pinned, spec.period)) < 1e-12;
    for (int sigma : {+1, -1}) {
        if (sigma < 0 && self_mirrored) {
            break;
        }
        for (long n = -nmax; n <= nmax; ++n) {
            const double theta0 = sigma * spec.pinned + static_cast<double>(n) * spec.period;
            const double s = theta0 / w0;
            if (std::abs(s) > smax) {
                continue;
            }
            bool ok = true;
            for (std::size_t i = 1; i < spec.omega.size(); ++i) {
                ok = ok && phase_at(spec.omega[i] * s, sigma * spec.pinned, spec.period);
            }
            if (!ok) {
                continue;
            }
            const double pv = closed_form_marginal(p, o, s);
            const double ev = which < 0 ? env.env_minus(s) : env.env_plus(s);
            out.max_deviation = std::max(out.max_deviation, std::abs(pv - ev));
            ++out.points;
        }
    }
    out.realizable = out.points > 0;
    return out;
}

} // namespace entvis
