#pragma once

#include <entvis/params.hpp>
#include <entvis/radon.hpp>

#include <string>

namespace entvis {

/**
 * Lower and upper envelope of a closed-form marginal, obtained by pinning its
 * oscillating phases to fixed values. Both envelopes share the factor
 * prefactor * exp(-s^2 / 2a) and differ only in the constant brace, so
 * their contrast does not depend on s.
 */
struct EnvelopeSet {
    Observable observable = Observable::K1;
    double a = 1.0;
    double prefactor = 0.0;
    double minus_brace = 0.0;
    double plus_brace = 0.0;
    std::string pins; ///< which phases were pinned to what

    [[nodiscard]] double env_minus(double s) const;
    [[nodiscard]] double env_plus(double s) const;
};

/// Envelopes of one of the six named marginals.
EnvelopeSet envelopes(const SetupParams& p, Observable o);

/// |(env+ - env-) / (env+ + env-)|. Throws ParameterError when the sum vanishes.
double visibility_of(const EnvelopeSet& env);
/// Visibility of a named marginal.
double visibility(const SetupParams& p, Observable o);

/// V = max[V(k1), V(k2)], evaluated as |cos 2xi| + deviation.
double single_particle_V(const SetupParams& p);
/// W = |V(k+) - V(k-)|.
double two_particle_W(const SetupParams& p);
/// D = |V(s+) - V(s-)|, evaluated as |sin 2xi| + deviation.
double two_particle_D(const SetupParams& p);

/**
 * Deviations of V and D from their infinite-squeezing limits |cos 2xi| and
 * |sin 2xi|, in forms free of cancellation so they keep full relative
 * accuracy far below double epsilon.
 */
struct LimitDeviations {
    double v_minus_abs_cos = 0.0;
    double d_minus_abs_sin = 0.0;
    double epsilon = 0.0; ///< 1 - V^2 - D^2
};
LimitDeviations limit_deviations(const SetupParams& p);

/// V(k1) - |cos 2xi| for the marginal whose fringe factor is exp(-2 a h_other^2).
/// Takes s = sin 2xi separately: near |c| = 1 the product (1 - c)(1 + c) rounds to 0.
double v_single_deviation(double e_other, double c, double s);

struct EpsilonBound {
    double epsilon;
    double bound; ///< 2 exp(-2 a h1^2 h2^2 / (h1^2 + h2^2))
};
EpsilonBound epsilon_and_bound(const SetupParams& p);

struct VisibilityReport {
    SetupParams params;
    double v_k1, v_k2, v_kplus, v_kminus, v_splus, v_sminus;
    double V, W, D;
    double epsilon, bound;
    bool regime_warning;
};
VisibilityReport visibility_report(const SetupParams& p);

/// Result of checking a marginal against its envelopes at the points where all
/// pinned phases are realised at once.
struct PinCheck {
    double max_deviation = 0.0; ///< max |P(s) - env(s)| over realisable pin points
    std::size_t points = 0;     ///< number of realisable pin points found in the domain
    bool realizable = false;    ///< false if no point realises every pin simultaneously
};
/// which = -1 checks env-, +1 checks env+.
PinCheck envelope_pin_check(const SetupParams& p, Observable o, int which);

} // namespace entvis
