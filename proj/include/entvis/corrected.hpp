#pragma once

#include <entvis/params.hpp>

#include <string>
#include <vector>

namespace entvis {

/// Coefficient of the added product term of the corrected distribution:
/// Xi uses B^4(xi) like the subtracted term, QuarterPi uses B^4(xi = pi/4).
enum class B4Convention { Xi, QuarterPi };

std::string convention_name(B4Convention c);
B4Convention parse_convention(const std::string& s);

/// |psi(k1,k2)|^2 - P(k1; xi) P(k2; xi) + P(k1; pi/4) P(k2; pi/4), the last
/// product carrying the coefficient selected by `conv`.
double corrected_density(const SetupParams& p, double k1, double k2, B4Convention conv = B4Convention::Xi);

/// Closed-form slice of the corrected distribution through the origin along
/// s+ (sign = +1) or s- (sign = -1).
double corrected_slice_spm(const SetupParams& p, int sign, double s, B4Convention conv = B4Convention::Xi);

enum class ActivePair { PlusMinus, ZeroMinus };

/**
 * The three envelopes of a corrected slice. With theta_i = s h_i^2 / sqrt(h1^2+h2^2):
 * env- pins (theta1, theta2) -> (pi/4, pi/4), env+ -> (pi/4, -pi/4),
 * env0 -> (pi/2, pi/2). All share the factor exp(-s^2/2a) / (a pi).
 */
struct CorrectedSliceEnvelopes {
    int sign = 1;
    double a = 1.0;
    double minus_brace = 0.0;
    double plus_brace = 0.0;
    double zero_brace = 0.0;
    ActivePair active_pair = ActivePair::PlusMinus;

    [[nodiscard]] double env_minus(double s) const;
    [[nodiscard]] double env_plus(double s) const;
    [[nodiscard]] double env_zero(double s) const;
    /// Brace of the envelope paired with env- under the active rule.
    [[nodiscard]] double active_upper_brace() const;
};

CorrectedSliceEnvelopes corrected_envelopes(const SetupParams& p, int sign, B4Convention conv = B4Convention::Xi);

/**
 * F = max[V(s+), V(s-)] from the active envelope pair: (env+, env-) when
 * h1 != h2 and (env0, env-) when |h1 - h2| <= 1e-12 max(h1, h2).
 *
 * The envelope braces are constants, so the contrast of each pair is the same
 * at every s; eval_s records the first positive pin point of the active pair
 * (theta1 = pi/4 for PlusMinus, theta1 = theta2 = pi/4 for ZeroMinus).
 */
struct CorrectedReport {
    SetupParams params;
    double v_splus;
    double v_sminus;
    double F;
    bool equality_mode;
    B4Convention convention;
    double eval_s;
};
CorrectedReport corrected_F(const SetupParams& p, B4Convention conv = B4Convention::Xi);

/// F - |sin 2xi| without cancellation (B^4(xi) convention, h1 != h2);
/// otherwise evaluated directly.
double corrected_F_deviation(const SetupParams& p, B4Convention conv = B4Convention::Xi);

/**
 * Where the corrected slice first leaves the band between env0 and env-
 * (relative margin 1e-9), scanning s = 0 .. s_max on n points. Returns NaN
 * if it never does. Purely diagnostic.
 */
double envelope_regime_crossing(const SetupParams& p, int sign, double s_max, std::size_t n = 20001,
                                B4Convention conv = B4Convention::Xi);

} // namespace entvis
