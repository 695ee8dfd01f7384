#pragma once

#include <entvis/moment_oracle.hpp>
#include <entvis/params.hpp>

namespace entvis {

/// Closed-form position moments; means vanish by the joint sign-flip symmetry.
MomentSet moments_x(const SetupParams& p);
/// Closed-form wavenumber moments. cov underflows to 0 once
/// exp(-2a(h1^2+h2^2)) leaves the double range; use rho_k() for its magnitude.
MomentSet moments_k(const SetupParams& p);

double rho_x(const SetupParams& p);

/// rho(k1, k2) as log10 of the magnitude plus a sign, so it stays usable when
/// the value itself underflows. sign is 0 when sin 2xi = 0.
struct RhoK {
    double log10_abs;
    int sign;
    double value; ///< may underflow to 0
};
RhoK rho_k(const SetupParams& p);

/// R = |rho_x(xi) / rho_x(pi/4)|.
double normalized_R(const SetupParams& p);
/// S = |rho_k(xi) / rho_k(pi/4)|.
double normalized_S(const SetupParams& p);
/// R - |sin 2xi| and S - |sin 2xi| without cancellation.
double R_deviation(const SetupParams& p);
double S_deviation(const SetupParams& p);

/// P(k1) obtained by integrating |psi(k1, x2)|^2 over x2 analytically.
double marginal_k1_mixed(const SetupParams& p, double k1);

struct CorrelationReport {
    SetupParams params;
    double rho_x;
    RhoK rho_k;
    double R;
    double S;
    double V2_plus_R2;
    double V2_plus_S2;
    double rhox2_plus_V2;
    double rhok2_plus_V2;
    bool detectability_flag;
};

inline constexpr double kDefaultDetectabilityFloor = 1e-15;

/// All correlation measures plus the four complementarity sums with V.
/// detectability_flag is set when |rho_k(pi/4)| falls below the floor.
CorrelationReport complementarity_sums(const SetupParams& p, double floor = kDefaultDetectabilityFloor);

/// 1 - V^2 - R^2 and 1 - V^2 - S^2 evaluated from the cancellation-free deviations.
double vr_deficit(const SetupParams& p);
double vs_deficit(const SetupParams& p);

struct PracticalityDiagnostic {
    double abs_rho_k_quarter_pi;   ///< may underflow to 0
    double log10_abs_rho_k_quarter_pi;
    double floor;
    bool flagged;                  ///< |rho_k(pi/4)| < floor
};
PracticalityDiagnostic practicality_diagnostic(const SetupParams& p, double floor = kDefaultDetectabilityFloor);

} // namespace entvis
