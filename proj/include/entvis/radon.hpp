#pragma once

#include <entvis/params.hpp>
#include <entvis/quadrature.hpp>
#include <entvis/state.hpp>

#include <string>
#include <vector>

namespace entvis {

enum class Observable { K1, K2, KPlus, KMinus, SPlus, SMinus, Custom };

std::string observable_name(Observable o);
/// Accepts k1, k2, k+, k-, s+, s- (also kplus, kminus, splus, sminus).
Observable parse_observable(const std::string& s);

/// Direction of integration lines, s = u cos(phi) + v sin(phi), phi in (-pi/2, pi/2].
class RadonAngle {
  public:
    static RadonAngle k1() { return {0.0, Observable::K1}; }
    static RadonAngle k2() { return {pi / 2.0, Observable::K2}; }
    static RadonAngle k_plus() { return {pi / 4.0, Observable::KPlus}; }
    static RadonAngle k_minus() { return {-pi / 4.0, Observable::KMinus}; }
    /// +arctan(h2/h1)
    static RadonAngle s_plus(const SetupParams& p);
    /// -arctan(h2/h1)
    static RadonAngle s_minus(const SetupParams& p);
    /// Any angle, reduced into (-pi/2, pi/2].
    static RadonAngle custom(double phi);
    static RadonAngle of(Observable o, const SetupParams& p);

    [[nodiscard]] double phi() const noexcept { return phi_; }
    [[nodiscard]] Observable observable() const noexcept { return obs_; }
    [[nodiscard]] double cos_phi() const noexcept { return cos_; }
    [[nodiscard]] double sin_phi() const noexcept { return sin_; }

  private:
    RadonAngle(double phi, Observable o);
    RadonAngle(double phi, double c, double s, Observable o) : phi_(phi), cos_(c), sin_(s), obs_(o) {}

    double phi_;
    double cos_;
    double sin_;
    Observable obs_;
};

enum class DistributionKind { Marginal, Slice };

struct Marginal1D {
    Observable observable = Observable::Custom;
    double phi = 0.0;
    DistributionKind kind = DistributionKind::Marginal;
    double offset = 0.0; ///< perpendicular offset of a slice
    std::vector<double> s;
    std::vector<double> values;

    /// Trapezoid integral over the axis.
    [[nodiscard]] double integral() const;
};

/// n equally spaced points spanning the marginal axis of the default domain
/// (+-10 sqrt a in wavenumber space). n >= 2.
std::vector<double> default_axis(const SetupParams& p, std::size_t n);

/**
 * Radon transform of |psi|^2 along lines at angle phi, one 1D quadrature per
 * axis point. In rotated coordinates u = s cos phi - t sin phi,
 * v = s sin phi + t cos phi (unit Jacobian), t spans sqrt(2) times the
 * largest default half-width so no mass is clipped at any angle.
 */
Marginal1D radon_numeric(const SetupParams& p, BasisPair basis, const RadonAngle& angle,
                         const std::vector<double>& s_axis, const QuadratureOptions& opts = {});

/// One line integral of the numeric transform.
double radon_line(const SetupParams& p, BasisPair basis, const RadonAngle& angle, double s,
                  const QuadratureOptions& opts = {});

/// Closed-form wavenumber marginals.
double marginal_k1(const SetupParams& p, double k1);
double marginal_k2(const SetupParams& p, double k2);
/// sign = +1 for k+ (phi = pi/4), -1 for k- (phi = -pi/4).
double marginal_kpm(const SetupParams& p, int sign, double k);
/// sign = +1 for s+, -1 for s-, s = (h1 k1 +- h2 k2)/sqrt(h1^2+h2^2).
double marginal_spm(const SetupParams& p, int sign, double s);
/// Dispatch on the named observable; throws UnsupportedBasisError for Custom.
double closed_form_marginal(const SetupParams& p, Observable o, double s);

/// Closed-form marginal sampled on an axis.
Marginal1D closed_form_marginal_curve(const SetupParams& p, Observable o, const std::vector<double>& s_axis);

/**
 * |psi|^2 restricted to the line at perpendicular offset t0: values at
 * (s cos phi - t0 sin phi, s sin phi + t0 cos phi). No integration; the result
 * is a conditional profile and does not integrate to 1.
 */
Marginal1D slice_numeric(const SetupParams& p, BasisPair basis, const RadonAngle& angle, double offset,
                         const std::vector<double>& s_axis);

} // namespace entvis
