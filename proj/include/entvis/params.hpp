#pragma once

#include <numbers>
#include <string>

namespace entvis {

inline constexpr double pi = std::numbers::pi;

/**
 * Physical setup of the paired double-slit experiment.
 *
 * a  squeezing parameter, a = 1/(4 sigma^2)
 * h1 half-separation of the first double slit
 * h2 half-separation of the second double slit
 * xi entanglement angle, stored canonically in [0, pi)
 *
 * All formulas depend on xi only through 2 xi, so the angle is reduced
 * modulo pi on construction.
 */
class SetupParams {
  public:
    /// Throws ParameterError unless a, h1, h2 are finite and positive and xi is finite.
    SetupParams(double a, double h1, double h2, double xi);

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double h1() const noexcept { return h1_; }
    [[nodiscard]] double h2() const noexcept { return h2_; }
    [[nodiscard]] double xi() const noexcept { return xi_; }

    [[nodiscard]] SetupParams with_xi(double xi) const { return {a_, h1_, h2_, xi}; }
    [[nodiscard]] SetupParams with_a(double a) const { return {a, h1_, h2_, xi_}; }
    /// Exchange the roles of the two subsystems (h1 <-> h2).
    [[nodiscard]] SetupParams swapped() const { return {a_, h2_, h1_, xi_}; }

    /// Outside h1 >= 1, h2 >= 1, a >= 2 the envelope approximations are poor
    /// and the epsilon bound is not guaranteed. Reports carry this as a flag.
    [[nodiscard]] bool regime_warning() const noexcept { return a_ < 2.0 || h1_ < 1.0 || h2_ < 1.0; }

    /// h1 == h2 within a relative tolerance.
    [[nodiscard]] bool symmetric(double rel_tol = 1e-12) const noexcept;

    [[nodiscard]] std::string describe() const;

    friend bool operator==(const SetupParams&, const SetupParams&) = default;

  private:
    double a_;
    double h1_;
    double h2_;
    double xi_;
};

/// Reduce an angle modulo pi into [0, pi).
double canonical_xi(double xi);

} // namespace entvis
