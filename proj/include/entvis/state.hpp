#pragma once

#include <entvis/params.hpp>

#include <string>

namespace entvis {

enum class Basis { Position, Wavenumber };

/// Measurement basis of (subsystem 1, subsystem 2).
struct BasisPair {
    Basis first = Basis::Wavenumber;
    Basis second = Basis::Wavenumber;

    [[nodiscard]] bool pure() const noexcept { return first == second; }
    friend bool operator==(const BasisPair&, const BasisPair&) = default;
};

inline constexpr BasisPair kXX{Basis::Position, Basis::Position};
inline constexpr BasisPair kKK{Basis::Wavenumber, Basis::Wavenumber};
inline constexpr BasisPair kKX{Basis::Wavenumber, Basis::Position};
inline constexpr BasisPair kXK{Basis::Position, Basis::Wavenumber};

/// Parse "xx", "kk", "kx", "xk". Throws ConfigError.
BasisPair parse_basis(const std::string& s);
std::string basis_name(BasisPair b);

struct Amplitude {
    double re = 0.0;
    double im = 0.0;

    [[nodiscard]] double norm2() const noexcept { return re * re + im * im; }
};

/// Parameter-derived constants shared by every evaluation at one setup.
/// e1 = exp(-2 a h1^2), e2 = exp(-2 a h2^2), c = cos 2xi, s = sin 2xi.
struct StateConstants {
    explicit StateConstants(const SetupParams& p);

    SetupParams params;
    double a, h1, h2;
    double e1, e2;
    double c, s;
    double cos_xi, sin_xi;
    double cq, sq; // cos(pi/4 - xi), sin(pi/4 - xi)
    double b2, b;
};

/**
 * B^2 in the cancellation-free form
 *   2 / [(1+e1)(1+e2) cos^2 xi + (1-e1)(1-e2) sin^2 xi],
 * which equals e^{a(h1^2+h2^2)} / [cosh(a(h1^2+h2^2)) + cosh(a(h1^2-h2^2)) cos 2xi]
 * without forming any growing exponential. The value exceeds 2 when cos 2xi < 0,
 * approaching 2 / [(1-e1)(1-e2)] at xi = pi/2.
 */
double normalization_b2(const SetupParams& p);

/// Wavefunction amplitude in the requested basis. (u, v) are the coordinates of
/// subsystem 1 and 2 respectively, in the basis of each subsystem.
Amplitude psi(const SetupParams& p, BasisPair basis, double u, double v);

/// Same as psi() but reusing precomputed constants (hot loops).
Amplitude psi(const StateConstants& k, BasisPair basis, double u, double v);

/// |psi_entangled - psi_separable| at one point. Pure bases only, otherwise
/// UnsupportedBasisError.
double decomposition_residual(const SetupParams& p, BasisPair basis, double u, double v);

/// Evaluation of psi through the superposition of maximally (anti)correlated terms.
double psi_entangled_form(const StateConstants& k, BasisPair basis, double u, double v);
/// Evaluation of psi through the superposition of separable terms.
double psi_separable_form(const StateConstants& k, BasisPair basis, double u, double v);

/**
 * Second double slit with its own squeezing b.
 *
 * The physical state exp(-a(x1-+h1)^2) exp(-b(x2-+h2)^2) maps onto the
 * single-squeezing form with xbar2 = x2 sqrt(b/a), hbar2 = h2 sqrt(b/a).
 */
class RescaledSetup {
  public:
    RescaledSetup(const SetupParams& physical, double b);

    /// Parameters of the equivalent single-squeezing state (h2 -> hbar2).
    [[nodiscard]] const SetupParams& canonical() const noexcept { return canonical_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    /// x2 = xbar2 * scale(), scale = sqrt(a/b).
    [[nodiscard]] double scale() const noexcept { return scale_; }
    [[nodiscard]] double to_canonical(double x2) const noexcept { return x2 / scale_; }
    [[nodiscard]] double to_physical(double xbar2) const noexcept { return xbar2 * scale_; }

    /// Normalised position-basis amplitude of the physical two-squeezing state.
    [[nodiscard]] double psi_physical(double x1, double x2) const;

  private:
    SetupParams canonical_;
    double b_;
    double scale_;
    StateConstants k_;
};

/// Throws ParameterError for non-positive or non-finite b.
RescaledSetup rescale_second_subsystem(const SetupParams& p, double b);

} // namespace entvis
