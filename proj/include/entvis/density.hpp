#pragma once

#include <entvis/params.hpp>
#include <entvis/quadrature.hpp>
#include <entvis/state.hpp>

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace entvis {

/// Uniform sample grid, row-major in u.
struct Grid2D {
    double u_min, u_max, v_min, v_max;
    std::size_t n_u, n_v;

    /// Throws ConfigError on empty ranges or fewer than 2 samples per axis.
    void validate() const;
    [[nodiscard]] double u(std::size_t i) const noexcept;
    [[nodiscard]] double v(std::size_t j) const noexcept;
    [[nodiscard]] double du() const noexcept { return (u_max - u_min) / static_cast<double>(n_u - 1); }
    [[nodiscard]] double dv() const noexcept { return (v_max - v_min) / static_cast<double>(n_v - 1); }
};

struct Density2D {
    Grid2D grid;
    BasisPair basis;
    SetupParams params;
    std::vector<double> values; ///< n_u * n_v, values[i * n_v + j] at (u(i), v(j))

    [[nodiscard]] double at(std::size_t i, std::size_t j) const { return values[i * grid.n_v + j]; }
    /// Trapezoid-rule integral of the samples.
    [[nodiscard]] double trapezoid_mass() const;
};

/// Pointwise |psi|^2 evaluator that caches the parameter constants (both
/// subsystem orderings, for the swapped mixed basis).
class DensityEvaluator {
  public:
    DensityEvaluator(const SetupParams& p, BasisPair basis);
    [[nodiscard]] double operator()(double u, double v) const;
    [[nodiscard]] Amplitude amplitude(double u, double v) const;
    [[nodiscard]] BasisPair basis() const noexcept { return basis_; }

  private:
    BasisPair basis_;
    StateConstants k_;
    StateConstants swapped_;
};

double density_at(const SetupParams& p, BasisPair basis, double u, double v);

/// Truncation half-width in Gaussian standard deviations for default domains.
inline constexpr double kDomainStd = 10.0;

/// Default integration / plotting range of one subsystem's axis:
/// position -> +-(h + 10/(2 sqrt a)), wavenumber -> +-10 sqrt a.
std::pair<double, double> default_domain(const SetupParams& p, Basis axis_basis, int subsystem);

Bounds2D default_bounds(const SetupParams& p, BasisPair basis);
Grid2D default_grid(const SetupParams& p, BasisPair basis, std::size_t n_u, std::size_t n_v);

/// Largest composite panel width that resolves one axis of |psi|^2:
/// wavenumber axes keep 2 h w <= 4 pi and w <= 3 sqrt a, position axes keep
/// w <= 3 sigma with sigma = 1/(2 sqrt a).
double panel_width(const SetupParams& p, Basis axis_basis, int subsystem);
int panels_for(double length, double width);

/// Sample |psi|^2 on a grid; rows are computed in parallel and stored by index.
Density2D evaluate_density(const SetupParams& p, BasisPair basis, const Grid2D& grid, unsigned threads = 1);

/// Sample an arbitrary function on the grid with the same row-parallel layout.
std::vector<double> evaluate_on_grid(const std::function<double(double, double)>& f, const Grid2D& grid,
                                     unsigned threads = 1);

/// Integral of weight(u, v) * |psi(u, v)|^2 over the default domain.
double integrate_density(const SetupParams& p, BasisPair basis, const std::function<double(double, double)>& weight,
                         const QuadratureOptions& opts = {});

/// Total probability over the default domain (should be 1).
double total_mass(const SetupParams& p, BasisPair basis, const QuadratureOptions& opts = {});

} // namespace entvis
