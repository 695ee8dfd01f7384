#include <entvis/density.hpp>

#include <entvis/errors.hpp>

#include <cmath>

namespace entvis {

void Grid2D::validate() const {
    if (n_u < 2 || n_v < 2) {
        throw ConfigError("grid needs at least 2 samples per axis");
    }
    if (!(std::isfinite(u_min) && std::isfinite(u_max) && std::isfinite(v_min) && std::isfinite(v_max))) {
        throw ConfigError("grid bounds must be finite");
    }
    if (!(u_min < u_max && v_min < v_max)) {
        throw ConfigError("grid bounds must satisfy min < max");
    }
}

double Grid2D::u(std::size_t i) const noexcept {
    if (i + 1 == n_u) return u_max;
    return u_min + (u_max - u_min) * static_cast<double>(i) / static_cast<double>(n_u - 1);
}

double Grid2D::v(std::size_t j) const noexcept {
    if (j + 1 == n_v) return v_max;
    return v_min + (v_max - v_min) * static_cast<double>(j) / static_cast<double>(n_v - 1);
}

double Density2D::trapezoid_mass() const {
    std::vector<double> rows(grid.n_u);
    for (std::size_t i = 0; i < grid.n_u; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < grid.n_v; ++j) {
            const double wj = (j == 0 || j + 1 == grid.n_v) ? 0.5 : 1.0;
            acc += wj * at(i, j);
        }
        const double wi = (i == 0 || i + 1 == grid.n_u) ? 0.5 : 1.0;
        rows[i] = wi * acc;
    }
    return pairwise_sum<double>(rows) * grid.du() * grid.dv();
}

DensityEvaluator::DensityEvaluator(const SetupParams& p, BasisPair basis)
    : basis_(basis), k_(p), swapped_(p.swapped()) {}

Amplitude DensityEvaluator::amplitude(double u, double v) const {
    if (basis_ == kXK) {
        return psi(swapped_, kKX, v, u);
    }
    return psi(k_, basis_, u, v);
}

double DensityEvaluator::operator()(double u, double v) const { return amplitude(u, v).norm2(); }

double density_at(const SetupParams& p, BasisPair basis, double u, double v) {
    return psi(p, basis, u, v).norm2();
}

std::pair<double, double> default_domain(const SetupParams& p, Basis axis_basis, int subsystem) {
    if (subsystem != 1 && subsystem != 2) {
        throw ConfigError("subsystem must be 1 or 2");
    }
    const double sa = std::sqrt(p.a());
    if (axis_basis == Basis::Wavenumber) {
        return {-kDomainStd * sa, kDomainStd * sa};
    }
    const double h = subsystem == 1 ? p.h1() : p.h2();
    const double half = h + kDomainStd / (2.0 * sa);
    return {-half, half};
}

Bounds2D default_bounds(const SetupParams& p, BasisPair basis) {
    const auto [u0, u1] = default_domain(p, basis.first, 1);
    const auto [v0, v1] = default_domain(p, basis.second, 2);
    return {u0, u1, v0, v1};
}

Grid2D default_grid(const SetupParams& p, BasisPair basis, std::size_t n_u, std::size_t n_v) {
    const Bounds2D b = default_bounds(p, basis);
    Grid2D g{b.u_min, b.u_max, b.v_min, b.v_max, n_u, n_v};
    g.validate();
    return g;
}

double panel_width(const SetupParams& p, Basis axis_basis, int subsystem) {
    const double sa = std::sqrt(p.a());
    if (axis_basis == Basis::Wavenumber) {
        const double h = subsystem == 1 ? p.h1() : p.h2();
        return std::min(4.0 * pi / (2.0 * h), 3.0 * sa);
    }
    return 3.0 / (2.0 * sa);
}

int panels_for(double length, double width) {
    return std::max(1, static_cast<int>(std::ceil(length / width)));
}

std::vector<double> evaluate_on_grid(const std::function<double(double, double)>& f, const Grid2D& grid,
                                     unsigned threads) {
    grid.validate();
    std::vector<double> values(grid.n_u * grid.n_v);
    parallel_for(grid.n_u, threads, [&](std::size_t i) {
        const double u = grid.u(i);
        for (std::size_t j = 0; j < grid.n_v; ++j) {
            values[i * grid.n_v + j] = f(u, grid.v(j));
        }
    });
    return values;
}

Density2D evaluate_density(const SetupParams& p, BasisPair basis, const Grid2D& grid, unsigned threads) {
    const DensityEvaluator f(p, basis);
    return {grid, basis, p, evaluate_on_grid([&](double u, double v) { return f(u, v); }, grid, threads)};
}

double integrate_density(const SetupParams& p, BasisPair basis, const std::function<double(double, double)>& weight,
                         const QuadratureOptions& opts) {
    const DensityEvaluator f(p, basis);
    const Bounds2D b = default_bounds(p, basis);
    const int nu = panels_for(b.u_max - b.u_min, panel_width(p, basis.first, 1));
    const int nv = panels_for(b.v_max - b.v_min, panel_width(p, basis.second, 2));
    return quadrature_2d([&](double u, double v) { return weight(u, v) * f(u, v); }, b, nu, nv, opts);
}

double total_mass(const SetupParams& p, BasisPair basis, const QuadratureOptions& opts) {
    const DensityEvaluator f(p, basis);
    const Bounds2D b = default_bounds(p, basis);
    const int nu = panels_for(b.u_max - b.u_min, panel_width(p, basis.first, 1));
    const int nv = panels_for(b.v_max - b.v_min, panel_width(p, basis.second, 2));
    return quadrature_2d(f, b, nu, nv, opts);
}

} // namespace entvis
