#pragma once

#include <entvis/errors.hpp>
#include <entvis/parallel.hpp>

#include <boost/math/quadrature/gauss.hpp>

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace entvis {

inline constexpr int kGaussOrder = 20;

/// Full (mirrored) 20-point Gauss-Legendre rule on [-1, 1].
template <class T>
struct GaussRule {
    std::array<T, kGaussOrder> x;
    std::array<T, kGaussOrder> w;

    static const GaussRule& get() {
        static const GaussRule rule = [] {
            using G = boost::math::quadrature::gauss<T, kGaussOrder>;
            const auto& ax = G::abscissa();
            const auto& aw = G::weights();
            GaussRule r{};
            // even order: no node at zero, ax holds the positive half
            const std::size_t half = ax.size();
            for (std::size_t i = 0; i < half; ++i) {
                r.x[half - 1 - i] = -ax[i];
                r.w[half - 1 - i] = aw[i];
                r.x[half + i] = ax[i];
                r.w[half + i] = aw[i];
            }
            return r;
        }();
        return rule;
    }
};

/// Sum in a fixed binary tree so the rounding pattern depends only on the length.
template <class T>
T pairwise_sum(std::span<const T> v) {
    if (v.empty()) {
        return T(0);
    }
    if (v.size() <= 8) {
        T s = v[0];
        for (std::size_t i = 1; i < v.size(); ++i) {
            s += v[i];
        }
        return s;
    }
    const std::size_t mid = v.size() / 2;
    return pairwise_sum(v.subspan(0, mid)) + pairwise_sum(v.subspan(mid));
}

/**
 * Nodes and weights of a composite Gauss-Legendre rule with `panels` equal panels
 * on [lo, hi]. Node coordinates of the panel mirrored about the interval centre
 * are computed as exact negatives, so odd integrands over symmetric intervals
 * stay odd node by node.
 */
template <class T>
void composite_nodes(T lo, T hi, int panels, std::vector<T>& x, std::vector<T>& w) {
    const auto& r = GaussRule<T>::get();
    const T centre = (lo + hi) / 2;
    const T half_len = (hi - lo) / 2;
    const T half_panel = (hi - lo) / (2 * panels);
    x.resize(static_cast<std::size_t>(panels) * kGaussOrder);
    w.resize(x.size());
    for (int p = 0; p < panels; ++p) {
        // panel centre relative to the interval centre, in units of the half length
        const T rel = (T(2 * p + 1) - T(panels)) / T(panels);
        for (int i = 0; i < kGaussOrder; ++i) {
            const std::size_t idx = static_cast<std::size_t>(p) * kGaussOrder + i;
            x[idx] = centre + (rel * half_len + half_panel * r.x[i]);
            w[idx] = half_panel * r.w[i];
        }
    }
}

struct QuadratureOptions {
    double tol = 1e-10;        ///< absolute tolerance between successive refinements
    int max_refinements = 8;   ///< panel doublings before giving up
    unsigned threads = 1;      ///< worker hint for 2D rows (0 = hardware)
};

/// Composite rule value of a 1D integral at a fixed panel count.
template <class T, class F>
T composite_1d(F&& f, T lo, T hi, int panels) {
    std::vector<T> x, w;
    composite_nodes<T>(lo, hi, panels, x, w);
    std::vector<T> terms(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        terms[i] = w[i] * f(x[i]);
    }
    return pairwise_sum<T>(terms);
}

/**
 * 1D composite Gauss-Legendre with global panel doubling, starting from
 * `panels`, until two successive levels differ by at most tol. Throws
 * QuadratureError when the refinement budget is exhausted.
 */
template <class T, class F>
T integrate_1d(F&& f, T lo, T hi, int panels, T tol, int max_refinements = 8) {
    if (panels < 1) {
        panels = 1;
    }
    T prev = composite_1d<T>(f, lo, hi, panels);
    for (int r = 0; r < max_refinements; ++r) {
        panels *= 2;
        const T cur = composite_1d<T>(f, lo, hi, panels);
        using std::abs;
        if (abs(cur - prev) <= tol) {
            return cur;
        }
        prev = cur;
    }
    throw QuadratureError("1D quadrature did not converge after " + std::to_string(max_refinements) +
                          " refinements");
}

struct Bounds2D {
    double u_min, u_max, v_min, v_max;
};

/// Tensor composite rule at fixed panel counts; rows are independent and reduced
/// pairwise in index order, so the value does not depend on the worker count.
template <class F>
double composite_2d(F&& f, const Bounds2D& b, int nu, int nv, unsigned threads) {
    std::vector<double> xu, wu, xv, wv;
    composite_nodes<double>(b.u_min, b.u_max, nu, xu, wu);
    composite_nodes<double>(b.v_min, b.v_max, nv, xv, wv);
    std::vector<double> rows(xu.size());
    parallel_for(xu.size(), threads, [&](std::size_t i) {
        const double u = xu[i];
        double acc = 0.0;
        for (std::size_t j = 0; j < xv.size(); ++j) {
            acc += wv[j] * f(u, xv[j]);
        }
        rows[i] = wu[i] * acc;
    });
    return pairwise_sum<double>(rows);
}

/**
 * Double integral of f over a rectangle by tensor composite Gauss-Legendre
 * panels, doubling both panel counts until successive levels agree within
 * opts.tol. Initial panel counts should already resolve the fastest
 * oscillation of f; refinement only confirms convergence.
 */
template <class F>
double quadrature_2d(F&& f, const Bounds2D& b, int nu, int nv, const QuadratureOptions& opts = {}) {
    if (!(b.u_min < b.u_max && b.v_min < b.v_max)) {
        throw ConfigError("quadrature_2d: empty integration domain");
    }
    nu = std::max(nu, 1);
    nv = std::max(nv, 1);
    double prev = composite_2d(f, b, nu, nv, opts.threads);
    for (int r = 0; r < opts.max_refinements; ++r) {
        nu *= 2;
        nv *= 2;
        const double cur = composite_2d(f, b, nu, nv, opts.threads);
        if (std::abs(cur - prev) <= opts.tol) {
            return cur;
        }
        prev = cur;
    }
    throw QuadratureError("2D quadrature did not converge to tol " + std::to_string(opts.tol));
}

} // namespace entvis
