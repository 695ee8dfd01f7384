#include <entvis/state.hpp>

#include <entvis/errors.hpp>

#include <cmath>

namespace entvis {

namespace {

// Half-sum and half-difference of the two shifted Gaussians of one slit pair.
struct SlitPair {
    double even; // (g(x-h) + g(x+h)) / 2
    double odd;  // (g(x-h) - g(x+h)) / 2
    double gm;   // g(x-h)
    double gp;   // g(x+h)
};

SlitPair slit_pair(double a, double h, double x) {
    const double gm = std::exp(-a * (x - h) * (x - h));
    const double gp = std::exp(-a * (x + h) * (x + h));
    return {0.5 * (gm + gp), 0.5 * (gm - gp), gm, gp};
}

// psi(k1, x2) for the (Wavenumber, Position) basis.
Amplitude psi_kx(const StateConstants& k, double k1, double x2) {
    const SlitPair p2 = slit_pair(k.a, k.h2, x2);
    const double env = std::sqrt(2.0 / pi) * k.b * std::exp(-k1 * k1 / (4.0 * k.a));
    const double t = k.h1 * k1;
    return {env * std::cos(t) * p2.even * k.cos_xi, -env * std::sin(t) * p2.odd * k.sin_xi};
}

} // namespace

BasisPair parse_basis(const std::string& s) {
    if (s == "xx") return kXX;
    if (s == "kk") return kKK;
    if (s == "kx") return kKX;
    if (s == "xk") return kXK;
    throw ConfigError("unknown basis '" + s + "' (expected xx, kk, kx or xk)");
}

std::string basis_name(BasisPair b) {
    std::string out;
    out += b.first == Basis::Position ? 'x' : 'k';
    out += b.second == Basis::Position ? 'x' : 'k';
    return out;
}

StateConstants::StateConstants(const SetupParams& p)
    : params(p), a(p.a()), h1(p.h1()), h2(p.h2()), e1(std::exp(-2.0 * a * h1 * h1)),
      e2(std::exp(-2.0 * a * h2 * h2)), c(std::cos(2.0 * p.xi())), s(std::sin(2.0 * p.xi())),
      cos_xi(std::cos(p.xi())), sin_xi(std::sin(p.xi())), cq(std::cos(pi / 4.0 - p.xi())),
      sq(std::sin(pi / 4.0 - p.xi())), b2(normalization_b2(p)), b(std::sqrt(b2)) {}

double normalization_b2(const SetupParams& p) {
    const double e1 = std::exp(-2.0 * p.a() * p.h1() * p.h1());
    const double e2 = std::exp(-2.0 * p.a() * p.h2() * p.h2());
    const double cx = std::cos(p.xi());
    const double sx = std::sin(p.xi());
    return 2.0 / ((1.0 + e1) * (1.0 + e2) * cx * cx + (1.0 - e1) * (1.0 - e2) * sx * sx);
}

double psi_entangled_form(const StateConstants& k, BasisPair basis, double u, double v) {
    if (basis == kXX) {
        const SlitPair p1 = slit_pair(k.a, k.h1, u);
        const SlitPair p2 = slit_pair(k.a, k.h2, v);
        const double corr = p1.gm * p2.gm + p1.gp * p2.gp;
        const double anti = p1.gm * p2.gp + p1.gp * p2.gm;
        return std::sqrt(k.a / (2.0 * pi)) * k.b * (corr * k.cq + anti * k.sq);
    }
    if (basis == kKK) {
        const double env = k.b / std::sqrt(2.0 * k.a * pi) * std::exp(-(u * u + v * v) / (4.0 * k.a));
        const double t1 = k.h1 * u;
        const double t2 = k.h2 * v;
        return env * (std::cos(t1 + t2) * k.cq + std::cos(t1 - t2) * k.sq);
    }
    throw UnsupportedBasisError("entangled-form decomposition is defined for xx and kk only");
}

double psi_separable_form(const StateConstants& k, BasisPair basis, double u, double v) {
    if (basis == kXX) {
        const SlitPair p1 = slit_pair(k.a, k.h1, u);
        const SlitPair p2 = slit_pair(k.a, k.h2, v);
        return 2.0 * std::sqrt(k.a / pi) * k.b * (p1.even * p2.even * k.cos_xi + p1.odd * p2.odd * k.sin_xi);
    }
    if (basis == kKK) {
        const double env = k.b / std::sqrt(k.a * pi) * std::exp(-(u * u + v * v) / (4.0 * k.a));
        const double t1 = k.h1 * u;
        const double t2 = k.h2 * v;
        return env * (std::cos(t1) * std::cos(t2) * k.cos_xi - std::sin(t1) * std::sin(t2) * k.sin_xi);
    }
    throw UnsupportedBasisError("separable-form decomposition is defined for xx and kk only");
}

Amplitude psi(const StateConstants& k, BasisPair basis, double u, double v) {
    if (basis == kXX || basis == kKK) {
        return {psi_entangled_form(k, basis, u, v), 0.0};
    }
    if (basis == kKX) {
        return psi_kx(k, u, v);
    }
    // (x1, k2): exchange the subsystems, psi_{h1,h2}(x1, k2) = psi_{h2,h1}(k2, x1)
    const StateConstants swapped(k.params.swapped());
    return psi_kx(swapped, v, u);
}

Amplitude psi(const SetupParams& p, BasisPair basis, double u, double v) {
    return psi(StateConstants(p), basis, u, v);
}

double decomposition_residual(const SetupParams& p, BasisPair basis, double u, double v) {
    if (!basis.pure()) {
        throw UnsupportedBasisError("decomposition residual requires the xx or kk basis");
    }
    const StateConstants k(p);
    return std::abs(psi_entangled_form(k, basis, u, v) - psi_separable_form(k, basis, u, v));
}

RescaledSetup::RescaledSetup(const SetupParams& physical, double b)
    : canonical_(physical), b_(b), scale_(1.0), k_(physical) {
    if (!(std::isfinite(b) && b > 0.0)) {
        throw ParameterError("second squeezing parameter b must be finite and > 0");
    }
    scale_ = std::sqrt(physical.a() / b);
    canonical_ = SetupParams(physical.a(), physical.h1(), physical.h2() / scale_, physical.xi());
    k_ = StateConstants(canonical_);
}

double RescaledSetup::psi_physical(double x1, double x2) const {
    // dx2 = scale dxbar2, so the amplitude picks up scale^{-1/2}
    return psi(k_, kXX, x1, to_canonical(x2)).re / std::sqrt(scale_);
}

RescaledSetup rescale_second_subsystem(const SetupParams& p, double b) { return {p, b}; }

} // namespace entvis
