#pragma once

#include <entvis/params.hpp>

namespace entvis {

enum class MomentBasis { Position, Wavenumber };

/// First and second moments of |psi|^2 in one pure basis.
struct MomentSet {
    MomentBasis basis = MomentBasis::Position;
    double mean1 = 0.0;
    double mean2 = 0.0;
    double cov = 0.0;
    double var1 = 0.0;
    double var2 = 0.0;

    [[nodiscard]] double rho() const;
};

struct OracleMoments {
    MomentSet moments;
    double mass = 0.0;
};

/**
 * Brute-force moments by tensor-product Gauss-Legendre quadrature of |psi|^2
 * evaluated in quad precision.
 *
 * psi is a sum of two products f_r(u) g_r(v) in both pure bases, so the
 * tensor sum over the node grid factorises exactly into products of 1D node
 * sums. That keeps the cost linear in the node count, which quad precision
 * needs: Cov(k1, k2) carries exp(-2a(h1^2+h2^2)) and sits far below the
 * rounding floor of a double precision 2D sum.
 *
 * Domains are wider than the plotting defaults (16 standard deviations) so
 * truncation stays below 1e-50.
 */
OracleMoments oracle_moments(const SetupParams& p, MomentBasis basis);

} // namespace entvis
