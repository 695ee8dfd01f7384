#include <entvis/moment_oracle.hpp>

#include <entvis/density.hpp>
#include <entvis/errors.hpp>
#include <entvis/quadrature.hpp>

#include <boost/multiprecision/float128.hpp>

#include <array>
#include <cmath>

namespace entvis {

namespace {

using q = boost::multiprecision::float128;

constexpr double kOracleStd = 16.0;

// Node sums  M[n][rs] = sum_i w_i x_i^n f_r(x_i) f_s(x_i)  for n = 0, 1, 2 and
// rs in {11, 12, 22}.
using NodeSums = std::array<std::array<q, 3>, 3>;

template <class Factors>
NodeSums node_sums(Factors&& factors, q lo, q hi, int panels) {
    std::vector<q> x, w;
    composite_nodes<q>(lo, hi, panels, x, w);
    NodeSums out{};
    std::array<std::array<std::vector<q>, 3>, 3> terms;
    for (auto& row : terms) {
        for (auto& t : row) {
            t.resize(x.size());
        }
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto [f1, f2] = factors(x[i]);
        const std::array<q, 3> prod{f1 * f1, f1 * f2, f2 * f2};
        for (int rs = 0; rs < 3; ++rs) {
            const q base = w[i] * prod[rs];
            terms[0][rs][i] = base;
            terms[1][rs][i] = base * x[i];
            terms[2][rs][i] = base * x[i] * x[i];
        }
    }
    for (int n = 0; n < 3; ++n) {
        for (int rs = 0; rs < 3; ++rs) {
            out[n][rs] = pairwise_sum<q>(terms[n][rs]);
        }
    }
    return out;
}

// Refine one axis until every node sum is stable relative to the largest
// second-moment sum (the natural scale of the axis).
template <class Factors>
NodeSums converged_sums(Factors&& factors, q lo, q hi, int panels) {
    NodeSums prev = node_sums(factors, lo, hi, panels);
    for (int r = 0; r < 8; ++r) {
        panels *= 2;
        NodeSums cur = node_sums(factors, lo, hi, panels);
        q scale = 0;
        q diff = 0;
        for (int n = 0; n < 3; ++n) {
            for (int rs = 0; rs < 3; ++rs) {
                scale = std::max(scale, q(abs(cur[n][rs])));
                diff = std::max(diff, q(abs(cur[n][rs] - prev[n][rs])));
            }
        }
        if (diff <= q(1e-30) * scale) {
            return cur;
        }
        prev = cur;
    }
    throw QuadratureError("moment oracle: 1D node sums did not converge");
}

} // namespace

double MomentSet::rho() const { return cov / std::sqrt(var1 * var2); }

OracleMoments oracle_moments(const SetupParams& p, MomentBasis basis) {
    const q a = p.a();
    const q h1 = p.h1();
    const q h2 = p.h2();
    const q xi = p.xi();
    const q e1 = exp(-2 * a * h1 * h1);
    const q e2 = exp(-2 * a * h2 * h2);
    const q cx = cos(xi);
    const q sx = sin(xi);
    const q b2 = 2 / ((1 + e1) * (1 + e2) * cx * cx + (1 - e1) * (1 - e2) * sx * sx);
    const q qpi = boost::math::constants::pi<q>();
    const double sa = std::sqrt(p.a());

    std::array<q, 2> alpha{};
    NodeSums m1{}, m2{};
    if (basis == MomentBasis::Position) {
        // psi = 2 sqrt(a/pi) B [C1 C2 cos xi + S1 S2 sin xi]
        const q pref = 2 * sqrt(a / qpi) * sqrt(b2);
        alpha = {pref * cx, pref * sx};
        auto axis = [&](q h) {
            return [a, h](q x) {
                const q gm = exp(-a * (x - h) * (x - h));
                const q gp = exp(-a * (x + h) * (x + h));
                return std::array<q, 2>{(gm + gp) / 2, (gm - gp) / 2};
            };
        };
        const double w = 3.0 / (2.0 * sa);
        const double half1 = p.h1() + kOracleStd / (2.0 * sa);
        const double half2 = p.h2() + kOracleStd / (2.0 * sa);
        m1 = converged_sums(axis(h1), q(-half1), q(half1), panels_for(2 * half1, w));
        m2 = converged_sums(axis(h2), q(-half2), q(half2), panels_for(2 * half2, w));
    } else {
        // psi = B/sqrt(a pi) G(k1) G(k2) [cos cos cos xi - sin sin sin xi]
        const q pref = sqrt(b2) / sqrt(a * qpi);
        alpha = {pref * cx, -pref * sx};
        auto axis = [&](q h) {
            return [a, h](q k) {
                const q g = exp(-k * k / (4 * a));
                return std::array<q, 2>{g * cos(h * k), g * sin(h * k)};
            };
        };
        const double half = kOracleStd * sa;
        const double w1 = std::min(4.0 * pi / (2.0 * p.h1()), 3.0 * sa);
        const double w2 = std::min(4.0 * pi / (2.0 * p.h2()), 3.0 * sa);
        m1 = converged_sums(axis(h1), q(-half), q(half), panels_for(2 * half, w1));
        m2 = converged_sums(axis(h2), q(-half), q(half), panels_for(2 * half, w2));
    }

    // <u^m v^n> = sum_{r,s} alpha_r alpha_s M1[m][rs] M2[n][rs]
    const std::array<q, 3> coef{alpha[0] * alpha[0], 2 * alpha[0] * alpha[1], alpha[1] * alpha[1]};
    auto moment = [&](int m, int n) {
        q acc = 0;
        for (int rs = 0; rs < 3; ++rs) {
            acc += coef[rs] * m1[m][rs] * m2[n][rs];
        }
        return acc;
    };
    const q mass = moment(0, 0);
    const q mu1 = moment(1, 0);
    const q mu2 = moment(0, 1);
    OracleMoments out;
    out.mass = static_cast<double>(mass);
    out.moments.basis = basis;
    out.moments.mean1 = static_cast<double>(mu1);
    out.moments.mean2 = static_cast<double>(mu2);
    out.moments.cov = static_cast<double>(moment(1, 1) - mu1 * mu2);
    out.moments.var1 = static_cast<double>(moment(2, 0) - mu1 * mu1);
    out.moments.var2 = static_cast<double>(moment(0, 2) - mu2 * mu2);
    return out;
}

} // namespace entvis
