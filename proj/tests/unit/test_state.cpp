#include <entvis/errors.hpp>
#include <entvis/params.hpp>
#include <entvis/state.hpp>

#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>

using namespace entvis;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("params validate inputs and reduce xi modulo pi", "[params]") {
    CHECK_THROWS_AS(SetupParams(0.0, 1, 1, 0), ParameterError);
    CHECK_THROWS_AS(SetupParams(-1.0, 1, 1, 0), ParameterError);
    CHECK_THROWS_AS(SetupParams(1.0, 0.0, 1, 0), ParameterError);
    CHECK_THROWS_AS(SetupParams(1.0, 1, -2.0, 0), ParameterError);
    CHECK_THROWS_AS(SetupParams(1.0, 1, 1, std::numeric_limits<double>::quiet_NaN()), ParameterError);
    CHECK_THROWS_AS(SetupParams(std::numeric_limits<double>::infinity(), 1, 1, 0), ParameterError);

    CHECK_THAT(SetupParams(2, 1, 1, pi + 0.3).xi(), WithinAbs(0.3, 1e-15));
    CHECK_THAT(SetupParams(2, 1, 1, -0.3).xi(), WithinAbs(pi - 0.3, 1e-15));
    CHECK(SetupParams(1, 1, 1, 0).regime_warning());
    CHECK_FALSE(SetupParams(2, 1, 1, 0).regime_warning());
    CHECK(SetupParams(2, 1, 1, 0).symmetric());
    CHECK_FALSE(SetupParams(2, 1, 2, 0).symmetric());
    const SetupParams p(3, 1, 2, 0.4);
    CHECK(p.swapped().h1() == 2.0);
    CHECK(p.swapped().swapped() == p);
}

TEST_CASE("normalization constant matches the mass integral", "[state]") {
    // mpmath mass integral of the Gaussian-product state
    CHECK_THAT(normalization_b2(SetupParams(0.5, 1, 1.5, 0.3)), WithinRel(1.3992002695863343397, 1e-14));
    // widely separated slits: B^2 -> 2 for every xi
    CHECK_THAT(normalization_b2(SetupParams(30, 1, 2, 0.3)), WithinRel(2.0, 1e-15));
    // B^2 exceeds 2 when cos 2xi < 0
    CHECK(normalization_b2(SetupParams(0.5, 1, 1, 1.2)) > 2.0);
}

TEST_CASE("amplitudes match the independent oracle", "[state]") {
    const SetupParams p(0.5, 1, 1.5, 0.3);
    const Amplitude x = psi(p, kXX, 0.4, -1.1);
    CHECK_THAT(x.re, WithinRel(0.23267579463052874159, 1e-13));
    CHECK(x.im == 0.0);
    const Amplitude k = psi(p, kKK, 0.7, -1.1);
    CHECK_THAT(k.re, WithinRel(0.053236070340321472854, 1e-13));
    CHECK(k.im == 0.0);
}

TEST_CASE("entangled and separable forms agree", "[state]") {
    for (double xi : {0.0, 0.3, pi / 4, 2.0}) {
        const SetupParams p(2, 1, 2, xi);
        for (double u : {-1.3, 0.0, 0.6}) {
            for (double v : {-2.2, 0.1, 1.9}) {
                CHECK(decomposition_residual(p, kXX, u, v) < 1e-15);
                CHECK(decomposition_residual(p, kKK, u, v) < 1e-15);
            }
        }
    }
    CHECK_THROWS_AS(decomposition_residual(SetupParams(2, 1, 1, 0), kKX, 0, 0), UnsupportedBasisError);
    CHECK_THROWS_AS(psi_separable_form(StateConstants(SetupParams(2, 1, 1, 0)), kXK, 0, 0), UnsupportedBasisError);
}

TEST_CASE("mixed amplitude is the partial Fourier transform", "[state]") {
    // psi(k1, x2) = (2 pi)^{-1/2} int dx1 psi(x1, x2) e^{-i k1 x1}
    const SetupParams p(2, 1, 1.5, 0.7);
    const double k1 = 0.9;
    const double x2 = -1.4;
    double re = 0.0;
    double im = 0.0;
    const int n = 40000;
    const double lo = -8.0;
    const double hi = 8.0;
    const double h = (hi - lo) / n;
    for (int i = 0; i <= n; ++i) {
        const double x = lo + h * i;
        const double w = (i == 0 || i == n) ? 0.5 * h : h;
        const double f = psi(p, kXX, x, x2).re;
        re += w * f * std::cos(k1 * x);
        im -= w * f * std::sin(k1 * x);
    }
    re /= std::sqrt(2.0 * pi);
    im /= std::sqrt(2.0 * pi);
    const Amplitude kx = psi(p, kKX, k1, x2);
    CHECK_THAT(kx.re, WithinAbs(re, 1e-13));
    CHECK_THAT(kx.im, WithinAbs(im, 1e-13));
    // xk is the role-swapped kx
    const Amplitude xk = psi(p, kXK, x2, k1);
    const Amplitude sw = psi(p.swapped(), kKX, k1, x2);
    CHECK(xk.re == sw.re);
    CHECK(xk.im == sw.im);
}

TEST_CASE("basis names round-trip", "[state]") {
    for (const char* s : {"xx", "kk", "kx", "xk"}) {
        CHECK(basis_name(parse_basis(s)) == s);
    }
    CHECK_THROWS_AS(parse_basis("zz"), ConfigError);
}

TEST_CASE("rescaled second subsystem keeps the norm", "[state]") {
    const SetupParams phys(4, 1, 1.5, 0.4);
    const RescaledSetup r = rescale_second_subsystem(phys, 9.0);
    CHECK_THAT(r.to_physical(r.to_canonical(0.77)), WithinRel(0.77, 1e-15));
    // int |psi|^2 dx1 dx2 in physical coordinates
    double mass = 0.0;
    const int n = 600;
    const double l1 = 4.0;
    const double l2 = 4.0;
    const double d1 = 2 * l1 / n;
    const double d2 = 2 * l2 / n;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            const double w = ((i == 0 || i == n) ? 0.5 : 1.0) * ((j == 0 || j == n) ? 0.5 : 1.0);
            const double f = r.psi_physical(-l1 + d1 * i, -l2 + d2 * j);
            mass += w * f * f;
        }
    }
    CHECK_THAT(mass * d1 * d2, WithinAbs(1.0, 1e-10));
    CHECK_THROWS_AS(rescale_second_subsystem(phys, 0.0), ParameterError);
}
