#include <entvis/density.hpp>
#include <entvis/errors.hpp>
#include <entvis/quadrature.hpp>

#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

using namespace entvis;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Gauss-Legendre rule is exactly mirrored and exact to degree 39", "[quadrature]") {
    const auto& r = GaussRule<double>::get();
    double wsum = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        CHECK(r.x[i] == -r.x[r.x.size() - 1 - i]);
        CHECK(r.w[i] == r.w[r.x.size() - 1 - i]);
        wsum += r.w[i];
    }
    CHECK_THAT(wsum, WithinAbs(2.0, 1e-15));
    const double i38 = composite_1d<double>([](double x) { return std::pow(x, 38); }, -1.0, 1.0, 1);
    CHECK_THAT(i38, WithinRel(2.0 / 39.0, 1e-13));
    const double odd = composite_1d<double>([](double x) { return std::pow(x, 39) + x; }, -1.0, 1.0, 3);
    CHECK(std::abs(odd) <= 1e-15);
}

TEST_CASE("adaptive doubling converges or throws", "[quadrature]") {
    const double g = integrate_1d<double>([](double x) { return std::exp(-x * x); }, -10.0, 10.0, 2, 1e-14);
    CHECK_THAT(g, WithinRel(std::sqrt(pi), 1e-14));
    // an integrand that keeps oscillating faster than any refinement budget
    CHECK_THROWS_AS(integrate_1d<double>([](double x) { return std::cos(1e6 * x * x); }, 0.0, 10.0, 1, 1e-14, 2),
                    QuadratureError);
}

TEST_CASE("2D quadrature of a separable Gaussian", "[quadrature]") {
    const Bounds2D b{-8, 8, -6, 6};
    QuadratureOptions o;
    o.tol = 1e-13;
    const double v = quadrature_2d([](double u, double w) { return std::exp(-u * u - 2 * w * w); }, b, 4, 4, o);
    CHECK_THAT(v, WithinRel(pi / std::sqrt(2.0), 1e-13));
    o.threads = 3;
    const double v3 = quadrature_2d([](double u, double w) { return std::exp(-u * u - 2 * w * w); }, b, 4, 4, o);
    CHECK(v == v3);
}

TEST_CASE("pairwise sum is order-stable", "[quadrature]") {
    std::vector<double> xs(1000);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 1.0 / static_cast<double>(i + 1);
    const double s = pairwise_sum<double>(xs);
    CHECK_THAT(s, WithinRel(7.4854708605503449127, 1e-15));
}

TEST_CASE("density matches the independent oracle", "[density]") {
    // mpmath |psi(k1, k2)|^2 at a = 2, h = (1, 2), xi = 0.3
    CHECK_THAT(density_at(SetupParams(2, 1, 2, 0.3), kKK, 1.2, -0.4), WithinRel(0.040465521636103025688, 1e-13));
}

TEST_CASE("density integrates to one in every basis", "[density]") {
    for (double xi : {0.0, 0.3, 2.0}) {
        const SetupParams p(5, 1, 2, xi);
        for (BasisPair b : {kXX, kKK, kKX, kXK}) {
            CHECK_THAT(total_mass(p, b), WithinAbs(1.0, 1e-10));
        }
    }
}

TEST_CASE("grid evaluation is thread-count independent", "[density]") {
    const SetupParams p(30, 1, 2, pi / 4);
    const Grid2D g = default_grid(p, kKK, 33, 17);
    const Density2D d1 = evaluate_density(p, kKK, g, 1);
    const Density2D d4 = evaluate_density(p, kKK, g, 4);
    CHECK(d1.values == d4.values);
    CHECK(g.u(0) == g.u_min);
    CHECK(g.u(32) == g.u_max);
    CHECK_THROWS_AS(default_grid(p, kKK, 1, 5), ConfigError);
    const SetupParams q(2, 1, 1, 0.3);
    const Density2D fine = evaluate_density(q, kKK, default_grid(q, kKK, 301, 301));
    CHECK_THAT(fine.trapezoid_mass(), WithinAbs(1.0, 1e-10));
}

TEST_CASE("xx density at xi = 0 has four symmetric blobs", "[density]") {
    const SetupParams p(30, 1, 1, 0.0);
    const double c = density_at(p, kXX, 1, 1);
    CHECK(c > 1.0);
    CHECK_THAT(density_at(p, kXX, -1, -1), WithinRel(c, 1e-14));
    CHECK_THAT(density_at(p, kXX, -1, 1), WithinRel(c, 1e-14));
    CHECK_THAT(density_at(p, kXX, 1, -1), WithinRel(c, 1e-14));
    CHECK(density_at(p, kXX, 0, 0) < 1e-20);
}
