#include <entvis/errors.hpp>
#include <entvis/validation.hpp>
#include <entvis/visibility.hpp>

#include "naive.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace entvis;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("k1 visibility matches the extremum extractor", "[visibility]") {
    // max/min of P(k1) exp(k1^2/2a) over one fringe period, mpmath
    CHECK_THAT(visibility(SetupParams(0.5, 1, 1.5, 0.3), Observable::K1), WithinRel(0.85624988950461069286, 1e-13));
}

TEST_CASE("V and D agree with 100-digit naive forms", "[visibility]") {
    for (const auto& p : parameter_lattice()) {
        CHECK_THAT(single_particle_V(p), WithinAbs(naive::V(p).convert_to<double>(), 2e-16));
        CHECK_THAT(two_particle_D(p), WithinAbs(naive::D(p).convert_to<double>(), 2e-16));
    }
}

TEST_CASE("epsilon is cancellation-free", "[visibility]") {
    for (const auto& p : parameter_lattice()) {
        const double want = naive::epsilon(p).convert_to<double>();
        const double got = limit_deviations(p).epsilon;
        INFO(p.describe() << " eps=" << want);
        CHECK(std::abs(got - want) <= 1e-12 * std::abs(want) + 1e-300);
    }
    // deep in the doubly-exponential regime the naive double form returns 0
    const SetupParams deep(50, 1, 1, 0.3);
    const double eps = limit_deviations(deep).epsilon;
    CHECK(eps != 0.0);
    CHECK_THAT(eps, WithinRel(naive::epsilon(deep).convert_to<double>(), 1e-12));
}

TEST_CASE("epsilon stays inside the bound in the supported regime", "[visibility]") {
    for (const auto& p : parameter_lattice()) {
        const EpsilonBound eb = epsilon_and_bound(p);
        CHECK(std::abs(eb.epsilon) < eb.bound);
    }
    const EpsilonBound eb = epsilon_and_bound(SetupParams(2, 1, 1, 0.3));
    CHECK_THAT(eb.bound, WithinRel(2 * std::exp(-2.0), 1e-15));
}

TEST_CASE("exact anchors and the symmetric reduction", "[visibility]") {
    for (double a : {0.3, 2.0, 50.0}) {
        for (double h2 : {0.5, 1.0, 2.0}) {
            const SetupParams p(a, 1, h2, 0.0);
            CHECK(single_particle_V(p) == 1.0);
            CHECK(std::abs(two_particle_D(p)) <= 1e-15);
            CHECK_THAT(two_particle_D(p.with_xi(pi / 4)), WithinAbs(1.0, 1e-15));
        }
        const SetupParams s(a, 1.5, 1.5, 0.7);
        CHECK_THAT(two_particle_D(s), WithinAbs(two_particle_W(s), 1e-15));
    }
}

TEST_CASE("infinite squeezing limits", "[visibility]") {
    for (int i = 0; i < 64; ++i) {
        const SetupParams p(50, 1, 1, pi * i / 64.0);
        const double c = std::cos(2 * p.xi());
        const double s = std::sin(2 * p.xi());
        CHECK(std::abs(single_particle_V(p) - std::abs(c)) <= 1e-20);
        CHECK(std::abs(two_particle_D(p) - std::abs(s)) <= 1e-20);
        const LimitDeviations d = limit_deviations(p);
        CHECK(std::abs(d.v_minus_abs_cos) <= 1e-20);
        CHECK(std::abs(d.d_minus_abs_sin) <= 1e-20);
    }
}

TEST_CASE("envelopes are realizable at their pins", "[visibility]") {
    const SetupParams sym(5, 1.5, 1.5, 0.3);
    for (Observable o : {Observable::K1, Observable::K2, Observable::KPlus, Observable::KMinus, Observable::SPlus,
                         Observable::SMinus}) {
        for (int which : {-1, 1}) {
            const PinCheck pc = envelope_pin_check(sym, o, which);
            INFO(observable_name(o) << " which=" << which);
            CHECK(pc.realizable);
            CHECK(pc.max_deviation < 1e-12);
        }
    }
    // h2 = 2 h1: theta2 = 4 theta1 cannot sit at pi/4 (mod pi) together with
    // theta1, so the lower s-envelope is never touched; the upper one is
    const SetupParams asym(5, 1, 2, 0.3);
    for (Observable o : {Observable::K1, Observable::K2, Observable::SPlus, Observable::SMinus}) {
        INFO(observable_name(o));
        CHECK(envelope_pin_check(asym, o, 1).realizable);
    }
    CHECK_FALSE(envelope_pin_check(asym, Observable::SPlus, -1).realizable);
    CHECK_FALSE(envelope_pin_check(asym, Observable::SMinus, -1).realizable);
    CHECK_THROWS_AS(envelopes(asym, Observable::Custom), UnsupportedBasisError);
}

TEST_CASE("report carries the regime flag and consistent epsilon", "[visibility]") {
    const VisibilityReport r = visibility_report(SetupParams(30, 1, 2, 0.3));
    CHECK_FALSE(r.regime_warning);
    CHECK_THAT(1 - r.V * r.V - r.D * r.D, WithinAbs(r.epsilon, 1e-15));
    CHECK(visibility_report(SetupParams(1, 1, 1, 0.3)).regime_warning);
    const VisibilityReport z = visibility_report(SetupParams(30, 1, 2, 0.0));
    CHECK(z.V == 1.0);
    CHECK(z.D == 0.0);
    CHECK(z.epsilon == 0.0);
}
