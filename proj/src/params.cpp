#include <entvis/params.hpp>

#include <entvis/errors.hpp>

#include <cmath>
#include <cstdio>

namespace entvis {

double canonical_xi(double xi) {
    if (!std::isfinite(xi)) {
        throw ParameterError("xi must be finite");
    }
    double r = std::fmod(xi, pi);
    if (r < 0.0) {
        r += pi;
    }
    // fmod of a value just below a multiple of pi can round up to pi itself
    if (r >= pi) {
        r = 0.0;
    }
    return r;
}

SetupParams::SetupParams(double a, double h1, double h2, double xi) : a_(a), h1_(h1), h2_(h2), xi_(0.0) {
    if (!(std::isfinite(a) && a > 0.0)) {
        throw ParameterError("squeezing parameter a must be finite and > 0");
    }
    if (!(std::isfinite(h1) && h1 > 0.0)) {
        throw ParameterError("h1 must be finite and > 0");
    }
    if (!(std::isfinite(h2) && h2 > 0.0)) {
        throw ParameterError("h2 must be finite and > 0");
    }
    xi_ = canonical_xi(xi);
}

bool SetupParams::symmetric(double rel_tol) const noexcept {
    return std::abs(h1_ - h2_) <= rel_tol * std::max(h1_, h2_);
}

std::string SetupParams::describe() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "a=%.17g h1=%.17g h2=%.17g xi=%.17g", a_, h1_, h2_, xi_);
    return buf;
}

} // namespace entvis
