#pragma once

#include <entvis/params.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace entvis {

/// a in {2, 5, 10, 30}, (h1, h2) in {1, 2}^2, xi in {0, pi/8, pi/4, 3pi/8, pi/2, 3pi/4}.
std::vector<SetupParams> parameter_lattice();
/// Reduced lattice: a in {2, 30}, (h1, h2) in {(1, 1), (1, 2)}, xi in {0, 0.3, pi/4}.
std::vector<SetupParams> quick_lattice();

struct CheckResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    std::size_t samples = 0;
    bool strict = false; ///< pass needs max_deviation < tolerance instead of <=
    bool passed = false;
    double seconds = 0.0;
};

struct ValidationOptions {
    bool quick = false;
    double tol_scale = 1.0; ///< multiplies every tolerance; 0 turns any nonzero deviation into a failure
    double tol_quad = 1e-11;
    unsigned threads = 1;
};

std::vector<CheckResult> run_validation(const ValidationOptions& opts);
bool all_passed(const std::vector<CheckResult>& results);

} // namespace entvis
