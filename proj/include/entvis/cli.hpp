#pragma once

#include <entvis/io.hpp>
#include <entvis/params.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace entvis {

/// Radians, or one of the tokens 0, pi/8, pi/4, 3pi/8, pi/2, 3pi/4 (also with a
/// leading minus). Throws ConfigError.
double parse_angle(const std::string& s);

/// "NxM" with N, M >= 2. Throws ConfigError.
std::pair<std::size_t, std::size_t> parse_grid_size(const std::string& s);

/// One sweep row: V^2+D^2, V^2+F^2, V^2+R^2 from the cancellation-free
/// deviations, and the epsilon bound.
SweepRow sweep_row(const SetupParams& p, double param_value);

/// Sweep one of a, xi, h1, h2 over `count` equally spaced values; evaluated in
/// parallel and returned in order.
std::vector<SweepRow> run_sweep(const SetupParams& base, const std::string& param, double start, double stop,
                                std::size_t count, unsigned threads);

/// Entry point of the command-line tool. Returns the process exit code:
/// 0 success, 1 validation failure, 2 configuration error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace entvis
