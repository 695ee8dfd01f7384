#pragma once

#include <stdexcept>
#include <string>

namespace entvis {

/// Parameter outside the physical domain (non-positive a, h, b, ...).
class ParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Operation requested on a basis it does not support.
class UnsupportedBasisError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Quadrature failed to reach its tolerance within the refinement budget.
/// The oracle never returns an unconverged value silently.
class QuadratureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid command or run configuration.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace entvis
