#ifndef ENTROPYLAB_ERRORS_HPP
#define ENTROPYLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace entropylab {

// A flow integration or functional evaluation left its validity envelope
// (CFL violation, mass leak, negative density beyond roundoff, ...).
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent experiment configuration.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace entropylab

#endif  // ENTROPYLAB_ERRORS_HPP
