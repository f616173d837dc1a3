#ifndef ENTROPYLAB_TYPES_HPP
#define ENTROPYLAB_TYPES_HPP

#include <Eigen/Core>

// Central scalar and dense-array typedefs. Everything in the library is
// written against these aliases so the scalar type is chosen in one place.
namespace entropylab {

using Real = double;
using ArrayX  = Eigen::Array<Real, Eigen::Dynamic, 1>;
using VectorX = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using Index   = Eigen::Index;

// Shared numerical policy. These are part of the library contract:
// tests and downstream tools rely on the exact values.
namespace config {

// |p - 1| (or |q - 1|) below this uses the analytic limit branch.
inline constexpr Real kLimitEps = 1e-9;

// Densities are accepted as normalized when |mass - 1| <= kMassTol.
inline constexpr Real kMassTol = 1e-10;

// Positive floor used inside logs/divisions to avoid -inf/NaN on
// exact zeros; well below any physically meaningful density value.
inline constexpr Real kValueFloor = 1e-300;

// Nodes with u < kSupportEps * max(u) are excluded from gradient-based
// functionals (they carry no information and only amplify roundoff).
inline constexpr Real kSupportEps = 1e-12;

// Minimum grid size for any density, and minimum surviving support
// nodes for the second-order functional to be reported at all.
inline constexpr Index kMinNodes = 16;
inline constexpr Index kMinSupportNodes = 16;

// Relative mass drift that aborts a flow integration.
inline constexpr Real kMassLeakAbort = 1e-6;

}  // namespace config

}  // namespace entropylab

#endif  // ENTROPYLAB_TYPES_HPP
