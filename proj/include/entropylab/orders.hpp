#ifndef ENTROPYLAB_ORDERS_HPP
#define ENTROPYLAB_ORDERS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "entropylab/types.hpp"

namespace entropylab {

// Entropy order pair (p, q) together with the ambient dimension d.
//
// Admissibility: d >= 1, p > 1 - 2/d, q > 0. The first bound is the
// classical well-posedness threshold for the nonlinear diffusion of
// order p in dimension d; below it the flow loses mass in finite time.
//
// sigma_p = 2/d + p - 1 and sigma_q = 2/d + q - 1 are always recomputed
// from (p, q, d); they are never stored, so the three fields are the
// single source of truth.
struct Orders {
  Real p;
  Real q;
  int d;

  Orders(Real p_, Real q_, int d_) : p(p_), q(q_), d(d_) {
    if (d < 1)
      throw std::invalid_argument("Orders: dimension must be >= 1, got " +
                                  std::to_string(d));
    if (!(std::isfinite(p) && std::isfinite(q)))
      throw std::invalid_argument("Orders: p and q must be finite");
    if (!(p > 1.0 - 2.0 / static_cast<Real>(d)))
      throw std::invalid_argument(
          "Orders: p must exceed 1 - 2/d = " +
          std::to_string(1.0 - 2.0 / static_cast<Real>(d)) + ", got p = " +
          std::to_string(p));
    if (!(q > 0.0))
      throw std::invalid_argument("Orders: q must be positive, got q = " +
                                  std::to_string(q));
  }

  Real sigma_p() const { return 2.0 / static_cast<Real>(d) + p - 1.0; }
  Real sigma_q() const { return 2.0 / static_cast<Real>(d) + q - 1.0; }

  // Limit-branch selectors shared by every functional.
  bool shannon_limit_p() const { return std::abs(p - 1.0) < config::kLimitEps; }
  bool renyi_limit_q() const { return std::abs(q - 1.0) < config::kLimitEps; }

  // Parameter regimes (informational; nothing is rejected here beyond the
  // constructor bounds). Slow diffusion p > 1 has compactly supported
  // self-similar profiles; fast diffusion p < 1 has fat tails.
  bool slow_diffusion() const { return p > 1.0; }
  bool fast_diffusion() const { return p < 1.0; }
};

}  // namespace entropylab

#endif  // ENTROPYLAB_ORDERS_HPP
