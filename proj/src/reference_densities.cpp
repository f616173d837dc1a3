#include "entropylab/reference_densities.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace entropylab {

namespace {

constexpr Real kTailSigmas = 6.0;

ArrayX gaussian_samples(const ArrayX& x, Real sigma2, Real center, int dim) {
  const Real norm =
      std::pow(2.0 * std::numbers::pi_v<Real> * sigma2, -0.5 * dim);
  return norm * (-(x - center).square() / (2.0 * sigma2)).exp();
}

void require_tail_room(Real sigma2, Real center, Real extent, const char* who) {
  if (!(sigma2 > 0.0))
    throw std::invalid_argument(std::string(who) + ": sigma2 must be positive");
  if (std::abs(center) + kTailSigmas * std::sqrt(sigma2) > extent)
    throw std::invalid_argument(
        std::string(who) + ": grid must extend at least " +
        std::to_string(kTailSigmas) + " standard deviations past the center");
}

}  // namespace

GridDensity gaussian_line(Real sigma2, Real half_width, Index n, Real center) {
  require_tail_room(sigma2, center, half_width, "gaussian_line");
  const ArrayX x = ArrayX::LinSpaced(n, -half_width, half_width);
  const Real h = 2.0 * half_width / static_cast<Real>(n - 1);
  return GridDensity::line(-half_width, h, gaussian_samples(x, sigma2, center, 1));
}

GridDensity gaussian_radial(Real sigma2, int dim, Real radius, Index n) {
  require_tail_room(sigma2, 0.0, radius, "gaussian_radial");
  const ArrayX r = ArrayX::LinSpaced(n, 0.0, radius);
  const Real h = radius / static_cast<Real>(n - 1);
  return GridDensity::radial(dim, h, gaussian_samples(r, sigma2, 0.0, dim));
}

GridDensity uniform_line(Real x0, Real width, Index n) {
  if (!(width > 0.0))
    throw std::invalid_argument("uniform_line: width must be positive");
  const Real h = width / static_cast<Real>(n - 1);
  return GridDensity::line(x0, h, ArrayX::Constant(n, 1.0 / width));
}

GridDensity gaussian_mixture_line(const std::vector<MixtureComponent>& parts,
                                  Real half_width, Index n) {
  if (parts.empty())
    throw std::invalid_argument("gaussian_mixture_line: no components");
  const ArrayX x = ArrayX::LinSpaced(n, -half_width, half_width);
  ArrayX values = ArrayX::Zero(n);
  for (const MixtureComponent& c : parts) {
    if (!(c.weight > 0.0))
      throw std::invalid_argument("gaussian_mixture_line: weights must be positive");
    require_tail_room(c.sigma2, c.center, half_width, "gaussian_mixture_line");
    values += c.weight * gaussian_samples(x, c.sigma2, c.center, 1);
  }
  const Real h = 2.0 * half_width / static_cast<Real>(n - 1);
  return GridDensity::line(-half_width, h, std::move(values));
}

SelfSimilarProfile::SelfSimilarProfile(Real p_, int dim_, Real mass_)
    : p(p_), dim(dim_), mass(mass_) {
  if (dim < 1)
    throw std::invalid_argument("SelfSimilarProfile: dim must be >= 1");
  if (std::abs(p - 1.0) < config::kLimitEps)
    throw std::invalid_argument("SelfSimilarProfile: undefined at p = 1");
  if (!(p > 1.0 - 2.0 / dim))
    throw std::invalid_argument("SelfSimilarProfile: p must exceed 1 - 2/d");
  if (!(mass > 0.0))
    throw std::invalid_argument("SelfSimilarProfile: mass must be positive");

  const Real d = static_cast<Real>(dim);
  alpha = d / (d * (p - 1.0) + 2.0);
  beta = alpha / d;
  k = alpha * (p - 1.0) / (2.0 * p * d);

  // Mass of (C - k|z|^2)_+^(1/(p-1)) over R^d, via the Euler beta function:
  //   p > 1: omega_d/2 * B(d/2, m + 1)      * C^(m + d/2) / k^(d/2)
  //   p < 1: omega_d/2 * B(d/2, -m - d/2)   * C^(m + d/2) / |k|^(d/2)
  // with m = 1/(p-1); solve for C.
  const Real m = 1.0 / (p - 1.0);
  const Real beta_fn = p > 1.0 ? std::beta(0.5 * d, m + 1.0)
                               : std::beta(0.5 * d, -m - 0.5 * d);
  const Real shape =
      0.5 * sphere_surface(dim) * beta_fn * std::pow(std::abs(k), -0.5 * d);
  big_c = std::pow(mass / shape, 1.0 / (m + 0.5 * d));
}

Real SelfSimilarProfile::front_radius(Real t) const {
  if (!(t > 0.0))
    throw std::invalid_argument("SelfSimilarProfile: t must be positive");
  if (p < 1.0) return std::numeric_limits<Real>::infinity();
  return std::sqrt(big_c / k) * std::pow(t, beta);
}

Real SelfSimilarProfile::value(Real r, Real t) const {
  if (!(t > 0.0))
    throw std::invalid_argument("SelfSimilarProfile: t must be positive");
  const Real base = big_c - k * r * r * std::pow(t, -2.0 * beta);
  if (base <= 0.0) return 0.0;
  return std::pow(t, -alpha) * std::pow(base, 1.0 / (p - 1.0));
}

GridDensity self_similar_radial(Real p, int dim, Real t, Real radius, Index n,
                                Real mass) {
  const SelfSimilarProfile prof(p, dim, mass);
  const Real h = radius / static_cast<Real>(n - 1);
  if (p > 1.0 && radius < prof.front_radius(t) + 32.0 * h)
    throw std::invalid_argument(
        "self_similar_radial: grid must extend >= 32 nodes past the front at r = " +
        std::to_string(prof.front_radius(t)));
  ArrayX values(n);
  for (Index i = 0; i < n; ++i)
    values(i) = prof.value(static_cast<Real>(i) * h, t);
  return GridDensity::radial(dim, h, std::move(values));
}

GridDensity self_similar_line(Real p, Real t, Real half_width, Index n,
                              Real mass) {
  const SelfSimilarProfile prof(p, 1, mass);
  const Real h = 2.0 * half_width / static_cast<Real>(n - 1);
  if (p > 1.0 && half_width < prof.front_radius(t) + 32.0 * h)
    throw std::invalid_argument(
        "self_similar_line: grid must extend >= 32 nodes past the front at |x| = " +
        std::to_string(prof.front_radius(t)));
  ArrayX values(n);
  for (Index i = 0; i < n; ++i)
    values(i) = prof.value(std::abs(-half_width + static_cast<Real>(i) * h), t);
  return GridDensity::line(-half_width, h, std::move(values));
}

}  // namespace entropylab
