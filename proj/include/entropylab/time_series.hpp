#ifndef ENTROPYLAB_TIME_SERIES_HPP
#define ENTROPYLAB_TIME_SERIES_HPP

#include <stdexcept>
#include <vector>

#include "entropylab/types.hpp"

// Derivative estimates on (possibly nonuniformly) sampled time series via
// the interpolating parabola through three consecutive samples. Exact on
// quadratics for any spacing.
namespace entropylab {

struct LocalDerivatives {
  Real first;
  Real second;
};

inline LocalDerivatives parabolic_derivatives(Real t0, Real t1, Real t2,
                                              Real y0, Real y1, Real y2) {
  const Real d1 = t1 - t0;
  const Real d2 = t2 - t1;
  if (!(d1 > 0.0) || !(d2 > 0.0))
    throw std::invalid_argument("parabolic_derivatives: times must increase");
  const Real denom = d1 * d2 * (d1 + d2);
  return {(d1 * d1 * y2 - d2 * d2 * y0 + (d2 * d2 - d1 * d1) * y1) / denom,
          2.0 * (d1 * y2 - (d1 + d2) * y1 + d2 * y0) / denom};
}

// First and second derivatives at the interior samples of a series.
struct SeriesDerivatives {
  std::vector<Real> t;       // times[1..n-2]
  std::vector<Real> first;   // dy/dt there
  std::vector<Real> second;  // d2y/dt2 there
};

inline SeriesDerivatives series_derivatives(const std::vector<Real>& times,
                                            const std::vector<Real>& values) {
  if (times.size() != values.size())
    throw std::invalid_argument("series_derivatives: size mismatch");
  if (times.size() < 3)
    throw std::invalid_argument("series_derivatives: need >= 3 samples");
  SeriesDerivatives out;
  const std::size_t n = times.size();
  out.t.reserve(n - 2);
  out.first.reserve(n - 2);
  out.second.reserve(n - 2);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const LocalDerivatives d =
        parabolic_derivatives(times[k - 1], times[k], times[k + 1],
                              values[k - 1], values[k], values[k + 1]);
    out.t.push_back(times[k]);
    out.first.push_back(d.first);
    out.second.push_back(d.second);
  }
  return out;
}

}  // namespace entropylab

#endif  // ENTROPYLAB_TIME_SERIES_HPP
