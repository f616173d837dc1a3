#include "entropylab/epi.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <unsupported/Eigen/FFT>

#include "entropylab/errors.hpp"
#include "entropylab/functionals.hpp"

namespace entropylab {

std::string to_string(EpiVariant v) {
  switch (v) {
    case EpiVariant::Shannon: return "Shannon";
    case EpiVariant::BobkovMarsiglietti: return "BobkovMarsiglietti";
    case EpiVariant::SharmaMittal: return "SharmaMittal";
    case EpiVariant::BobkovChistyakovN: return "BobkovChistyakovN";
  }
  return "?";
}

EpiCase::EpiCase(EpiVariant v, Orders o, Real a, std::vector<GridDensity> s)
    : variant(v), orders(o), alpha(a), summands(std::move(s)) {
  if (summands.size() < 2)
    throw std::invalid_argument("EpiCase: need at least two summands");
  const Real h = summands.front().spacing();
  for (const GridDensity& u : summands) {
    if (u.geometry() != Geometry::Line1D)
      throw std::invalid_argument("EpiCase: line geometry only");
    if (std::abs(u.spacing() - h) > 1e-12 * h)
      throw std::invalid_argument("EpiCase: summands must share grid spacing");
  }
}

EpiCase EpiCase::shannon(std::vector<GridDensity> summands) {
  return EpiCase(EpiVariant::Shannon, Orders(1.0, 1.0, 1), 1.0,
                 std::move(summands));
}

EpiCase EpiCase::bobkov_marsiglietti(Real p, Real alpha,
                                     std::vector<GridDensity> summands) {
  if (!(p > 1.0))
    throw std::invalid_argument("EpiCase: BobkovMarsiglietti needs p > 1");
  if (!(alpha >= 0.5 * (p + 1.0) - 1e-12))
    throw std::invalid_argument(
        "EpiCase: BobkovMarsiglietti needs alpha >= (p+1)/2");
  EpiCase c(EpiVariant::BobkovMarsiglietti, Orders(p, 1.0, 1), alpha,
            std::move(summands));
  if (c.summands.size() != 2)
    throw std::invalid_argument("EpiCase: BobkovMarsiglietti takes two summands");
  return c;
}

EpiCase EpiCase::sharma_mittal(const Orders& o,
                               std::vector<GridDensity> summands) {
  if (o.d != 1)
    throw std::invalid_argument("EpiCase: d = 1 only");
  // alpha and q are tied by q = 2(alpha - 1)/d + 1.
  const Real alpha = 1.0 + 0.5 * o.d * (o.q - 1.0);
  EpiCase c(EpiVariant::SharmaMittal, o, alpha, std::move(summands));
  if (c.summands.size() != 2)
    throw std::invalid_argument("EpiCase: SharmaMittal takes two summands");
  // Proven range: p > 1 with alpha >= (p+1)/2, or the Shannon point.
  // Everything else (including q = 1 with p > 1) is exploratory.
  const bool shannon_point = c.orders.shannon_limit_p() && c.orders.renyi_limit_q();
  const bool proven =
      shannon_point || (o.p > 1.0 && alpha >= 0.5 * (o.p + 1.0) - 1e-12);
  c.exploratory = !proven;
  return c;
}

EpiCase EpiCase::bobkov_chistyakov(Real p, std::vector<GridDensity> summands) {
  if (!(p > 1.0))
    throw std::invalid_argument("EpiCase: BobkovChistyakovN needs p > 1");
  EpiCase c(EpiVariant::BobkovChistyakovN, Orders(p, 1.0, 1), 1.0,
            std::move(summands));
  // The sum bound is a theorem for n >= 3 and known to fail for n = 2;
  // the two-summand mode is exposed for exploration only.
  c.exploratory = c.summands.size() == 2;
  return c;
}

namespace {

struct RawConvolution {
  Real x0;
  Real h;
  ArrayX values;
};

// Trapezoid rule in y over the overlap window of a(y) b(x_k - y): the
// plain lag sum with half-weight end corrections per output node. Exact
// for piecewise-linear integrands with kinks at window ends, which is
// what uniform-density edges produce.
RawConvolution convolve_direct_raw(const GridDensity& a, const GridDensity& b) {
  const ArrayX& av = a.values();
  const ArrayX& bv = b.values();
  const Index na = av.size();
  const Index nb = bv.size();
  const Real h = a.spacing();
  ArrayX c(na + nb - 1);
  for (Index k = 0; k < c.size(); ++k) {
    const Index j_lo = std::max<Index>(0, k - nb + 1);
    const Index j_hi = std::min(na - 1, k);
    const Index len = j_hi - j_lo + 1;
    // sum_j a_j b_{k-j} = dot(a[j_lo..j_hi], reversed b[k-j_hi..k-j_lo])
    const Real s =
        (av.segment(j_lo, len) * bv.segment(k - j_hi, len).reverse()).sum();
    const Real ends = av(j_lo) * bv(k - j_lo) + av(j_hi) * bv(k - j_hi);
    c(k) = h * (s - 0.5 * ends);
  }
  return {a.x0() + b.x0(), h, std::move(c)};
}

GridDensity finalize_convolution(RawConvolution raw) {
  const Real mass =
      (quadrature_weights(Geometry::Line1D, 1, raw.h, raw.values.size()) *
       raw.values)
          .sum();
  if (std::abs(mass - 1.0) > 1e-8)
    throw NumericalError(
        "convolve: discrete mass " + std::to_string(mass) +
        " deviates from 1 beyond 1e-8; refine the summand grids");
  return GridDensity::line(raw.x0, raw.h, std::move(raw.values));
}

void require_convolvable(const GridDensity& a, const GridDensity& b) {
  if (a.geometry() != Geometry::Line1D || b.geometry() != Geometry::Line1D)
    throw std::invalid_argument("convolve: line geometry only");
  if (std::abs(a.spacing() - b.spacing()) > 1e-12 * a.spacing())
    throw std::invalid_argument("convolve: grid spacings must match");
}

}  // namespace

GridDensity convolve(const GridDensity& a, const GridDensity& b) {
  require_convolvable(a, b);
  return finalize_convolution(convolve_direct_raw(a, b));
}

GridDensity convolve_fft(const GridDensity& a, const GridDensity& b) {
  require_convolvable(a, b);
  const ArrayX& av = a.values();
  const ArrayX& bv = b.values();
  const Index na = av.size();
  const Index nb = bv.size();
  const Index full = na + nb - 1;
  Index m = 1;
  while (m < full) m <<= 1;

  std::vector<Real> pa(m, 0.0), pb(m, 0.0);
  Eigen::Map<VectorX>(pa.data(), na) = av.matrix();
  Eigen::Map<VectorX>(pb.data(), nb) = bv.matrix();

  Eigen::FFT<Real> fft;
  std::vector<std::complex<Real>> fa, fb;
  fft.fwd(fa, pa);
  fft.fwd(fb, pb);
  for (Index i = 0; i < m; ++i) fa[i] *= fb[i];
  std::vector<Real> conv;
  fft.inv(conv, fa);

  const Real h = a.spacing();
  ArrayX c(full);
  for (Index k = 0; k < full; ++k) {
    const Index j_lo = std::max<Index>(0, k - nb + 1);
    const Index j_hi = std::min(na - 1, k);
    const Real ends = av(j_lo) * bv(k - j_lo) + av(j_hi) * bv(k - j_hi);
    c(k) = h * (conv[k] - 0.5 * ends);
  }
  return finalize_convolution({a.x0() + b.x0(), h, std::move(c)});
}

EpiReport check_epi(const EpiCase& c, Real tol_rel) {
  GridDensity sum = convolve(c.summands[0], c.summands[1]);
  for (std::size_t i = 2; i < c.summands.size(); ++i)
    sum = convolve(sum, c.summands[i]);

  const Orders& o = c.orders;
  Real lhs = 0.0;
  Real rhs = 0.0;
  switch (c.variant) {
    case EpiVariant::Shannon:
      lhs = shannon_entropy_power(sum);
      for (const GridDensity& u : c.summands) rhs += shannon_entropy_power(u);
      break;
    case EpiVariant::BobkovMarsiglietti:
      lhs = std::pow(b_entropy_power(sum, o.p), c.alpha);
      for (const GridDensity& u : c.summands)
        rhs += std::pow(b_entropy_power(u, o.p), c.alpha);
      break;
    case EpiVariant::SharmaMittal:
      lhs = entropy_power(sum, o);
      for (const GridDensity& u : c.summands) rhs += entropy_power(u, o);
      break;
    case EpiVariant::BobkovChistyakovN: {
      lhs = b_entropy_power(sum, o.p);
      const Real constant =
          std::exp(-1.0) * std::pow(o.p, 1.0 / (o.p - 1.0));
      for (const GridDensity& u : c.summands) rhs += b_entropy_power(u, o.p);
      rhs *= constant;
      break;
    }
  }

  EpiReport r;
  r.variant = c.variant;
  r.p = o.p;
  r.q = o.q;
  r.d = o.d;
  r.alpha = c.alpha;
  r.count = static_cast<int>(c.summands.size());
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  r.rel_margin = r.margin / rhs;
  r.pass = r.margin >= -tol_rel * rhs;
  r.exploratory = c.exploratory;
  return r;
}

}  // namespace entropylab
