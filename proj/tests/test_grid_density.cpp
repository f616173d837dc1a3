#include <doctest.h>

#include <cmath>
#include <random>

#include "entropylab/functionals.hpp"
#include "entropylab/grid_density.hpp"
#include "entropylab/reference_densities.hpp"

using namespace entropylab;

namespace {

GridDensity random_line_density(unsigned seed, Index n = 128) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.1, 2.0);
  ArrayX v(n);
  for (Index i = 0; i < n; ++i) v[i] = dist(rng);
  return GridDensity::line(-4.0, 8.0 / static_cast<Real>(n - 1), v);
}

}  // namespace

TEST_CASE("construction normalizes to unit trapezoid mass") {
  const GridDensity u = random_line_density(7);
  CHECK(u.mass() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(u.renormalization() > 0.0);

  // Interior weights are h, end weights h/2.
  const Real h = u.spacing();
  CHECK(u.weights()[0] == doctest::Approx(0.5 * h));
  CHECK(u.weights()[u.size() - 1] == doctest::Approx(0.5 * h));
  CHECK(u.weights()[1] == doctest::Approx(h));
}

TEST_CASE("construction rejects bad input") {
  ArrayX ok = ArrayX::Constant(32, 1.0);
  CHECK_THROWS_AS(GridDensity::line(0.0, -0.1, ok), std::invalid_argument);
  CHECK_THROWS_AS(GridDensity::line(0.0, 0.0, ok), std::invalid_argument);

  ArrayX tiny = ArrayX::Constant(8, 1.0);
  CHECK_THROWS_AS(GridDensity::line(0.0, 0.1, tiny), std::invalid_argument);

  ArrayX neg = ok;
  neg[5] = -0.5;
  CHECK_THROWS_AS(GridDensity::line(0.0, 0.1, neg), std::invalid_argument);

  ArrayX nan = ok;
  nan[3] = std::numeric_limits<Real>::quiet_NaN();
  CHECK_THROWS_AS(GridDensity::line(0.0, 0.1, nan), std::invalid_argument);

  ArrayX zero = ArrayX::Zero(32);
  CHECK_THROWS_AS(GridDensity::line(0.0, 0.1, zero), std::invalid_argument);

  // Radial grids start at the origin; line grids are one-dimensional.
  CHECK_THROWS_AS(GridDensity(Geometry::Radial, 2, 1.0, 0.1, ok),
                  std::invalid_argument);
  CHECK_THROWS_AS(GridDensity(Geometry::Line1D, 2, 0.0, 0.1, ok),
                  std::invalid_argument);

  // Roundoff-scale negatives are clamped, not fatal.
  ArrayX dusty = ok;
  dusty[4] = -1e-14;
  CHECK_NOTHROW(GridDensity::line(0.0, 0.1, dusty));
}

TEST_CASE("sphere surface areas match the closed forms") {
  CHECK(sphere_surface(1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sphere_surface(2) == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
  CHECK(sphere_surface(3) == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
  CHECK(sphere_surface(4) ==
        doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-14));
}

TEST_CASE("radial quadrature integrates monomials to second order") {
  // integral over the ball of radius 1 of |x|^2 in d = 3:
  // 4 pi int_0^1 r^4 dr = 4 pi / 5.
  const Index n = 2001;
  const Real h = 1.0 / static_cast<Real>(n - 1);
  const ArrayX w = quadrature_weights(Geometry::Radial, 3, h, n);
  ArrayX r2(n);
  for (Index i = 0; i < n; ++i) {
    const Real r = static_cast<Real>(i) * h;
    r2[i] = r * r;
  }
  CHECK((w * r2).sum() ==
        doctest::Approx(4.0 * M_PI / 5.0).epsilon(1e-6));
  // Volume of the unit ball: 4 pi / 3.
  CHECK(w.sum() == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-6));
}

TEST_CASE("nodes are uniformly spaced from x0") {
  const GridDensity u = random_line_density(3, 64);
  const ArrayX x = u.nodes();
  CHECK(x[0] == doctest::Approx(-4.0));
  CHECK(x[1] - x[0] == doctest::Approx(u.spacing()).epsilon(1e-14));
  CHECK(x[63] == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("dilation transforms the functionals exactly") {
  const GridDensity u = gaussian_mixture_line(
      {{0.6, -1.0, 0.7}, {0.4, 1.5, 1.2}}, 10.0, 512);
  for (Real lambda : {0.5, 2.0, 5.0}) {
    const GridDensity v = dilate(u, lambda);
    CHECK(v.mass() == doctest::Approx(1.0).epsilon(1e-13));
    for (Real p : {0.8, 2.0, 3.0}) {
      // M_p(u_lambda) = lambda^(d(p-1)) M_p(u) node-for-node: dilation
      // moves nodes and rescales values, so quadrature sums are shared.
      const Real want = std::pow(lambda, p - 1.0) * power_moment(u, p);
      CHECK(power_moment(v, p) == doctest::Approx(want).epsilon(1e-12));
      // R_p(u_lambda) = R_p(u) - d log lambda.
      CHECK(renyi_entropy(v, p) ==
            doctest::Approx(renyi_entropy(u, p) - std::log(lambda))
                .epsilon(1e-10));
    }
  }
}

TEST_CASE("translation moves nodes and nothing else") {
  const GridDensity u = gaussian_line(1.0, 8.0, 256);
  const GridDensity v = translate(u, 2.5);
  CHECK(v.x0() == doctest::Approx(u.x0() + 2.5));
  CHECK((v.values() - u.values()).abs().maxCoeff() == 0.0);
  CHECK(power_moment(v, 2.0) == power_moment(u, 2.0));
}

TEST_CASE("relative floor returns a pedestal density") {
  const GridDensity u = gaussian_line(1.0, 8.0, 256);
  const GridDensity v = apply_relative_floor(u, 1e-3);
  CHECK(v.mass() == doctest::Approx(1.0).epsilon(1e-14));
  // After renormalization the floor level is still within a few parts in
  // a thousand of the requested relative height.
  CHECK(v.values().minCoeff() ==
        doctest::Approx(1e-3 * v.max_value()).epsilon(1e-2));
  CHECK(apply_relative_floor(u, 0.0).values().minCoeff() ==
        doctest::Approx(u.values().minCoeff()));
}
