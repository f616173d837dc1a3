#include <doctest.h>

#include <cmath>
#include <vector>

#include "entropylab/epi.hpp"
#include "entropylab/errors.hpp"
#include "entropylab/functionals.hpp"
#include "entropylab/grid_density.hpp"
#include "entropylab/reference_densities.hpp"

using namespace entropylab;

namespace {

// Summands for convolution must share spacing; everything here lives on
// h = 1/256.
GridDensity unit_gaussian() { return gaussian_line(1.0, 8.0, 4097); }

}  // namespace

TEST_CASE("self-convolving a box gives the exact triangle") {
  const GridDensity box = uniform_line(0.0, 1.0, 257);
  const GridDensity tri = convolve(box, box);
  REQUIRE(tri.size() == 513);
  CHECK(tri.x0() == doctest::Approx(0.0));
  // The lag sum with half-weight ends integrates piecewise-linear
  // integrands exactly, so every nodal value is the true triangle.
  for (Index k = 0; k < tri.size(); ++k) {
    const Real x = tri.nodes()[k];
    const Real want = x <= 1.0 ? x : 2.0 - x;
    CHECK(std::abs(tri.values()[k] - want) < 1e-13);
  }
  CHECK(std::abs(tri.mass() - 1.0) < 1e-13);
}

TEST_CASE("convolving Gaussians gives the summed-variance Gaussian") {
  const GridDensity g = unit_gaussian();
  const GridDensity sum = convolve(g, g);
  const ArrayX x = sum.nodes();
  const ArrayX want = (-x.square() / 4.0).exp() / std::sqrt(4.0 * M_PI);
  CHECK(sum.integrate((sum.values() - want).abs()) < 1e-6);
  CHECK(std::abs(sum.renormalization() - 1.0) < 1e-8);
}

TEST_CASE("fft convolution agrees with the direct lag sum") {
  const GridDensity g = gaussian_line(0.5, 6.0, 3073);
  const GridDensity u = uniform_line(-0.5, 1.0, 257);
  const GridDensity direct = convolve(g, u);
  const GridDensity fast = convolve_fft(g, u);
  REQUIRE(direct.size() == fast.size());
  CHECK(direct.x0() == doctest::Approx(fast.x0()).epsilon(1e-14));
  CHECK((direct.values() - fast.values()).abs().maxCoeff() < 1e-10);
}

TEST_CASE("convolution validates its inputs") {
  const GridDensity a = uniform_line(0.0, 1.0, 257);   // h = 1/256
  const GridDensity b = uniform_line(0.0, 1.0, 129);   // h = 1/128
  CHECK_THROWS_AS(convolve(a, b), std::invalid_argument);
  CHECK_THROWS_AS(EpiCase::shannon({a, b}), std::invalid_argument);
  CHECK_THROWS_AS(EpiCase::shannon({a}), std::invalid_argument);
}

TEST_CASE("shannon inequality is tight on iid gaussians") {
  const GridDensity g = unit_gaussian();
  const EpiReport r = check_epi(EpiCase::shannon({g, g}));
  CHECK(r.pass);
  CHECK_FALSE(r.exploratory);
  CHECK(std::abs(r.rel_margin) < 1e-6);
  // Both sides are 2 * 2 pi e up to quadrature.
  CHECK(r.rhs == doctest::Approx(4.0 * M_PI * std::exp(1.0)).epsilon(1e-6));
}

TEST_CASE("shannon inequality is strict for a non-gaussian summand") {
  const EpiReport r = check_epi(
      EpiCase::shannon({unit_gaussian(), uniform_line(-0.5, 1.0, 257)}));
  CHECK(r.pass);
  CHECK(r.rel_margin > 1e-3);
}

TEST_CASE("shannon inequality is tight again when one summand is near-delta") {
  // A sharp Gaussian on the shared grid: the sum of two Gaussians stays
  // the equality case at any scale separation the grid resolves.
  const GridDensity sharp = gaussian_line(4e-4, 0.5, 257);
  const EpiReport r = check_epi(EpiCase::shannon({unit_gaussian(), sharp}));
  CHECK(r.pass);
  CHECK(std::abs(r.rel_margin) < 1e-4);
}

TEST_CASE("renyi power inequality holds at the threshold exponent") {
  const Real p = 2.0;
  const Real alpha = 0.5 * (p + 1.0);
  const GridDensity g = unit_gaussian();
  const EpiReport gg =
      check_epi(EpiCase::bobkov_marsiglietti(p, alpha, {g, g}));
  CHECK(gg.pass);
  CHECK(gg.margin >= 0.0);

  const GridDensity u = uniform_line(0.0, 1.0, 257);
  const EpiReport uu =
      check_epi(EpiCase::bobkov_marsiglietti(p, alpha, {u, u}));
  CHECK(uu.pass);
  // Boxes sit strictly inside: lhs = (1/integral(tri^2))^(2a/2) = 2.25^1.5,
  // rhs = 2.
  CHECK(uu.lhs == doctest::Approx(std::pow(2.25, 1.5)).epsilon(1e-4));
  CHECK(uu.rhs == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(uu.rel_margin > 0.5);
  CHECK(uu.rel_margin < 0.8);

  // The margin is continuous in the exponent.
  const EpiReport nudged =
      check_epi(EpiCase::bobkov_marsiglietti(p, alpha + 1e-6, {u, u}));
  CHECK(std::abs(nudged.rel_margin - uu.rel_margin) < 1e-4);

  CHECK_THROWS_AS(EpiCase::bobkov_marsiglietti(p, 1.2, {u, u}),
                  std::invalid_argument);
  CHECK_THROWS_AS(EpiCase::bobkov_marsiglietti(0.9, 2.0, {u, u}),
                  std::invalid_argument);
  CHECK_THROWS_AS(EpiCase::bobkov_marsiglietti(p, alpha, {u, u, u}),
                  std::invalid_argument);
}

TEST_CASE("two-parameter form coincides with the power form when q = 2a - 1") {
  const GridDensity g = unit_gaussian();
  const EpiReport sm =
      check_epi(EpiCase::sharma_mittal(Orders(2.0, 2.0, 1), {g, g}));
  const EpiReport bm =
      check_epi(EpiCase::bobkov_marsiglietti(2.0, 1.5, {g, g}));
  CHECK_FALSE(sm.exploratory);
  CHECK(sm.alpha == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(sm.lhs == doctest::Approx(bm.lhs).epsilon(1e-12));
  CHECK(sm.rhs == doctest::Approx(bm.rhs).epsilon(1e-12));
  CHECK(sm.rel_margin == doctest::Approx(bm.rel_margin).epsilon(1e-10));
}

TEST_CASE("parameter points without a theorem are labeled exploratory") {
  const GridDensity g = gaussian_line(1.0, 8.0, 1025);
  // q = 1 at p = 2 maps to alpha = 1 < (p+1)/2.
  CHECK(EpiCase::sharma_mittal(Orders(2.0, 1.0, 1), {g, g}).exploratory);
  // The Shannon point carries the classical theorem.
  CHECK_FALSE(EpiCase::sharma_mittal(Orders(1.0, 1.0, 1), {g, g}).exploratory);
  CHECK(check_epi(EpiCase::sharma_mittal(Orders(1.0, 1.0, 1), {g, g})).pass);
}

TEST_CASE("three-box sum bound reproduces the frozen reference numbers") {
  const GridDensity u = uniform_line(0.0, 1.0, 257);
  const EpiReport r = check_epi(EpiCase::bobkov_chistyakov(2.0, {u, u, u}));
  CHECK(r.pass);
  CHECK_FALSE(r.exploratory);
  // integral of the squared quadratic spline is 11/20, so lhs = 1/0.55^2;
  // each box has unit power, so rhs = 3 * (1/e) * 2.
  CHECK(r.lhs == doctest::Approx(3.305785123966942).epsilon(1e-3));
  CHECK(r.rhs == doctest::Approx(2.2072766470286553).epsilon(1e-9));
  CHECK(r.rel_margin == doctest::Approx(0.4977).epsilon(2e-3));

  CHECK(EpiCase::bobkov_chistyakov(2.0, {u, u}).exploratory);
  CHECK_THROWS_AS(EpiCase::bobkov_chistyakov(1.0, {u, u, u}),
                  std::invalid_argument);
}

TEST_CASE("margins ignore where the summands are centered") {
  const GridDensity g = unit_gaussian();
  const GridDensity u = uniform_line(-0.5, 1.0, 257);
  const EpiReport base = check_epi(EpiCase::shannon({g, u}));
  const EpiReport moved =
      check_epi(EpiCase::shannon({g, translate(u, 0.7)}));
  CHECK(moved.lhs == doctest::Approx(base.lhs).epsilon(1e-12));
  CHECK(moved.rel_margin == doctest::Approx(base.rel_margin).epsilon(1e-12));
}

TEST_CASE("variant names render as stable strings") {
  CHECK(to_string(EpiVariant::Shannon) == "Shannon");
  CHECK(to_string(EpiVariant::BobkovChistyakovN) == "BobkovChistyakovN");
}
