#include <doctest.h>

#include <cmath>

#include "entropylab/orders.hpp"
#include "entropylab/qcalculus.hpp"

using namespace entropylab;

TEST_CASE("q_log matches its closed form away from q = 1") {
  // (s^(1-q) - 1) / (1 - q) evaluated by hand.
  CHECK(q_log(2.0, 0.5) == doctest::Approx(2.0 * (std::sqrt(2.0) - 1.0))
                               .epsilon(1e-14));
  CHECK(q_log(2.0, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(q_log(1.0, 0.3) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(q_log(std::exp(1.0), 1.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("q_log is continuous through q = 1") {
  for (double s : {0.2, 0.9, 1.0, 3.7, 40.0}) {
    const double want = std::log(s);
    CHECK(std::abs(q_log(s, 1.0 + 1e-10) - want) < 1e-8);
    CHECK(std::abs(q_log(s, 1.0 - 1e-10) - want) < 1e-8);
    CHECK(q_log(s, 1.0) == want);
  }
}

TEST_CASE("q_exp inverts q_log") {
  for (double q : {0.3, 0.999, 1.0, 1.5, 2.5}) {
    for (double s : {0.05, 0.4, 1.0, 2.0, 12.0}) {
      CHECK(q_exp(q_log(s, q), q) == doctest::Approx(s).epsilon(1e-12));
    }
  }
}

TEST_CASE("q_exp handles its domain cutoff") {
  // q < 1: 1 + (1-q) s <= 0 means the q-exponential has hit zero.
  CHECK(q_exp(-3.0, 0.5) == 0.0);
  // q > 1: s -> 1/(q-1) is a pole from below.
  CHECK(q_exp(1.0 / 0.5, 1.5) == std::numeric_limits<double>::infinity());
  CHECK(std::isfinite(q_exp(1.999, 1.5)));
}

TEST_CASE("q_log is monotone in its argument") {
  for (double q : {0.5, 1.0, 2.0}) {
    double prev = q_log(0.1, q);
    for (double s : {0.5, 1.0, 2.0, 8.0}) {
      const double cur = q_log(s, q);
      CHECK(cur > prev);
      prev = cur;
    }
  }
}

TEST_CASE("s_pq_from_renyi reproduces a hand value") {
  // R = log(2 sqrt(pi)), q = 3: (1 - exp(-2R)) / 2 = (1 - 1/(4 pi)) / 2.
  const double renyi = std::log(2.0 * std::sqrt(M_PI));
  const double want = (1.0 - 1.0 / (4.0 * M_PI)) / 2.0;
  CHECK(s_pq_from_renyi(renyi, 3.0) == doctest::Approx(want).epsilon(1e-14));
  CHECK(s_pq_from_renyi(renyi, 1.0) == renyi);
}

TEST_CASE("s_pq_from_renyi is continuous through q = 1") {
  const double renyi = 1.2655121234846454;
  CHECK(std::abs(s_pq_from_renyi(renyi, 1.0 + 1e-6) - renyi) < 1e-5);
  CHECK(std::abs(s_pq_from_renyi(renyi, 1.0 - 1e-6) - renyi) < 1e-5);
}

TEST_CASE("s_pq_scalar rejects the degenerate p limit") {
  const Orders near_one(1.0 + 1e-12, 2.0, 1);
  CHECK_THROWS_AS(s_pq_scalar(0.3, near_one), std::domain_error);
  const Orders fine(2.0, 2.0, 1);
  CHECK(std::isfinite(s_pq_scalar(0.3, fine)));
}

TEST_CASE("orders validate their hypotheses") {
  CHECK_THROWS_AS(Orders(2.0, -1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Orders(2.0, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Orders(-1.0, 1.0, 1), std::invalid_argument);  // p <= 1 - 2/d
  CHECK_THROWS_AS(Orders(0.0, 1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(Orders(2.0, 1.0, 0), std::invalid_argument);
  CHECK_NOTHROW(Orders(-0.5, 1.0, 1));
  CHECK_NOTHROW(Orders(0.5, 3.0, 2));

  const Orders o(2.0, 3.0, 2);
  CHECK(o.sigma_q() == doctest::Approx(2.0 / 2 + 3.0 - 1.0));
  CHECK(o.sigma_p() == doctest::Approx(2.0 / 2 + 2.0 - 1.0));
  CHECK(!o.shannon_limit_p());
  CHECK(Orders(1.0 + 1e-10, 1.0, 1).shannon_limit_p());
  CHECK(Orders(2.0, 1.0 + 1e-10, 1).renyi_limit_q());
  CHECK(o.slow_diffusion());
  CHECK(Orders(0.8, 1.0, 1).fast_diffusion());
}
