#ifndef ENTROPYLAB_TESTS_ORACLES_HPP
#define ENTROPYLAB_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>

// Expected values computed independently of the library: closed-form
// Gaussian moments and a plain adaptive Simpson integrator over analytic
// integrands. Nothing here touches the grid code under test.
namespace oracle {

inline double simpson_panel(const std::function<double(double)>& f, double a,
                            double m, double b, double fa, double fm,
                            double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adapt(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb, double whole, double tol,
                    int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson_panel(f, a, lm, m, fa, flm, fm);
  const double right = simpson_panel(f, m, rm, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adapt(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

// Adaptive Simpson with Richardson correction.
inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-12) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = simpson_panel(f, a, m, b, fa, fm, fb);
  return adapt(f, a, b, fa, fm, fb, whole, tol, 48);
}

// One-dimensional Gaussian with variance s2, centered at zero.
inline double gaussian_pdf(double x, double s2) {
  return std::exp(-x * x / (2.0 * s2)) / std::sqrt(2.0 * M_PI * s2);
}

// integral of phi^p = (2 pi s2)^((1-p)/2) / sqrt(p), and its d-dim version.
inline double gaussian_mp(double p, double s2, int d = 1) {
  return std::pow(2.0 * M_PI * s2, 0.5 * d * (1.0 - p)) /
         std::pow(p, 0.5 * d);
}

inline double gaussian_renyi(double p, double s2, int d = 1) {
  return std::log(gaussian_mp(p, s2, d)) / (1.0 - p);
}

inline double gaussian_shannon(double s2, int d = 1) {
  return 0.5 * d * std::log(2.0 * M_PI * M_E * s2);
}

}  // namespace oracle

#endif  // ENTROPYLAB_TESTS_ORACLES_HPP
