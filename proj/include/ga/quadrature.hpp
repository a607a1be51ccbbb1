#pragma once
// Adaptive Gauss-Kronrod (7,15) quadrature for real- and complex-valued
// integrands on finite intervals.

#include <complex>
#include <functional>

namespace ga {

struct QuadResult {
  std::complex<double> value{0.0, 0.0};
  double error_estimate = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Bisects intervals until the summed Kronrod error estimate drops below
// abs_tol (or max_intervals is exhausted; converged reports which).
QuadResult integrate_gk(const std::function<std::complex<double>(double)>& f,
                        double a, double b, double abs_tol,
                        int max_intervals = 2000);

double integrate_gk_real(const std::function<double(double)>& f, double a,
                         double b, double abs_tol, int max_intervals = 2000);

}  // namespace ga
