#include "ga/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace ga {

namespace {

// Kronrod-15 abscissae on [-1, 1] (odd entries are the embedded Gauss-7
// nodes) and the matching weights.
constexpr double kXgk[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,                0.207784955007898,
    0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};

constexpr double kWgk[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};

constexpr double kWg[7] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469,
                           0.381830050505119, 0.279705391489277,
                           0.129484966168870};

struct Panel {
  double a, b;
  std::complex<double> value;
  double error;
};

Panel evaluate_panel(const std::function<std::complex<double>(double)>& f,
                     double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  std::complex<double> kronrod{0.0, 0.0};
  std::complex<double> gauss{0.0, 0.0};
  for (int i = 0; i < 15; ++i) {
    const std::complex<double> fx = f(c + h * kXgk[i]);
    kronrod += kWgk[i] * fx;
    if (i % 2 == 1) gauss += kWg[i / 2] * fx;
  }
  kronrod *= h;
  gauss *= h;
  const double diff = std::abs(kronrod - gauss);
  // Standard QUADPACK-style error sharpening.
  const double err = diff * std::min(1.0, std::pow(200.0 * diff, 1.5));
  return Panel{a, b, kronrod, err > 0.0 ? err : diff};
}

}  // namespace

QuadResult integrate_gk(const std::function<std::complex<double>(double)>& f,
                        double a, double b, double abs_tol,
                        int max_intervals) {
  QuadResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  auto worse = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> heap(worse);
  heap.push(evaluate_panel(f, a, b));
  result.evaluations = 15;
  double total_error = heap.top().error;
  std::complex<double> total_value = heap.top().value;
  int panels = 1;
  while (total_error > abs_tol && panels < max_intervals) {
    Panel top = heap.top();
    heap.pop();
    const double mid = 0.5 * (top.a + top.b);
    if (mid == top.a || mid == top.b) {
      // Interval no longer bisectable in double precision.
      heap.push(top);
      break;
    }
    Panel left = evaluate_panel(f, top.a, mid);
    Panel right = evaluate_panel(f, mid, top.b);
    result.evaluations += 30;
    total_value += left.value + right.value - top.value;
    total_error += left.error + right.error - top.error;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  result.value = total_value;
  result.error_estimate = total_error;
  result.converged = total_error <= abs_tol;
  return result;
}

double integrate_gk_real(const std::function<double(double)>& f, double a,
                         double b, double abs_tol, int max_intervals) {
  auto wrapped = [&f](double x) { return std::complex<double>(f(x), 0.0); };
  return integrate_gk(wrapped, a, b, abs_tol, max_intervals).value.real();
}

}  // namespace ga
