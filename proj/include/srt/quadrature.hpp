#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace srt {

class quadrature_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

template <class F>
double adapt_simpson(const F& f, double a, double m, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  if (depth <= 0) {
    throw quadrature_error("adaptive quadrature failed to converge");
  }
  return adapt_simpson(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt_simpson(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a,b] to an absolute error target.
template <class F>
double integrate_adaptive(F f, double a, double b, double abs_tol, int max_depth = 48) {
  if (!(std::isfinite(a) && std::isfinite(b) && a <= b)) {
    throw std::domain_error("integration bounds must be finite with a <= b");
  }
  if (!(abs_tol > 0.0)) throw std::domain_error("abs_tol must be > 0");
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adapt_simpson(f, a, m, b, fa, fm, fb, whole, abs_tol, max_depth);
}

}  // namespace srt
