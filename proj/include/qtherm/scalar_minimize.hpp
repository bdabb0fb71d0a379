#pragma once

#include <cmath>

namespace qtherm {

struct ScalarMin {
  double x;
  double value;
};

/// Golden-section search on [lo, hi]; stops when the bracket is narrower than
/// tol. Assumes a single minimum inside the bracket.
template <class F>
ScalarMin golden_section_min(F&& f, double lo, double hi, double tol = 1e-10) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = f(d);
    }
  }
  const double mid = (a + b) / 2.0;
  return {mid, f(mid)};
}

/// Sign-change bisection for root finding on [lo, hi]; f(lo) and f(hi) must
/// straddle zero.
template <class F>
double bisect_root(F&& f, double lo, double hi, double tol = 1e-10) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    return std::nan("");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qtherm
