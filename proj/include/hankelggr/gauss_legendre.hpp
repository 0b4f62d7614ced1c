#pragma once

#include <cmath>
#include <vector>

#include "hankelggr/errors.hpp"
#include "hankelggr/precision.hpp"

namespace hankelggr {

template <class Real>
struct GLRule {
  std::vector<Real> nodes;    // on (-1, 1), ascending
  std::vector<Real> weights;
};

namespace detail {

inline double gl_make_real(double v, const double&) { return v; }
inline ExtReal gl_make_real(double v, const ExtReal& like) {
  return ExtReal(v, like.context());
}
inline double gl_eps(const double&) { return 1e-15; }
inline ExtReal gl_eps(const ExtReal& like) {
  PrecisionContext ctx = like.context();
  return pow(ExtReal(10.0, ctx), -static_cast<long>(ctx.digits()) + 2);
}

}  // namespace detail

// Gauss-Legendre nodes/weights by Newton iteration on P_n, started from
// the Chebyshev-angle estimates. `like` fixes the working precision.
template <class Real>
GLRule<Real> gauss_legendre(int n, const Real& like) {
  if (n < 1) throw ValidationError("gauss_legendre: n must be >= 1");
  GLRule<Real> rule;
  rule.nodes.assign(n, detail::gl_make_real(0.0, like));
  rule.weights.assign(n, detail::gl_make_real(0.0, like));
  const Real one = detail::gl_make_real(1.0, like);
  const Real eps = detail::gl_eps(like);
  for (int i = 0; i < n; ++i) {
    Real x = detail::gl_make_real(
        std::cos(M_PI * (i + 0.75) / (n + 0.5)), like);
    Real dp = one;
    for (int iter = 0; iter < 200; ++iter) {
      // evaluate P_n and P_{n-1} by the standard recurrence
      Real p0 = one, p1 = x;
      for (int k = 1; k < n; ++k) {
        Real p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - one);
      Real dx = p1 / dp;
      x = x - dx;
      if (abs(dx) < eps) break;
    }
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2 * one / ((one - x * x) * dp * dp);
  }
  return rule;
}

inline GLRule<double> gauss_legendre(int n) { return gauss_legendre(n, 0.0); }

// Integrates f over [a, b] with a single mapped rule application.
template <class Real, class F>
auto gl_apply(const GLRule<Real>& rule, F&& f, const Real& a, const Real& b) {
  Real half = (b - a) / 2, mid = (a + b) / 2;
  auto acc = rule.weights[0] * f(mid + half * rule.nodes[0]);
  for (size_t i = 1; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * acc;
}

}  // namespace hankelggr
