#pragma once

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "hankelggr/errors.hpp"
#include "hankelggr/precision.hpp"

namespace hankelggr {

enum class SpecialKind { J, Y, I, K, StruveH, Gamma };

namespace detail {

inline bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x) && std::abs(x) < 1e15;
}

// 1/Gamma(x) in double, zero at the poles.
inline double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 0.5) return 1.0 / std::tgamma(x);
  // reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x)/pi
  return std::tgamma(1.0 - x) * std::sin(M_PI * x) / M_PI;
}

// cos(q*pi/2) and sin(q*pi/2) for integer q, exact.
inline int cos_halfturns(long q) {
  switch (((q % 4) + 4) % 4) {
    case 0: return 1;
    case 2: return -1;
    default: return 0;
  }
}
inline int sin_halfturns(long q) {
  switch (((q % 4) + 4) % 4) {
    case 1: return 1;
    case 3: return -1;
    default: return 0;
  }
}

// exp(i q pi/2) for integer q.
inline Cplx unit_quarter_phase(long q) {
  return Cplx(cos_halfturns(q), sin_halfturns(q));
}

}  // namespace detail

// Gamma(a)/Gamma(b); returns exactly 0 when b sits at a pole of Gamma.
inline ExtReal gamma_ratio(double a, double b, PrecisionContext ctx) {
  if (detail::is_nonpositive_integer(a))
    throw ValidationError("gamma_ratio: Gamma pole in numerator at a = " +
                          std::to_string(a));
  if (detail::is_nonpositive_integer(b)) return ExtReal::zero(ctx);
  detail::ScopedPrecision g(ctx);
  using Raw = ExtReal::Raw;
  return ExtReal(boost::math::tgamma(Raw(a)) / boost::math::tgamma(Raw(b)),
                 ctx);
}

inline double gamma_ratio_d(double a, double b) {
  return gamma_ratio(a, b, PrecisionContext(30)).to_double();
}

inline ExtReal ext_gamma(const ExtReal& x) {
  detail::ScopedPrecision g(x.context());
  if (x.raw() <= 0 && x.raw() == floor(x.raw()))
    throw ValidationError("ext_gamma: pole at nonpositive integer");
  return ExtReal(boost::math::tgamma(x.raw()), x.context());
}

inline double bessel_j(double nu, double x) {
  if (x < 0) throw ValidationError("bessel_j: x must be >= 0");
  return boost::math::cyl_bessel_j(nu, x);
}

inline double bessel_y(double nu, double x) {
  if (x <= 0) throw ValidationError("bessel_y: x must be > 0");
  return boost::math::cyl_neumann(nu, x);
}

inline double bessel_i(double nu, double x) {
  if (x < 0) throw ValidationError("bessel_i: x must be >= 0");
  return boost::math::cyl_bessel_i(nu, x);
}

inline double bessel_k(double nu, double x) {
  if (x <= 0) throw ValidationError("bessel_k: x must be > 0");
  return boost::math::cyl_bessel_k(nu, x);
}

// Modified Bessel I_nu by its ascending series, at full context precision.
// Intended for moderate arguments (terms are positive, no cancellation).
inline ExtReal bessel_i_ext(double nu, const ExtReal& x) {
  if (x.to_double() < 0 || nu < 0)
    throw ValidationError("bessel_i_ext: needs x >= 0 and nu >= 0");
  PrecisionContext ctx = x.context();
  detail::ScopedPrecision g(ctx);
  using Raw = ExtReal::Raw;
  Raw half = x.raw() / 2;
  Raw q = half * half;
  Raw term = pow(half, Raw(nu)) / boost::math::tgamma(Raw(nu + 1.0));
  if (x.is_zero()) return ExtReal(nu == 0.0 ? Raw(1) : Raw(0), ctx);
  Raw sum = term;
  Raw eps = pow(Raw(10), -static_cast<long>(ctx.digits()) - 5);
  for (int k = 1; k < 100000; ++k) {
    term *= q / (k * (nu + k));
    sum += term;
    if (term < eps * sum) return ExtReal(sum, ctx);
  }
  throw NumericalError("bessel_i_ext: series did not converge");
}

namespace detail {

// Struve H power series at scaled extended precision. The series
// alternates and the largest term exceeds the result by roughly e^x,
// so the working precision grows with x.
inline double struve_series(double nu, double x) {
  unsigned digits = static_cast<unsigned>(30 + x);
  PrecisionContext ctx(digits);
  ScopedPrecision g(ctx);
  using Raw = ExtReal::Raw;
  Raw half = Raw(x) / 2;
  Raw q = -half * half;
  // term_k = (-1)^k (x/2)^{2k+nu+1} / (Gamma(k+3/2) Gamma(k+nu+3/2))
  Raw term = pow(half, Raw(nu + 1.0)) /
             (boost::math::tgamma(Raw(1.5)) * boost::math::tgamma(Raw(nu + 1.5)));
  Raw sum = term;
  for (int k = 1; k < 10000; ++k) {
    term *= q / ((k + 0.5) * (nu + k + 0.5));
    sum += term;
    if (abs(term) < 1e-25 * (abs(sum) + Raw(1e-300))) break;
  }
  return sum.convert_to<double>();
}

// Large-argument form: H_nu(x) = Y_nu(x) + asymptotic correction series,
// truncated at its smallest term.
inline double struve_asymptotic(double nu, double x) {
  double sum = 0.0;
  double best = std::numeric_limits<double>::infinity();
  double half = x / 2.0;
  for (int k = 0; k < 60; ++k) {
    double term = std::tgamma(k + 0.5) * rgamma(nu + 0.5 - k) *
                  std::pow(half, nu - 2.0 * k - 1.0);
    if (std::abs(term) >= best) break;
    best = std::abs(term);
    sum += term;
  }
  return bessel_y(nu, x) + sum / M_PI;
}

}  // namespace detail

// Struve function H_nu(x) for x >= 0, nu >= -1.5.
inline double struve_h(double nu, double x) {
  if (x < 0) throw ValidationError("struve_h: x must be >= 0");
  if (nu < -1.5) throw ValidationError("struve_h: order must be >= -1.5");
  if (x == 0.0) {
    if (nu > -1.0) return 0.0;
    if (nu == -1.0) return 2.0 / M_PI;  // H_{-1}(0)
    throw ValidationError("struve_h: x = 0 not in the domain for this order");
  }
  return x <= 40.0 ? detail::struve_series(nu, x)
                   : detail::struve_asymptotic(nu, x);
}

inline double special_eval(SpecialKind kind, double order, double x) {
  switch (kind) {
    case SpecialKind::J: return bessel_j(order, x);
    case SpecialKind::Y: return bessel_y(order, x);
    case SpecialKind::I: return bessel_i(order, x);
    case SpecialKind::K: return bessel_k(order, x);
    case SpecialKind::StruveH: return struve_h(order, x);
    case SpecialKind::Gamma:
      if (detail::is_nonpositive_integer(x))
        throw ValidationError("Gamma pole at " + std::to_string(x));
      return std::tgamma(x);
  }
  throw ValidationError("special_eval: unknown kind");
}

}  // namespace hankelggr
