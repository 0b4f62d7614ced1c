#pragma once

#include <algorithm>
#include <complex>
#include <string>
#include <type_traits>
#include <utility>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "hankelggr/errors.hpp"

namespace hankelggr {

using Cplx = std::complex<double>;

// Number of significant decimal digits used for a construction job.
// All ExtReal values remember the context they were created under and
// refuse to mix with values from a different one.
class PrecisionContext {
 public:
  explicit PrecisionContext(unsigned digits) : digits_(digits) {
    if (digits < 16)
      throw ValidationError("PrecisionContext: digits must be >= 16, got " +
                            std::to_string(digits));
  }

  unsigned digits() const { return digits_; }

  friend bool operator==(PrecisionContext a, PrecisionContext b) {
    return a.digits_ == b.digits_;
  }
  friend bool operator!=(PrecisionContext a, PrecisionContext b) {
    return !(a == b);
  }

  // digits = max(100, 12n + 20); enough head room for the Chebyshev
  // map at the rule sizes we construct.
  static PrecisionContext for_rule(int n) {
    return PrecisionContext(
        static_cast<unsigned>(std::max(100, 12 * n + 20)));
  }

  // Zero maps need more: the Bessel-weight moments grow factorially.
  static PrecisionContext for_zero_map(int degree) {
    return PrecisionContext(
        static_cast<unsigned>(std::max(150, 15 * degree)));
  }

 private:
  unsigned digits_;
};

namespace detail {

using RawFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

// Sets the thread-local default mpfr precision so that temporaries and
// expression results inside a scope are produced at the right width.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits)
      : saved_(RawFloat::default_precision()) {
    RawFloat::default_precision(digits);
  }
  explicit ScopedPrecision(PrecisionContext ctx)
      : ScopedPrecision(ctx.digits()) {}
  ~ScopedPrecision() { RawFloat::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

}  // namespace detail

// Arbitrary-precision real bound to a PrecisionContext.
class ExtReal {
 public:
  using Raw = detail::RawFloat;

  ExtReal(double v, PrecisionContext ctx) : ctx_(ctx) {
    detail::ScopedPrecision g(ctx);
    v_ = Raw(v);
  }
  ExtReal(long v, PrecisionContext ctx) : ctx_(ctx) {
    detail::ScopedPrecision g(ctx);
    v_ = Raw(v);
  }
  ExtReal(const std::string& v, PrecisionContext ctx) : ctx_(ctx) {
    detail::ScopedPrecision g(ctx);
    v_ = Raw(v);
  }
  ExtReal(Raw v, PrecisionContext ctx) : v_(std::move(v)), ctx_(ctx) {}

  static ExtReal zero(PrecisionContext ctx) { return ExtReal(0.0, ctx); }
  static ExtReal pi(PrecisionContext ctx) {
    detail::ScopedPrecision g(ctx);
    return ExtReal(boost::math::constants::pi<Raw>(), ctx);
  }

  const Raw& raw() const { return v_; }
  PrecisionContext context() const { return ctx_; }
  unsigned digits() const { return ctx_.digits(); }
  double to_double() const { return v_.convert_to<double>(); }

  friend ExtReal operator-(const ExtReal& a) { return ExtReal(-a.v_, a.ctx_); }

#define HANKELGGR_EXTREAL_BINOP(op)                             \
  friend ExtReal operator op(const ExtReal& a, const ExtReal& b) { \
    a.require_same(b);                                          \
    detail::ScopedPrecision g(a.ctx_);                          \
    return ExtReal(a.v_ op b.v_, a.ctx_);                       \
  }
  HANKELGGR_EXTREAL_BINOP(+)
  HANKELGGR_EXTREAL_BINOP(-)
  HANKELGGR_EXTREAL_BINOP(*)
  HANKELGGR_EXTREAL_BINOP(/)
#undef HANKELGGR_EXTREAL_BINOP

  ExtReal& operator+=(const ExtReal& o) { return *this = *this + o; }
  ExtReal& operator-=(const ExtReal& o) { return *this = *this - o; }
  ExtReal& operator*=(const ExtReal& o) { return *this = *this * o; }
  ExtReal& operator/=(const ExtReal& o) { return *this = *this / o; }

  // Mixing with plain numbers is fine: they are context-free exact values.
#define HANKELGGR_EXTREAL_MIXED(op)                                   \
  template <class T, class = std::enable_if_t<std::is_arithmetic_v<T>>> \
  friend ExtReal operator op(const ExtReal& a, T b) {                 \
    return a op ExtReal(static_cast<double>(b), a.ctx_);              \
  }                                                                   \
  template <class T, class = std::enable_if_t<std::is_arithmetic_v<T>>> \
  friend ExtReal operator op(T a, const ExtReal& b) {                 \
    return ExtReal(static_cast<double>(a), b.ctx_) op b;              \
  }
  HANKELGGR_EXTREAL_MIXED(+)
  HANKELGGR_EXTREAL_MIXED(-)
  HANKELGGR_EXTREAL_MIXED(*)
  HANKELGGR_EXTREAL_MIXED(/)
#undef HANKELGGR_EXTREAL_MIXED

  template <class T, class = std::enable_if_t<std::is_arithmetic_v<T>>>
  friend bool operator<(const ExtReal& a, T b) {
    return a.v_ < static_cast<double>(b);
  }
  template <class T, class = std::enable_if_t<std::is_arithmetic_v<T>>>
  friend bool operator>(const ExtReal& a, T b) {
    return a.v_ > static_cast<double>(b);
  }
  template <class T, class = std::enable_if_t<std::is_arithmetic_v<T>>>
  friend bool operator<=(const ExtReal& a, T b) {
    return a.v_ <= static_cast<double>(b);
  }
  template <class T, class = std::enable_if_t<std::is_arithmetic_v<T>>>
  friend bool operator>=(const ExtReal& a, T b) {
    return a.v_ >= static_cast<double>(b);
  }

  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    a.require_same(b);
    return a.v_ < b.v_;
  }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) {
    return !(b < a);
  }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) {
    return !(a < b);
  }
  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    a.require_same(b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const ExtReal& a, const ExtReal& b) {
    return !(a == b);
  }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  friend ExtReal abs(const ExtReal& a) {
    detail::ScopedPrecision g(a.ctx_);
    return ExtReal(abs(a.v_), a.ctx_);
  }
  friend ExtReal sqrt(const ExtReal& a) {
    if (a.v_ < 0) throw ValidationError("ExtReal sqrt of negative value");
    detail::ScopedPrecision g(a.ctx_);
    return ExtReal(sqrt(a.v_), a.ctx_);
  }
  friend ExtReal exp(const ExtReal& a) {
    detail::ScopedPrecision g(a.ctx_);
    return ExtReal(exp(a.v_), a.ctx_);
  }
  friend ExtReal log(const ExtReal& a) {
    if (a.v_ <= 0) throw ValidationError("ExtReal log of nonpositive value");
    detail::ScopedPrecision g(a.ctx_);
    return ExtReal(log(a.v_), a.ctx_);
  }
  friend ExtReal sin(const ExtReal& a) {
    detail::ScopedPrecision g(a.ctx_);
    return ExtReal(sin(a.v_), a.ctx_);
  }
  friend ExtReal cos(const ExtReal& a) {
    detail::ScopedPrecision g(a.ctx_);
    return ExtReal(cos(a.v_), a.ctx_);
  }
  friend ExtReal pow(const ExtReal& a, long k) {
    detail::ScopedPrecision g(a.ctx_);
    return ExtReal(pow(a.v_, k), a.ctx_);
  }
  // Real exponent; base must be positive.
  friend ExtReal pow(const ExtReal& a, const ExtReal& e) {
    a.require_same(e);
    if (a.v_ <= 0)
      throw ValidationError("ExtReal pow with nonpositive base");
    detail::ScopedPrecision g(a.ctx_);
    return ExtReal(pow(a.v_, e.v_), a.ctx_);
  }

  void require_same(const ExtReal& o) const {
    if (ctx_ != o.ctx_)
      throw ValidationError(
          "ExtReal arithmetic between different precision contexts (" +
          std::to_string(ctx_.digits()) + " vs " +
          std::to_string(o.ctx_.digits()) + " digits)");
  }

 private:
  Raw v_;
  PrecisionContext ctx_;
};

// Minimal complex-over-ExtReal; just the operations the root finder and
// the high-precision rule application need.
struct ExtComplex {
  ExtReal re, im;

  ExtComplex(ExtReal r, ExtReal i) : re(std::move(r)), im(std::move(i)) {}
  ExtComplex(double r, double i, PrecisionContext ctx)
      : re(r, ctx), im(i, ctx) {}
  static ExtComplex zero(PrecisionContext ctx) {
    return ExtComplex(0.0, 0.0, ctx);
  }

  PrecisionContext context() const { return re.context(); }
  Cplx to_cplx() const { return Cplx(re.to_double(), im.to_double()); }

  friend ExtComplex operator-(const ExtComplex& a) {
    return ExtComplex(-a.re, -a.im);
  }
  friend ExtComplex operator+(const ExtComplex& a, const ExtComplex& b) {
    return ExtComplex(a.re + b.re, a.im + b.im);
  }
  friend ExtComplex operator-(const ExtComplex& a, const ExtComplex& b) {
    return ExtComplex(a.re - b.re, a.im - b.im);
  }
  friend ExtComplex operator*(const ExtComplex& a, const ExtComplex& b) {
    return ExtComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend ExtComplex operator*(const ExtReal& s, const ExtComplex& b) {
    return ExtComplex(s * b.re, s * b.im);
  }
  friend ExtComplex operator/(const ExtComplex& a, const ExtComplex& b) {
    ExtReal d = b.re * b.re + b.im * b.im;
    return ExtComplex((a.re * b.re + a.im * b.im) / d,
                      (a.im * b.re - a.re * b.im) / d);
  }
  friend ExtComplex operator/(const ExtComplex& a, const ExtReal& s) {
    return ExtComplex(a.re / s, a.im / s);
  }

  ExtComplex& operator+=(const ExtComplex& o) { return *this = *this + o; }
  ExtComplex& operator-=(const ExtComplex& o) { return *this = *this - o; }

  friend ExtComplex conj(const ExtComplex& a) {
    return ExtComplex(a.re, -a.im);
  }
  friend ExtReal abs(const ExtComplex& a) {
    return sqrt(a.re * a.re + a.im * a.im);
  }
  friend ExtComplex exp(const ExtComplex& a) {
    ExtReal m = exp(a.re);
    return ExtComplex(m * cos(a.im), m * sin(a.im));
  }
};

}  // namespace hankelggr
