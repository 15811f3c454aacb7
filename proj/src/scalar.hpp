#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace hyppow {

/// Exact rational field element backed by arbitrary-precision integers.
/// Always stored in lowest terms with a positive denominator (the GMP
/// canonical form, re-established after every operation that needs it).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : v_(q) { canonicalize(); }

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_long(long n) { return Rational(n); }
  static Rational from_ratio(long num, long den) { return Rational(num, den); }

  // Accepts "p", "p/q", and plain decimal literals like "-3.25" or "1e-3"
  // (all of which are exact rationals).
  static std::optional<Rational> parse(std::string_view text);

  friend Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ + y.v_)); }
  friend Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ - y.v_)); }
  friend Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ * y.v_)); }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) raise(ErrorCode::Domain, "rational division by zero");
    return Rational(mpq_class(x.v_ / y.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
  Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }
  Rational& operator*=(const Rational& y) { v_ *= y.v_; return *this; }
  Rational& operator/=(const Rational& y) { *this = *this / y; return *this; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
  friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
  friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
  friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
  friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
  friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Reduced "p/q" (or "p" when the denominator is 1).
  std::string str() const { return v_.get_str(); }
  /// Decimal rendering with the requested number of significant digits.
  std::string decimal(int sig_digits) const;
  double to_double() const { return v_.get_d(); }
  std::complex<double> to_complex() const { return {v_.get_d(), 0.0}; }

  const mpq_class& raw() const { return v_; }
  static constexpr const char* backend_name() { return "rational"; }

 private:
  void canonicalize() { v_.canonicalize(); }
  mpq_class v_;
};

/// Complex double-precision field element. A non-finite result of any
/// operation on finite inputs sets the `overflowed` flag instead of being
/// trusted downstream; the flag is sticky under further arithmetic.
struct Cplx {
  std::complex<double> v{0.0, 0.0};
  bool overflowed = false;

  Cplx() = default;
  Cplx(long n) : v(static_cast<double>(n), 0.0) {}  // NOLINT: implicit by design
  Cplx(double re, double im) : v(re, im) {}
  explicit Cplx(std::complex<double> z) : v(z) {}
  explicit Cplx(const Rational& r) : v(r.to_double(), 0.0) {}

  static Cplx zero() { return Cplx(0); }
  static Cplx one() { return Cplx(1); }
  static Cplx from_long(long n) { return Cplx(n); }
  static Cplx from_ratio(long num, long den) {
    return Cplx(static_cast<double>(num) / static_cast<double>(den), 0.0);
  }

  /// Accepts "re", "imi", "re+imi", "re-imi"; each part is a decimal or
  /// "p/q" literal, e.g. "1.5-2e-3i" or "1/2+1/3i".
  static std::optional<Cplx> parse(std::string_view text);

  bool finite() const { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

  friend Cplx combine(std::complex<double> r, const Cplx& x, const Cplx& y) {
    Cplx out(r);
    out.overflowed = x.overflowed || y.overflowed || !out.finite();
    return out;
  }
  friend Cplx operator+(const Cplx& x, const Cplx& y) { return combine(x.v + y.v, x, y); }
  friend Cplx operator-(const Cplx& x, const Cplx& y) { return combine(x.v - y.v, x, y); }
  friend Cplx operator*(const Cplx& x, const Cplx& y) { return combine(x.v * y.v, x, y); }
  friend Cplx operator/(const Cplx& x, const Cplx& y) { return combine(x.v / y.v, x, y); }
  Cplx operator-() const {
    Cplx out(-v);
    out.overflowed = overflowed;
    return out;
  }
  Cplx& operator+=(const Cplx& y) { *this = *this + y; return *this; }
  Cplx& operator-=(const Cplx& y) { *this = *this - y; return *this; }
  Cplx& operator*=(const Cplx& y) { *this = *this * y; return *this; }
  Cplx& operator/=(const Cplx& y) { *this = *this / y; return *this; }

  friend bool operator==(const Cplx& x, const Cplx& y) { return x.v == y.v; }
  friend bool operator!=(const Cplx& x, const Cplx& y) { return x.v != y.v; }

  bool is_zero() const { return v.real() == 0.0 && v.imag() == 0.0; }
  double abs() const { return std::abs(v); }

  std::string str() const { return str(17); }
  std::string str(int sig_digits) const;
  std::string decimal(int sig_digits) const { return str(sig_digits); }
  double to_double() const { return v.real(); }
  std::complex<double> to_complex() const { return v; }

  static constexpr const char* backend_name() { return "complex"; }
};

inline std::complex<double> to_complex(const Rational& x) { return x.to_complex(); }
inline std::complex<double> to_complex(const Cplx& x) { return x.to_complex(); }

/// Lower-parameter guard shared by F, pFq and the Kummer series: the
/// parameter must not be zero or a negative integer. Exact under the
/// rational backend, within 1e-12 under the complex one.
bool violates_lower_guard(const Rational& c);
bool violates_lower_guard(const Cplx& c);

/// The (a, b; c) of a Gauss hypergeometric series. `checked` enforces the
/// guard on c and throws Error(ParameterGuard) on violation.
template <class F>
struct ParameterTriple {
  F a, b, c;

  static ParameterTriple checked(F a, F b, F c) {
    if (violates_lower_guard(c)) {
      raise(ErrorCode::ParameterGuard,
            "invalid parameter c: zero or a negative integer");
    }
    return ParameterTriple{std::move(a), std::move(b), std::move(c)};
  }
};

/// Rising factorial x(x+1)...(x+k-1); equals 1 for k = 0.
template <class F>
F pochhammer(const F& x, long k) {
  if (k < 0) raise(ErrorCode::InvalidArgument, "pochhammer: negative order");
  F result = F::one();
  F factor = x;
  for (long i = 0; i < k; ++i) {
    result = result * factor;
    factor = factor + F::one();
  }
  return result;
}

}  // namespace hyppow
