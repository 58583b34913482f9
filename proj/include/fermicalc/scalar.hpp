#pragma once

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fermicalc {

using Rational = mpq_class;

/// Thrown for division by zero and inversion of singular matrices.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exact element of Q(i, sqrt2), stored as (a + b i) + (c + d i) sqrt2
/// with every rational kept in lowest terms.
///
/// Since sqrt2 is not in Q(i), the representation is unique, so structural
/// equality is field equality.
class ExactScalar {
 public:
  static constexpr bool is_exact = true;

  ExactScalar() = default;
  ExactScalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  explicit ExactScalar(Rational re, Rational im = 0, Rational sqrt2_re = 0,
                       Rational sqrt2_im = 0);

  static ExactScalar imag_unit() { return ExactScalar(0, 1); }
  static ExactScalar sqrt2() { return ExactScalar(0, 0, 1); }
  static ExactScalar rational(long num, long den);
  static ExactScalar embed(const ExactScalar& x) { return x; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  const Rational& sqrt2_re() const { return sqrt2_re_; }
  const Rational& sqrt2_im() const { return sqrt2_im_; }

  bool is_zero() const;
  bool is_real() const { return im_ == 0 && sqrt2_im_ == 0; }
  /// True when the value is a rational number (no i, no sqrt2 part).
  bool is_rational() const { return im_ == 0 && sqrt2_re_ == 0 && sqrt2_im_ == 0; }

  ExactScalar conj() const;
  ExactScalar inverse() const;

  std::complex<double> to_complex() const;
  double magnitude() const { return std::abs(to_complex()); }

  /// Renders as "a+bi+(c+di)sqrt2", dropping vanishing parts (see scalar.cpp).
  std::string to_string() const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& y);
  ExactScalar& operator-=(const ExactScalar& y);
  ExactScalar& operator*=(const ExactScalar& y);
  ExactScalar& operator/=(const ExactScalar& y);

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }
  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.re_ == y.re_ && x.im_ == y.im_ && x.sqrt2_re_ == y.sqrt2_re_ &&
           x.sqrt2_im_ == y.sqrt2_im_;
  }
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

 private:
  void canonicalize();

  Rational re_;
  Rational im_;
  Rational sqrt2_re_;
  Rational sqrt2_im_;
};

/// Complex double-precision backend. Comparisons go through approx_equal.
class FloatScalar {
 public:
  static constexpr bool is_exact = false;

  FloatScalar() = default;
  FloatScalar(long value) : z_(static_cast<double>(value)) {}  // NOLINT(google-explicit-constructor)
  explicit FloatScalar(std::complex<double> z) : z_(z) {}
  FloatScalar(double re, double im) : z_(re, im) {}

  static FloatScalar imag_unit() { return FloatScalar(0.0, 1.0); }
  static FloatScalar sqrt2();
  static FloatScalar rational(long num, long den);
  static FloatScalar embed(const ExactScalar& x) { return FloatScalar(x.to_complex()); }

  std::complex<double> value() const { return z_; }

  bool is_zero() const { return z_ == std::complex<double>(); }
  bool is_real() const { return z_.imag() == 0.0; }
  bool is_rational() const { return is_real(); }

  FloatScalar conj() const { return FloatScalar(std::conj(z_)); }
  FloatScalar inverse() const;

  std::complex<double> to_complex() const { return z_; }
  double magnitude() const { return std::abs(z_); }

  /// Renders as "re+imi" with 12 significant digits.
  std::string to_string() const;

  FloatScalar operator-() const { return FloatScalar(-z_); }
  FloatScalar& operator+=(const FloatScalar& y) { z_ += y.z_; return *this; }
  FloatScalar& operator-=(const FloatScalar& y) { z_ -= y.z_; return *this; }
  FloatScalar& operator*=(const FloatScalar& y) { z_ *= y.z_; return *this; }
  FloatScalar& operator/=(const FloatScalar& y);

  friend FloatScalar operator+(FloatScalar x, const FloatScalar& y) { return x += y; }
  friend FloatScalar operator-(FloatScalar x, const FloatScalar& y) { return x -= y; }
  friend FloatScalar operator*(FloatScalar x, const FloatScalar& y) { return x *= y; }
  friend FloatScalar operator/(FloatScalar x, const FloatScalar& y) { return x /= y; }
  friend bool operator==(const FloatScalar& x, const FloatScalar& y) { return x.z_ == y.z_; }
  friend bool operator!=(const FloatScalar& x, const FloatScalar& y) { return !(x == y); }

 private:
  std::complex<double> z_;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// Exact backend: component-wise equality, `tol` is ignored.
bool approx_equal(const ExactScalar& x, const ExactScalar& y, double tol = 0.0);
/// |x - y| <= tol * max(1, |x|, |y|).
bool approx_equal(const FloatScalar& x, const FloatScalar& y, double tol = kDefaultTolerance);

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);
std::ostream& operator<<(std::ostream& os, const FloatScalar& x);

/// Parses "p" or "p/q" (optional leading '-') into a reduced rational.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);

template <class F>
concept Field = requires(const F& x, const ExactScalar& e) {
  { F::is_exact } -> std::convertible_to<bool>;
  { F::embed(e) } -> std::same_as<F>;
  { x.conj() } -> std::same_as<F>;
  { x.is_zero() } -> std::convertible_to<bool>;
  { x.magnitude() } -> std::convertible_to<double>;
  { x * x } -> std::same_as<F>;
  { x / x } -> std::same_as<F>;
};

}  // namespace fermicalc
