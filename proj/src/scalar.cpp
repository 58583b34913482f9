#include "fermicalc/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace fermicalc {

namespace {

// Gaussian-rational helpers: (a + b i).
void gauss_mul(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
               Rational& out_re, Rational& out_im) {
  Rational re = a * c - b * d;
  Rational im = a * d + b * c;
  out_re = std::move(re);
  out_im = std::move(im);
}

std::string gaussian_to_string(const Rational& re, const Rational& im) {
  if (im == 0) return rational_to_string(re);
  std::string out = rational_to_string(re);
  if (im < 0) {
    out += "-" + rational_to_string(-im);
  } else {
    out += "+" + rational_to_string(im);
  }
  return out + "i";
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12G", x == 0.0 ? 0.0 : x);
  return buf;
}

}  // namespace

ExactScalar::ExactScalar(Rational re, Rational im, Rational sqrt2_re, Rational sqrt2_im)
    : re_(std::move(re)), im_(std::move(im)), sqrt2_re_(std::move(sqrt2_re)),
      sqrt2_im_(std::move(sqrt2_im)) {
  canonicalize();
}

ExactScalar ExactScalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational literal with zero denominator");
  return ExactScalar(Rational(num, den));
}

void ExactScalar::canonicalize() {
  re_.canonicalize();
  im_.canonicalize();
  sqrt2_re_.canonicalize();
  sqrt2_im_.canonicalize();
}

bool ExactScalar::is_zero() const {
  return re_ == 0 && im_ == 0 && sqrt2_re_ == 0 && sqrt2_im_ == 0;
}

ExactScalar ExactScalar::conj() const {
  ExactScalar out = *this;
  out.im_ = -out.im_;
  out.sqrt2_im_ = -out.sqrt2_im_;
  return out;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  out.re_ = -out.re_;
  out.im_ = -out.im_;
  out.sqrt2_re_ = -out.sqrt2_re_;
  out.sqrt2_im_ = -out.sqrt2_im_;
  return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& y) {
  re_ += y.re_;
  im_ += y.im_;
  sqrt2_re_ += y.sqrt2_re_;
  sqrt2_im_ += y.sqrt2_im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& y) {
  re_ -= y.re_;
  im_ -= y.im_;
  sqrt2_re_ -= y.sqrt2_re_;
  sqrt2_im_ -= y.sqrt2_im_;
  return *this;
}

// (p + q sqrt2)(r + s sqrt2) = (pr + 2qs) + (ps + qr) sqrt2, p..s Gaussian.
ExactScalar& ExactScalar::operator*=(const ExactScalar& y) {
  Rational pr_re, pr_im, qs_re, qs_im, ps_re, ps_im, qr_re, qr_im;
  gauss_mul(re_, im_, y.re_, y.im_, pr_re, pr_im);
  gauss_mul(sqrt2_re_, sqrt2_im_, y.sqrt2_re_, y.sqrt2_im_, qs_re, qs_im);
  gauss_mul(re_, im_, y.sqrt2_re_, y.sqrt2_im_, ps_re, ps_im);
  gauss_mul(sqrt2_re_, sqrt2_im_, y.re_, y.im_, qr_re, qr_im);
  re_ = pr_re + 2 * qs_re;
  im_ = pr_im + 2 * qs_im;
  sqrt2_re_ = ps_re + qr_re;
  sqrt2_im_ = ps_im + qr_im;
  return *this;
}

// 1/(p + q sqrt2) = (p - q sqrt2) / (p^2 - 2 q^2); the denominator is a
// nonzero Gaussian rational whenever the input is nonzero.
ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero in Q(i,sqrt2)");
  Rational p2_re, p2_im, q2_re, q2_im;
  gauss_mul(re_, im_, re_, im_, p2_re, p2_im);
  gauss_mul(sqrt2_re_, sqrt2_im_, sqrt2_re_, sqrt2_im_, q2_re, q2_im);
  const Rational n_re = p2_re - 2 * q2_re;
  const Rational n_im = p2_im - 2 * q2_im;
  const Rational norm = n_re * n_re + n_im * n_im;
  // 1/(n_re + n_im i) = (n_re - n_im i)/norm
  const Rational inv_re = n_re / norm;
  const Rational inv_im = -n_im / norm;
  ExactScalar numerator(re_, im_, -sqrt2_re_, -sqrt2_im_);
  return numerator * ExactScalar(inv_re, inv_im);
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& y) { return *this *= y.inverse(); }

std::complex<double> ExactScalar::to_complex() const {
  const double s = std::sqrt(2.0);
  return {re_.get_d() + s * sqrt2_re_.get_d(), im_.get_d() + s * sqrt2_im_.get_d()};
}

std::string ExactScalar::to_string() const {
  const bool has_gauss = re_ != 0 || im_ != 0;
  const bool has_sqrt2 = sqrt2_re_ != 0 || sqrt2_im_ != 0;
  if (!has_sqrt2) return gaussian_to_string(re_, im_);
  std::string tail = "(" + gaussian_to_string(sqrt2_re_, sqrt2_im_) + ")sqrt2";
  if (!has_gauss) return tail;
  return gaussian_to_string(re_, im_) + "+" + tail;
}

FloatScalar FloatScalar::sqrt2() { return FloatScalar(std::sqrt(2.0), 0.0); }

FloatScalar FloatScalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational literal with zero denominator");
  return FloatScalar(static_cast<double>(num) / static_cast<double>(den), 0.0);
}

FloatScalar FloatScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero in complex backend");
  return FloatScalar(1.0 / z_);
}

FloatScalar& FloatScalar::operator/=(const FloatScalar& y) {
  if (y.is_zero()) throw DivisionByZero("division by zero in complex backend");
  z_ /= y.z_;
  return *this;
}

std::string FloatScalar::to_string() const {
  std::string out = format_double(z_.real());
  const double im = z_.imag();
  if (im < 0.0) {
    out += "-" + format_double(-im);
  } else {
    out += "+" + format_double(im);
  }
  return out + "i";
}

bool approx_equal(const ExactScalar& x, const ExactScalar& y, double /*tol*/) { return x == y; }

bool approx_equal(const FloatScalar& x, const FloatScalar& y, double tol) {
  const double scale = std::max({1.0, x.magnitude(), y.magnitude()});
  return std::abs(x.value() - y.value()) <= tol * scale;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.to_string(); }
std::ostream& operator<<(std::ostream& os, const FloatScalar& x) { return os << x.to_string(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: '" + text + "'");
  if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

}  // namespace fermicalc
