#pragma once

// Exterior algebra over `dim` generators that are orthonormal for the
// sesquilinear inner product <x|y> = sum conj(x_i) y_i.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fermicalc/blade.hpp"
#include "fermicalc/matrix.hpp"
#include "fermicalc/scalar.hpp"

namespace fermicalc {

template <Field F>
using Multivector = BladeSum<F, ExteriorTag>;

/// A vector in the complexification, in coordinates over the orthonormal real
/// generators e_1..e_dim.
template <Field F>
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : comps_(dim) {}
  explicit Vector(std::vector<F> comps) : comps_(std::move(comps)) {}

  static Vector unit(std::size_t dim, std::size_t k) {
    Vector out(dim);
    out.comps_.at(k - 1) = F(1);
    return out;
  }

  std::size_t dim() const { return comps_.size(); }
  const std::vector<F>& comps() const { return comps_; }
  F& operator[](std::size_t i) { return comps_[i]; }
  const F& operator[](std::size_t i) const { return comps_[i]; }

  bool is_real() const {
    for (const auto& c : comps_)
      if (!c.is_real()) return false;
    return true;
  }

  Vector conj() const {
    Vector out = *this;
    for (auto& c : out.comps_) c = c.conj();
    return out;
  }

  Vector operator-() const { return F(-1) * *this; }
  friend Vector operator+(Vector a, const Vector& b) {
    require_same_dim(a, b);
    for (std::size_t i = 0; i < a.dim(); ++i) a.comps_[i] += b.comps_[i];
    return a;
  }
  friend Vector operator-(const Vector& a, const Vector& b) { return a + (-b); }
  friend Vector operator*(const F& s, Vector v) {
    for (auto& c : v.comps_) c = s * c;
    return v;
  }
  friend Vector operator*(const Matrix<F>& m, const Vector& v) {
    if (m.cols() != v.dim()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) out.comps_[r] += m(r, c) * v.comps_[c];
    return out;
  }
  friend bool operator==(const Vector& a, const Vector& b) { return a.comps_ == b.comps_; }

  friend bool approx_equal(const Vector& a, const Vector& b, double tol) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!approx_equal(a.comps_[i], b.comps_[i], tol)) return false;
    return true;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      if (i) out += ", ";
      out += comps_[i].to_string();
    }
    return out + "]";
  }

  static void require_same_dim(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim())
      throw std::invalid_argument("vector dimension mismatch: " + std::to_string(a.dim()) +
                                  " vs " + std::to_string(b.dim()));
  }

 private:
  std::vector<F> comps_;
};

/// Complex-bilinear form (x|y) = sum x_i y_i.
template <Field F>
F bilinear(const Vector<F>& x, const Vector<F>& y) {
  Vector<F>::require_same_dim(x, y);
  F out;
  for (std::size_t i = 0; i < x.dim(); ++i) out += x[i] * y[i];
  return out;
}

/// Sesquilinear inner product <x|y> = (conj x|y).
template <Field F>
F hermitian(const Vector<F>& x, const Vector<F>& y) {
  return bilinear(x.conj(), y);
}

template <Field F>
Multivector<F> to_multivector(const Vector<F>& v) {
  Multivector<F> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out.add_term(BladeMask{1} << i, v[i]);
  return out;
}

/// Grade-1 part of a multivector, as a vector.
template <Field F>
Vector<F> vector_part(const Multivector<F>& a) {
  Vector<F> out(a.dim());
  for (const auto& [mask, c] : a.terms())
    if (grade_of(mask) == 1) out[static_cast<std::size_t>(std::countr_zero(mask))] = c;
  return out;
}

template <Field F>
Multivector<F> wedge(const Multivector<F>& a, const Multivector<F>& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("wedge: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  Multivector<F> out(a.dim());
  for (const auto& [sa, ca] : a.terms())
    for (const auto& [sb, cb] : b.terms()) {
      if (sa & sb) continue;
      const F c = ca * cb;
      out.add_term(sa | sb, reorder_sign(sa, sb) < 0 ? -c : c);
    }
  return out;
}

/// a ^ a ^ ... ^ a (k factors); k = 0 gives 1.
template <Field F>
Multivector<F> wedge_power(const Multivector<F>& a, std::size_t k) {
  Multivector<F> out = Multivector<F>::scalar(a.dim(), F(1));
  for (std::size_t i = 0; i < k && !out.is_zero(); ++i) out = wedge(out, a);
  return out;
}

template <Field F>
Multivector<F> grade_project(const Multivector<F>& a, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > a.dim())
    throw std::out_of_range("grade " + std::to_string(k) + " outside 0.." +
                            std::to_string(a.dim()));
  return a.filter_grades([k](int g) { return g == k; });
}

/// Determinantal inner product, conjugate-linear in the first slot. Blades
/// e_S are orthonormal, so this is sum_S conj(a_S) b_S.
template <Field F>
F det_inner(const Multivector<F>& a, const Multivector<F>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("det_inner: dimension mismatch");
  F out;
  for (const auto& [mask, c] : a.terms()) {
    auto it = b.terms().find(mask);
    if (it != b.terms().end()) out += c.conj() * it->second;
  }
  return out;
}

/// Exterior exponential of a nilpotent even element with no scalar part.
template <Field F>
Multivector<F> ext_exp(const Multivector<F>& a) {
  for (const auto& [mask, c] : a.terms()) {
    const int g = grade_of(mask);
    if (g == 0) throw std::invalid_argument("ext_exp: argument has a scalar component");
    if (g & 1) throw std::invalid_argument("ext_exp: argument has an odd-grade component");
  }
  Multivector<F> sum = Multivector<F>::scalar(a.dim(), F(1));
  Multivector<F> power = sum;
  for (long k = 1; static_cast<std::size_t>(k) <= a.dim() / 2; ++k) {
    power = F::rational(1, k) * wedge(power, a);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

/// The unique c with t = c * omega, for t and omega of top grade.
template <Field F>
F top_coefficient(const Multivector<F>& t, const Multivector<F>& omega) {
  if (t.dim() != omega.dim()) throw std::invalid_argument("top_coefficient: dimension mismatch");
  const BladeMask top = omega.full_mask();
  for (const auto& [mask, c] : omega.terms())
    if (mask != top) throw std::invalid_argument("top_coefficient: omega is not of top grade");
  if (omega.is_zero()) throw std::invalid_argument("top_coefficient: omega is zero");
  for (const auto& [mask, c] : t.terms())
    if (mask != top) throw std::invalid_argument("top_coefficient: t is not of top grade");
  return t.coeff(top) / omega.coeff(top);
}

enum class Substitution { hom, antihom };

namespace detail {

// Functorial image without the injectivity check; see substitute_generators.
template <Field F>
Multivector<F> functorial_image(const Multivector<F>& a, const Matrix<F>& basis_images,
                                Substitution mode) {
  const std::size_t target_dim = basis_images.rows();
  std::vector<Multivector<F>> images;
  images.reserve(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    Multivector<F> img(target_dim);
    for (std::size_t i = 0; i < target_dim; ++i)
      img.add_term(BladeMask{1} << i, basis_images(i, j));
    images.push_back(std::move(img));
  }

  Multivector<F> out(target_dim);
  for (const auto& [mask, c] : a.terms()) {
    std::vector<std::size_t> gens = generators_of(mask);
    if (mode == Substitution::antihom) std::reverse(gens.begin(), gens.end());
    Multivector<F> term =
        Multivector<F>::scalar(target_dim, mode == Substitution::hom ? c : c.conj());
    for (std::size_t g : gens) term = wedge(term, images[g - 1]);
    out += term;
  }
  return out;
}

}  // namespace detail

/// Functorial extension of the linear map sending source generator g_j to
/// sum_i B(i, j) g_i (target has B.rows() generators, source B.cols()).
///
/// `hom` is the algebra homomorphism, linear on scalars. `antihom` maps each
/// blade g_{j1}^..^g_{jk} to the image of g_{jk}^..^g_{j1} and conjugates
/// coefficients. B must be injective (invertible when square).
template <Field F>
Multivector<F> substitute_generators(const Multivector<F>& a, const Matrix<F>& basis_images,
                                     Substitution mode, double tol = kDefaultTolerance) {
  if (basis_images.cols() != a.dim())
    throw std::invalid_argument("substitute_generators: matrix has " +
                                std::to_string(basis_images.cols()) + " columns, element has " +
                                std::to_string(a.dim()) + " generators");
  if (basis_images.rank(tol) != a.dim())
    throw DivisionByZero("substitute_generators: singular substitution matrix");
  return detail::functorial_image(a, basis_images, mode);
}

}  // namespace fermicalc
