#pragma once

// Orthogonal complex structures J on a real 2M-dimensional space, the
// eigensplitting of the complexification and the maps gamma^+/gamma^-.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fermicalc/exterior.hpp"
#include "fermicalc/matrix.hpp"
#include "fermicalc/scalar.hpp"

namespace fermicalc {

class InvalidStructure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which eigenspace of J: minus is the -i eigenspace V^-, plus is V^+.
enum class Polarity { minus, plus };

/// A 2M x 2M matrix J with J^T J = I and J^2 = -I.
template <Field F>
class ComplexStructure {
 public:
  ComplexStructure() = default;
  explicit ComplexStructure(Matrix<F> j, double tol = kDefaultTolerance) : j_(std::move(j)) {
    if (!j_.is_square() || j_.rows() == 0 || j_.rows() % 2 != 0)
      throw InvalidStructure("complex structure must be a nonempty 2M x 2M matrix");
    const auto id = Matrix<F>::identity(j_.rows());
    if (!approx_equal(j_.transpose() * j_, id, tol))
      throw InvalidStructure("complex structure is not orthogonal (J^T J != I)");
    if (!approx_equal(j_ * j_, -id, tol))
      throw InvalidStructure("complex structure does not square to -I");
  }

  std::size_t half_dim() const { return j_.rows() / 2; }
  std::size_t dim() const { return j_.rows(); }
  const Matrix<F>& matrix() const { return j_; }

  Vector<F> apply(const Vector<F>& v) const { return j_ * v; }

 private:
  Matrix<F> j_;
};

template <Field F>
F j_inner(const ComplexStructure<F>& j, const Vector<F>& x, const Vector<F>& y);

/// v_1..v_M with <v_m|v_n>_J = delta_mn; equivalently {v_m, J v_m} is
/// orthonormal for the real inner product.
template <Field F>
class UnitaryBasis {
 public:
  UnitaryBasis() = default;
  UnitaryBasis(const ComplexStructure<F>& j, std::vector<Vector<F>> vectors,
               double tol = kDefaultTolerance)
      : vectors_(std::move(vectors)) {
    if (vectors_.size() != j.half_dim())
      throw InvalidStructure("unitary basis needs " + std::to_string(j.half_dim()) +
                             " vectors, got " + std::to_string(vectors_.size()));
    for (const auto& v : vectors_) {
      if (v.dim() != j.dim()) throw InvalidStructure("unitary basis vector has wrong dimension");
      if (!v.is_real()) throw InvalidStructure("unitary basis vectors must be real");
    }
    for (std::size_t m = 0; m < vectors_.size(); ++m)
      for (std::size_t n = 0; n < vectors_.size(); ++n) {
        const F expected = m == n ? F(1) : F(0);
        if (!approx_equal(j_inner(j, vectors_[m], vectors_[n]), expected, tol))
          throw InvalidStructure("basis is not unitary for <.|.>_J at (" + std::to_string(m + 1) +
                                 ", " + std::to_string(n + 1) + ")");
      }
  }

  std::size_t size() const { return vectors_.size(); }
  const Vector<F>& operator[](std::size_t m) const { return vectors_[m]; }
  const std::vector<Vector<F>>& vectors() const { return vectors_; }

 private:
  std::vector<Vector<F>> vectors_;
};

template <Field F>
struct Structure {
  ComplexStructure<F> j;
  UnitaryBasis<F> basis;

  std::size_t half_dim() const { return j.half_dim(); }
  std::size_t dim() const { return j.dim(); }
};

/// <x|y>_J = (x|y) + i (Jx|y) for real x, y.
template <Field F>
F j_inner(const ComplexStructure<F>& j, const Vector<F>& x, const Vector<F>& y) {
  if (x.dim() != j.dim() || y.dim() != j.dim())
    throw std::invalid_argument("j_inner: dimension mismatch");
  if (!x.is_real() || !y.is_real()) throw std::invalid_argument("j_inner: arguments must be real");
  return bilinear(x, y) + F::imag_unit() * bilinear(j.apply(x), y);
}

/// v^+ = (v - iJv)/sqrt2, v^- = (v + iJv)/sqrt2.
template <Field F>
Vector<F> gamma_vec(const ComplexStructure<F>& j, const Vector<F>& v, Polarity polarity) {
  if (v.dim() != j.dim()) throw std::invalid_argument("gamma_vec: dimension mismatch");
  if (!v.is_real()) throw std::invalid_argument("gamma_vec: argument must be real");
  const F i = polarity == Polarity::plus ? -F::imag_unit() : F::imag_unit();
  return F(1) / F::sqrt2() * (v + i * j.apply(v));
}

/// Spectral projector onto V^+ (= (1 - iJ)/2) or V^- (= (1 + iJ)/2).
template <Field F>
Matrix<F> eigenprojector(const ComplexStructure<F>& j, Polarity polarity) {
  const F i = polarity == Polarity::plus ? -F::imag_unit() : F::imag_unit();
  return F::rational(1, 2) * (Matrix<F>::identity(j.dim()) + i * j.matrix());
}

/// The 2M x M matrix whose column m is gamma_vec(v_m, polarity).
template <Field F>
Matrix<F> gamma_images(const Structure<F>& s, Polarity polarity) {
  Matrix<F> out(s.dim(), s.half_dim());
  for (std::size_t m = 0; m < s.half_dim(); ++m) {
    const Vector<F> g = gamma_vec(s.j, s.basis[m], polarity);
    for (std::size_t r = 0; r < s.dim(); ++r) out(r, m) = g[r];
  }
  return out;
}

/// Extends gamma^+ (homomorphism) or gamma^- (order-reversing, conjugating)
/// from V_J to its exterior algebra. `xi` lives over the M generators that
/// stand for the unitary basis v_1..v_M.
template <Field F>
Multivector<F> gamma_ext(const Structure<F>& s, const Multivector<F>& xi, Polarity polarity,
                         double tol = kDefaultTolerance) {
  if (xi.dim() != s.half_dim())
    throw std::out_of_range("gamma_ext: element over " + std::to_string(xi.dim()) +
                            " generators, V_J has " + std::to_string(s.half_dim()));
  return substitute_generators(xi, gamma_images(s, polarity),
                               polarity == Polarity::plus ? Substitution::hom : Substitution::antihom,
                               tol);
}

/// Coordinates of x in V_J: the C-linear extension of x -> (<v_m|x>_J)_m from
/// real vectors to the complexification, i acting on V_J through J.
template <Field F>
Vector<F> vj_coordinates(const Structure<F>& s, const Vector<F>& x) {
  if (x.dim() != s.dim()) throw std::invalid_argument("vj_coordinates: dimension mismatch");
  const F half = F::rational(1, 2);
  const Vector<F> re = half * (x + x.conj());
  const Vector<F> im = (half / F::imag_unit()) * (x - x.conj());
  Vector<F> out(s.half_dim());
  for (std::size_t m = 0; m < s.half_dim(); ++m)
    out[m] = j_inner(s.j, s.basis[m], re) + F::imag_unit() * j_inner(s.j, s.basis[m], im);
  return out;
}

/// Real vector sum_m c_m v_m of V_J, where a complex c_m acts through J.
template <Field F>
Vector<F> from_vj_coordinates(const Structure<F>& s, const Vector<F>& coords) {
  if (coords.dim() != s.half_dim())
    throw std::invalid_argument("from_vj_coordinates: dimension mismatch");
  Vector<F> out(s.dim());
  const F half = F::rational(1, 2);
  for (std::size_t m = 0; m < s.half_dim(); ++m) {
    const F re = half * (coords[m] + coords[m].conj());
    const F im = (half / F::imag_unit()) * (coords[m] - coords[m].conj());
    out = out + re * s.basis[m] + im * s.j.apply(s.basis[m]);
  }
  return out;
}

/// Reads an element of the exterior algebra of the complexification as an
/// element of the exterior algebra of V_J, generator-wise via vj_coordinates.
template <Field F>
Multivector<F> to_vj_multivector(const Structure<F>& s, const Multivector<F>& a) {
  if (a.dim() != s.dim()) throw std::invalid_argument("to_vj_multivector: dimension mismatch");
  Matrix<F> coords(s.half_dim(), s.dim());
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const Vector<F> c = vj_coordinates(s, Vector<F>::unit(s.dim(), k + 1));
    for (std::size_t m = 0; m < s.half_dim(); ++m) coords(m, k) = c[m];
  }
  return detail::functorial_image(a, coords, Substitution::hom);
}

/// gamma = sum_m gamma^+(v_m) ^ gamma^-(v_m).
template <Field F>
Multivector<F> gamma_form(const Structure<F>& s) {
  Multivector<F> out(s.dim());
  for (const auto& v : s.basis.vectors())
    out += wedge(to_multivector(gamma_vec(s.j, v, Polarity::plus)),
                 to_multivector(gamma_vec(s.j, v, Polarity::minus)));
  return out;
}

/// omega = (-gamma)^M / M!.
template <Field F>
Multivector<F> omega_form(const Structure<F>& s) {
  const Multivector<F> minus_gamma = -gamma_form(s);
  Multivector<F> out = Multivector<F>::scalar(s.dim(), F(1));
  for (long k = 1; static_cast<std::size_t>(k) <= s.half_dim(); ++k)
    out = F::rational(1, k) * wedge(out, minus_gamma);
  return out;
}

/// gamma^-(v_1) ^ gamma^+(v_1) ^ ... ^ gamma^-(v_M) ^ gamma^+(v_M).
template <Field F>
Multivector<F> interleaved_omega(const Structure<F>& s) {
  Multivector<F> out = Multivector<F>::scalar(s.dim(), F(1));
  for (const auto& v : s.basis.vectors()) {
    out = wedge(out, to_multivector(gamma_vec(s.j, v, Polarity::minus)));
    out = wedge(out, to_multivector(gamma_vec(s.j, v, Polarity::plus)));
  }
  return out;
}

/// Block-diagonal J with blocks [[0,-1],[1,0]] and basis v_m = e_{2m-1}.
template <Field F>
Structure<F> standard_structure(std::size_t half_dim) {
  if (half_dim == 0) throw std::invalid_argument("standard_structure: M must be at least 1");
  Matrix<F> j(2 * half_dim, 2 * half_dim);
  std::vector<Vector<F>> basis;
  for (std::size_t m = 0; m < half_dim; ++m) {
    j(2 * m, 2 * m + 1) = F(-1);
    j(2 * m + 1, 2 * m) = F(1);
    basis.push_back(Vector<F>::unit(2 * half_dim, 2 * m + 1));
  }
  ComplexStructure<F> cs(std::move(j));
  UnitaryBasis<F> ub(cs, std::move(basis));
  return {std::move(cs), std::move(ub)};
}

/// Conjugates the standard structure by the Cayley transform
/// Q = (I - A)(I + A)^{-1} of an antisymmetric rational A.
Structure<ExactScalar> cayley_structure(const Matrix<ExactScalar>& antisymmetric);

/// cayley_structure of a seeded random rational antisymmetric matrix.
Structure<ExactScalar> random_structure(std::size_t half_dim, std::uint64_t seed);

/// Float-only: builds a unitary basis for J by Gram-Schmidt over {v, Jv}
/// pairs, discarding candidates whose residual norm is below `pivot_tol`.
UnitaryBasis<FloatScalar> unitary_basis_from(const ComplexStructure<FloatScalar>& j,
                                             double pivot_tol = 1e-9);

template <Field F>
Structure<F> convert_structure(const Structure<ExactScalar>& s, double tol = kDefaultTolerance) {
  if constexpr (std::is_same_v<F, ExactScalar>) {
    return s;
  } else {
    ComplexStructure<F> j(convert_matrix<F>(s.j.matrix()), tol);
    std::vector<Vector<F>> vs;
    for (const auto& v : s.basis.vectors()) {
      std::vector<F> comps;
      for (const auto& c : v.comps()) comps.push_back(F::embed(c));
      vs.emplace_back(std::move(comps));
    }
    UnitaryBasis<F> basis(j, std::move(vs), tol);
    return {std::move(j), std::move(basis)};
  }
}

}  // namespace fermicalc
