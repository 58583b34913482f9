#pragma once

// Berezin expectation on the exterior algebra of the complexification and
// the ordering isomorphisms into the Clifford algebra.
//
// Both orderings work in an adapted basis f_1..f_2M of the complexification.
// Antinormal: f_m = gamma^-(v_m), f_{M+m} = gamma^+(v_m). Normal: the two
// blocks swapped. With these indices the ascending order of a stored blade is
// already the required operator order, so ordering a blade is just taking
// the Clifford product of its f's left to right. Each block spans an
// isotropic subspace, so reordering inside a block costs the same sign in
// both algebras.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fermicalc/clifford.hpp"
#include "fermicalc/exterior.hpp"
#include "fermicalc/matrix.hpp"
#include "fermicalc/structure.hpp"

namespace fermicalc {

enum class Ordering { antinormal, normal };

template <Field F>
class OrderingContext {
 public:
  explicit OrderingContext(Structure<F> structure, double tol = kDefaultTolerance)
      : structure_(std::move(structure)), tol_(tol) {
    const std::size_t m = half_dim();
    gamma_ = gamma_form(structure_);
    omega_ = omega_form(structure_);
    // Reversed two-form gamma' = -gamma, with omega' = (-gamma')^M / M!.
    omega_normal_ = Multivector<F>::scalar(dim(), F(1));
    for (long k = 1; static_cast<std::size_t>(k) <= m; ++k)
      omega_normal_ = F::rational(1, k) * wedge(omega_normal_, gamma_);
    exp_minus_gamma_ = ext_exp(-gamma_);
    exp_gamma_ = ext_exp(gamma_);

    const Matrix<F> minus = gamma_images(structure_, Polarity::minus);
    const Matrix<F> plus = gamma_images(structure_, Polarity::plus);
    for (Ordering ord : {Ordering::antinormal, Ordering::normal}) {
      Block& b = block(ord);
      const Matrix<F>& first = ord == Ordering::antinormal ? minus : plus;
      const Matrix<F>& second = ord == Ordering::antinormal ? plus : minus;
      b.basis = Matrix<F>(dim(), dim());
      for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < m; ++c) {
          b.basis(r, c) = first(r, c);
          b.basis(r, m + c) = second(r, c);
        }
      b.inverse = b.basis.inverse(tol_);
      if (!approx_equal(b.basis * b.inverse, Matrix<F>::identity(dim()), tol_))
        throw InvalidStructure("adapted basis is not invertible");
      build_products(b);
    }
  }

  const Structure<F>& structure() const { return structure_; }
  std::size_t half_dim() const { return structure_.half_dim(); }
  std::size_t dim() const { return structure_.dim(); }
  double tol() const { return tol_; }

  const Multivector<F>& gamma() const { return gamma_; }
  const Multivector<F>& omega() const { return omega_; }
  const Multivector<F>& omega_normal() const { return omega_normal_; }
  const Multivector<F>& exp_minus_gamma() const { return exp_minus_gamma_; }
  const Multivector<F>& exp_gamma() const { return exp_gamma_; }

  /// Columns are the adapted basis vectors f_k in e-coordinates.
  const Matrix<F>& adapted_basis(Ordering ord) const { return block(ord).basis; }
  const Matrix<F>& adapted_basis_inverse(Ordering ord) const { return block(ord).inverse; }

  /// f_{k1} f_{k2} ... for the ascending indices of `mask`.
  const CliffordElement<F>& ordered_product(Ordering ord, BladeMask mask) const {
    return block(ord).products.at(mask);
  }

 private:
  struct Block {
    Matrix<F> basis;
    Matrix<F> inverse;
    std::vector<CliffordElement<F>> products;
  };

  Block& block(Ordering ord) { return ord == Ordering::antinormal ? antinormal_ : normal_; }
  const Block& block(Ordering ord) const {
    return ord == Ordering::antinormal ? antinormal_ : normal_;
  }

  void build_products(Block& b) const {
    const std::size_t n = dim();
    std::vector<CliffordElement<F>> factors;
    for (std::size_t k = 0; k < n; ++k) {
      CliffordElement<F> f(n);
      for (std::size_t r = 0; r < n; ++r) f.add_term(BladeMask{1} << r, b.basis(r, k));
      factors.push_back(std::move(f));
    }
    const std::size_t count = std::size_t{1} << n;
    b.products.assign(count, CliffordElement<F>(n));
    b.products[0] = CliffordElement<F>::scalar(n, F(1));
    for (std::size_t mask = 1; mask < count; ++mask) {
      const int top = std::bit_width(mask) - 1;
      const std::size_t rest = mask & ~(std::size_t{1} << top);
      b.products[mask] = cl_mul(b.products[rest], factors[static_cast<std::size_t>(top)]);
    }
  }

  Structure<F> structure_;
  double tol_;
  Multivector<F> gamma_;
  Multivector<F> omega_;
  Multivector<F> omega_normal_;
  Multivector<F> exp_minus_gamma_;
  Multivector<F> exp_gamma_;
  Block antinormal_;
  Block normal_;
};

namespace detail {

template <Field F>
void require_dim(const OrderingContext<F>& ctx, std::size_t dim, const char* what) {
  if (dim != ctx.dim())
    throw std::invalid_argument(std::string(what) + ": element over " + std::to_string(dim) +
                                " generators, context has " + std::to_string(ctx.dim()));
}

template <Field F>
CliffordElement<F> order(const OrderingContext<F>& ctx, const Multivector<F>& zeta, Ordering ord) {
  require_dim(ctx, zeta.dim(), "nu");
  const Multivector<F> adapted =
      functorial_image(zeta, ctx.adapted_basis_inverse(ord), Substitution::hom);
  CliffordElement<F> out(ctx.dim());
  for (const auto& [mask, c] : adapted.terms()) out += c * ctx.ordered_product(ord, mask);
  return out;
}

}  // namespace detail

/// E(zeta): P(zeta ^ e^{-gamma}) = E(zeta) omega.
template <Field F>
F expectation(const OrderingContext<F>& ctx, const Multivector<F>& zeta) {
  detail::require_dim(ctx, zeta.dim(), "expectation");
  const auto top = grade_project(wedge(zeta, ctx.exp_minus_gamma()), static_cast<int>(ctx.dim()));
  return top_coefficient(top, ctx.omega());
}

/// Expectation for the reversed two-form gamma' = -gamma.
template <Field F>
F expectation_normal(const OrderingContext<F>& ctx, const Multivector<F>& zeta) {
  detail::require_dim(ctx, zeta.dim(), "expectation_normal");
  const auto top = grade_project(wedge(zeta, ctx.exp_gamma()), static_cast<int>(ctx.dim()));
  return top_coefficient(top, ctx.omega_normal());
}

/// Antinormal ordering: gamma^-(xi) ^ gamma^+(eta) -> gamma^-(xi) gamma^+(eta).
template <Field F>
CliffordElement<F> nu(const OrderingContext<F>& ctx, const Multivector<F>& zeta) {
  return detail::order(ctx, zeta, Ordering::antinormal);
}

/// Normal ordering: gamma^+(eta) ^ gamma^-(xi) -> gamma^+(eta) gamma^-(xi).
template <Field F>
CliffordElement<F> nu_normal(const OrderingContext<F>& ctx, const Multivector<F>& zeta) {
  return detail::order(ctx, zeta, Ordering::normal);
}

template <Field F>
CliffordElement<F> order(const OrderingContext<F>& ctx, const Multivector<F>& zeta, Ordering ord) {
  return detail::order(ctx, zeta, ord);
}

// Closed forms on low degree, written with Clifford products of real vectors
// and <.|.>_J only.

/// xy - <y|x> 1.
template <Field F>
CliffordElement<F> nu_formula_deg2(const OrderingContext<F>& ctx, const Vector<F>& x,
                                   const Vector<F>& y) {
  const auto& j = ctx.structure().j;
  const std::size_t n = ctx.dim();
  return cl_mul(from_vector(x), from_vector(y)) -
         CliffordElement<F>::scalar(n, j_inner(j, y, x));
}

/// xyz - <z|y> x + <z|x> y - <y|x> z.
template <Field F>
CliffordElement<F> nu_formula_deg3(const OrderingContext<F>& ctx, const Vector<F>& x,
                                   const Vector<F>& y, const Vector<F>& z) {
  const auto& j = ctx.structure().j;
  const std::size_t n = ctx.dim();
  return cl_product<F>(n, {x, y, z}) - from_vector(j_inner(j, z, y) * x) +
         from_vector(j_inner(j, z, x) * y) - from_vector(j_inner(j, y, x) * z);
}

/// xy - <x|y> 1.
template <Field F>
CliffordElement<F> nu_normal_formula_deg2(const OrderingContext<F>& ctx, const Vector<F>& x,
                                          const Vector<F>& y) {
  const auto& j = ctx.structure().j;
  return cl_mul(from_vector(x), from_vector(y)) -
         CliffordElement<F>::scalar(ctx.dim(), j_inner(j, x, y));
}

/// xyz - <y|z> x + <x|z> y - <x|y> z.
template <Field F>
CliffordElement<F> nu_normal_formula_deg3(const OrderingContext<F>& ctx, const Vector<F>& x,
                                          const Vector<F>& y, const Vector<F>& z) {
  const auto& j = ctx.structure().j;
  return cl_product<F>(ctx.dim(), {x, y, z}) - from_vector(j_inner(j, y, z) * x) +
         from_vector(j_inner(j, x, z) * y) - from_vector(j_inner(j, x, y) * z);
}

/// Matrix of an ordering map on the blade bases: column S holds the Clifford
/// coefficients of the image of e_S.
template <Field F>
Matrix<F> ordering_matrix(const OrderingContext<F>& ctx, Ordering ord) {
  const std::size_t count = std::size_t{1} << ctx.dim();
  Matrix<F> out(count, count);
  for (std::size_t s = 0; s < count; ++s) {
    const auto image =
        order(ctx, Multivector<F>::blade(ctx.dim(), static_cast<BladeMask>(s)), ord);
    for (const auto& [mask, c] : image.terms()) out(mask, s) = c;
  }
  return out;
}

}  // namespace fermicalc
