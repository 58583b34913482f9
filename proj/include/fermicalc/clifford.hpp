#pragma once

// Complex Clifford algebra over orthonormal real generators, e_i e_i = 1 and
// e_i e_j = -e_j e_i for i != j. Monomials share the exterior blade encoding.

#include <stdexcept>
#include <string>

#include "fermicalc/blade.hpp"
#include "fermicalc/exterior.hpp"
#include "fermicalc/scalar.hpp"

namespace fermicalc {

template <Field F>
using CliffordElement = BladeSum<F, CliffordTag>;

template <Field F>
CliffordElement<F> cl_mul(const CliffordElement<F>& a, const CliffordElement<F>& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("cl_mul: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  CliffordElement<F> out(a.dim());
  for (const auto& [sa, ca] : a.terms())
    for (const auto& [sb, cb] : b.terms()) {
      const F c = ca * cb;
      // Repeated generators contract to 1 after being brought together.
      out.add_term(sa ^ sb, reorder_sign(sa, sb) < 0 ? -c : c);
    }
  return out;
}

/// Gamma: e_S -> (-1)^|S| e_S.
template <Field F>
CliffordElement<F> grade_automorphism(const CliffordElement<F>& a) {
  CliffordElement<F> out(a.dim());
  for (const auto& [mask, c] : a.terms()) out.add_term(mask, (grade_of(mask) & 1) ? -c : c);
  return out;
}

/// Conjugate-linear antiautomorphism fixing real vectors.
template <Field F>
CliffordElement<F> star(const CliffordElement<F>& a) {
  CliffordElement<F> out(a.dim());
  for (const auto& [mask, c] : a.terms()) {
    const F cc = c.conj();
    out.add_term(mask, reversal_sign(grade_of(mask)) < 0 ? -cc : cc);
  }
  return out;
}

/// Normalized trace: the coefficient of the identity monomial.
template <Field F>
F trace(const CliffordElement<F>& a) {
  return a.coeff(0);
}

/// <a|b> = tau(a* b).
template <Field F>
F tracial_inner(const CliffordElement<F>& a, const CliffordElement<F>& b) {
  return trace(cl_mul(star(a), b));
}

template <Field F>
CliffordElement<F> from_vector(const Vector<F>& v) {
  CliffordElement<F> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out.add_term(BladeMask{1} << i, v[i]);
  return out;
}

/// Product of the vectors in order, 1 for an empty list.
template <Field F>
CliffordElement<F> cl_product(std::size_t dim, const std::vector<Vector<F>>& factors) {
  CliffordElement<F> out = CliffordElement<F>::scalar(dim, F(1));
  for (const auto& v : factors) out = cl_mul(out, from_vector(v));
  return out;
}

}  // namespace fermicalc
