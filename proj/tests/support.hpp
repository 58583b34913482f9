#pragma once

// Shorthands and independent oracles shared by the unit and acceptance tests.
// Nothing here calls into the expectation or ordering code.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include "fermicalc/berezin.hpp"
#include "fermicalc/clifford.hpp"
#include "fermicalc/exterior.hpp"
#include "fermicalc/structure.hpp"

namespace fctest {

using namespace fermicalc;
using S = ExactScalar;
using MV = Multivector<S>;
using CL = CliffordElement<S>;
using Vec = Vector<S>;

inline S I() { return S::imag_unit(); }
inline S rt2() { return S::sqrt2(); }
inline S q(long num, long den = 1) { return S::rational(num, den); }

inline BladeMask mask_of(std::initializer_list<int> gens) {
  BladeMask m = 0;
  for (int g : gens) m |= BladeMask{1} << (g - 1);
  return m;
}

template <Field F = S>
Multivector<F> ext_blade(std::size_t dim, std::initializer_list<int> gens, const F& c = F(1)) {
  return Multivector<F>::blade(dim, mask_of(gens), c);
}

template <Field F = S>
CliffordElement<F> cl_blade(std::size_t dim, std::initializer_list<int> gens, const F& c = F(1)) {
  return CliffordElement<F>::blade(dim, mask_of(gens), c);
}

template <Field F = S>
Vector<F> vec(std::initializer_list<F> comps) {
  return Vector<F>(std::vector<F>(comps));
}

// Pauli matrices with entries in {0, +-1, +-i}; exact.
inline Matrix<S> pauli(char which) {
  Matrix<S> m(2, 2);
  switch (which) {
    case 'x': m(0, 1) = 1; m(1, 0) = 1; break;
    case 'y': m(0, 1) = -I(); m(1, 0) = I(); break;
    case 'z': m(0, 0) = 1; m(1, 1) = -1; break;
    default: m = Matrix<S>::identity(2);
  }
  return m;
}

inline Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Jordan-Wigner gamma matrices: 2M Hermitian 2^M x 2^M matrices that
/// pairwise anticommute and square to 1. Faithful on C(C^{2M}).
inline std::vector<Matrix<S>> jordan_wigner(std::size_t m) {
  std::vector<Matrix<S>> out;
  for (std::size_t site = 0; site < m; ++site) {
    for (char p : {'x', 'y'}) {
      Matrix<S> g = Matrix<S>::identity(1);
      for (std::size_t k = 0; k < m; ++k) g = kron(g, k < site ? pauli('z') : k == site ? pauli(p) : pauli('1'));
      out.push_back(g);
    }
  }
  return out;
}

inline Matrix<S> represent(const CL& a, const std::vector<Matrix<S>>& gammas) {
  const std::size_t d = gammas.front().rows();
  Matrix<S> out(d, d);
  for (const auto& [mask, c] : a.terms()) {
    Matrix<S> mono = Matrix<S>::identity(d);
    for (std::size_t k = 0; k < gammas.size(); ++k)
      if (mask & (BladeMask{1} << k)) mono = mono * gammas[k];
    out = out + c * mono;
  }
  return out;
}

inline S normalized_matrix_trace(const Matrix<S>& m) {
  S t;
  for (std::size_t k = 0; k < m.rows(); ++k) t += m(k, k);
  return t * S::rational(1, static_cast<long>(m.rows()));
}

/// Pfaffian by expansion along the first row.
template <Field F>
F pfaffian(const std::vector<std::vector<F>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return F(1);
  if (n % 2) return F();
  F out;
  for (std::size_t j = 1; j < n; ++j) {
    if (a[0][j] == F()) continue;
    std::vector<std::size_t> keep;
    for (std::size_t k = 1; k < n; ++k)
      if (k != j) keep.push_back(k);
    std::vector<std::vector<F>> minor(keep.size(), std::vector<F>(keep.size()));
    for (std::size_t r = 0; r < keep.size(); ++r)
      for (std::size_t c = 0; c < keep.size(); ++c) minor[r][c] = a[keep[r]][keep[c]];
    const F term = a[0][j] * pfaffian(minor);
    out += (j % 2) ? term : -term;
  }
  return out;
}

/// Wick oracle for the expectation of a blade e_S: the Pfaffian of the
/// two-point matrix c(a, b) = -<e_b|e_a>_J (a < b) restricted to S.
template <Field F>
F wick_expectation(const Structure<F>& s, BladeMask mask, bool normal = false) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < s.dim(); ++k)
    if (mask & (BladeMask{1} << k)) idx.push_back(k);
  std::vector<std::vector<F>> a(idx.size(), std::vector<F>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) {
      if (r == c) continue;
      const auto x = Vector<F>::unit(s.dim(), idx[r] + 1), y = Vector<F>::unit(s.dim(), idx[c] + 1);
      a[r][c] = normal ? -j_inner(s.j, x, y) : -j_inner(s.j, y, x);
    }
  return pfaffian(a);
}

/// Wick oracle for the ordering map on a product of real vectors: the sum
/// over partial pairings of contractions -<x_b|x_a>_J (a < b, antinormal)
/// or -<x_a|x_b>_J (normal), times the Clifford product of the leftovers.
template <Field F>
CliffordElement<F> wick_order(const Structure<F>& s, const std::vector<Vector<F>>& xs, bool normal = false) {
  const std::size_t n = s.dim();
  std::function<CliffordElement<F>(std::vector<std::size_t>)> rec = [&](std::vector<std::size_t> rest) {
    if (rest.empty()) return CliffordElement<F>::scalar(n, F(1));
    const std::size_t a = rest.front();
    std::vector<std::size_t> tail(rest.begin() + 1, rest.end());
    // a unpaired: stays leftmost
    CliffordElement<F> out = cl_mul(from_vector(xs[a]), rec(tail));
    for (std::size_t p = 0; p < tail.size(); ++p) {
      const std::size_t b = tail[p];
      std::vector<std::size_t> remaining = tail;
      remaining.erase(remaining.begin() + static_cast<long>(p));
      const F contraction = normal ? -j_inner(s.j, xs[a], xs[b]) : -j_inner(s.j, xs[b], xs[a]);
      // moving x_b next to x_a passes p elements
      const F sign = (p % 2) ? F(-1) : F(1);
      out += (sign * contraction) * rec(remaining);
    }
    return out;
  };
  std::vector<std::size_t> all(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) all[k] = k;
  return rec(all);
}

template <Field F>
Multivector<F> wedge_all(std::size_t dim, const std::vector<Vector<F>>& xs) {
  Multivector<F> out = Multivector<F>::scalar(dim, F(1));
  for (const auto& x : xs) out = wedge(out, to_multivector(x));
  return out;
}

}  // namespace fctest
