#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "fermicalc/clifford.hpp"
#include "fermicalc/exterior.hpp"
#include "fermicalc/matrix.hpp"
#include "fermicalc/scalar.hpp"

namespace fermicalc {

/// Deterministic generator of small exact test inputs. Values are drawn in
/// Q(i, sqrt2) and embedded into the requested backend, so the exact and
/// float backends see the same inputs for the same seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  Sampler(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    rng_.seed(seq);
  }

  std::mt19937_64& engine() { return rng_; }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational() {
    Rational q(integer(-4, 4), integer(1, 4));
    q.canonicalize();
    return q;
  }

  /// Gaussian rational, with a sqrt2 part a third of the time.
  ExactScalar exact_scalar() {
    Rational re = rational();
    Rational im = coin() ? rational() : Rational(0);
    Rational s_re = 0, s_im = 0;
    if (integer(0, 2) == 0) {
      s_re = rational();
      s_im = coin() ? rational() : Rational(0);
    }
    return ExactScalar(re, im, s_re, s_im);
  }

  ExactScalar nonzero_exact_scalar() {
    for (;;) {
      ExactScalar x = exact_scalar();
      if (!x.is_zero()) return x;
    }
  }

  template <Field F>
  F scalar() { return F::embed(exact_scalar()); }

  template <Field F>
  Vector<F> real_vector(std::size_t dim) {
    Vector<F> out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = F::embed(ExactScalar(rational()));
    return out;
  }

  template <Field F>
  Vector<F> complex_vector(std::size_t dim) {
    Vector<F> out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = scalar<F>();
    return out;
  }

  /// Random blade set of size 1..max_terms with random coefficients.
  template <class T>
  T element(std::size_t dim, std::size_t max_terms) {
    using F = typename T::Scalar;
    T out(dim);
    const long terms = integer(1, static_cast<long>(max_terms));
    const long top = (1L << dim) - 1;
    for (long t = 0; t < terms; ++t) out.add_term(static_cast<BladeMask>(integer(0, top)), scalar<F>());
    return out;
  }

  /// Random element whose blades all satisfy `keep(grade)`.
  template <class T, class Pred>
  T element_with_grades(std::size_t dim, std::size_t max_terms, Pred keep) {
    using F = typename T::Scalar;
    std::vector<BladeMask> allowed;
    for (BladeMask m = 0; m < (BladeMask{1} << dim); ++m)
      if (keep(grade_of(m))) allowed.push_back(m);
    T out(dim);
    if (allowed.empty()) return out;
    const long terms = integer(1, static_cast<long>(max_terms));
    for (long t = 0; t < terms; ++t)
      out.add_term(allowed[static_cast<std::size_t>(integer(0, static_cast<long>(allowed.size()) - 1))],
                   scalar<F>());
    return out;
  }

  template <Field F>
  Matrix<F> invertible_matrix(std::size_t n) {
    for (;;) {
      Matrix<ExactScalar> m(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = coin(0.7) ? exact_scalar() : ExactScalar();
      if (m.rank() == n) return convert_matrix<F>(m);
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fermicalc
