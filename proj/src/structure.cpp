#include "fermicalc/structure.hpp"

#include <cmath>
#include <random>

namespace fermicalc {

Structure<ExactScalar> cayley_structure(const Matrix<ExactScalar>& antisymmetric) {
  const std::size_t n = antisymmetric.rows();
  if (!antisymmetric.is_square() || n == 0 || n % 2 != 0)
    throw std::invalid_argument("cayley_structure: need a nonempty 2M x 2M matrix");
  if (!(antisymmetric.transpose() == -antisymmetric))
    throw std::invalid_argument("cayley_structure: matrix is not antisymmetric");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!antisymmetric(r, c).is_rational())
        throw std::invalid_argument("cayley_structure: entries must be rational");

  const auto id = Matrix<ExactScalar>::identity(n);
  // I + A is invertible: A antisymmetric has purely imaginary spectrum.
  const Matrix<ExactScalar> q = (id - antisymmetric) * (id + antisymmetric).inverse();
  const Structure<ExactScalar> standard = standard_structure<ExactScalar>(n / 2);

  ComplexStructure<ExactScalar> j(q * standard.j.matrix() * q.transpose(), 0.0);
  std::vector<Vector<ExactScalar>> basis;
  for (const auto& v : standard.basis.vectors()) basis.push_back(q * v);
  UnitaryBasis<ExactScalar> ub(j, std::move(basis), 0.0);
  return {std::move(j), std::move(ub)};
}

Structure<ExactScalar> random_structure(std::size_t half_dim, std::uint64_t seed) {
  if (half_dim == 0) throw std::invalid_argument("random_structure: M must be at least 1");
  const std::size_t n = 2 * half_dim;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-2, 2);
  std::uniform_int_distribution<long> den(1, 3);
  Matrix<ExactScalar> a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) {
      const ExactScalar x = ExactScalar::rational(num(rng), den(rng));
      a(r, c) = x;
      a(c, r) = -x;
    }
  return cayley_structure(a);
}

UnitaryBasis<FloatScalar> unitary_basis_from(const ComplexStructure<FloatScalar>& j,
                                             double pivot_tol) {
  const std::size_t n = j.dim();
  // Orthonormal real family built so far: v_1, Jv_1, v_2, Jv_2, ...
  std::vector<Vector<FloatScalar>> family;
  std::vector<Vector<FloatScalar>> basis;
  for (std::size_t k = 1; k <= n && basis.size() < j.half_dim(); ++k) {
    Vector<FloatScalar> v = Vector<FloatScalar>::unit(n, k);
    for (const auto& f : family) v = v - bilinear(f, v) * f;
    const double norm = std::sqrt(bilinear(v, v).value().real());
    if (norm < pivot_tol) continue;
    v = FloatScalar(1.0 / norm, 0.0) * v;
    Vector<FloatScalar> jv = j.apply(v);
    family.push_back(v);
    family.push_back(jv);
    basis.push_back(std::move(v));
  }
  return UnitaryBasis<FloatScalar>(j, std::move(basis));
}

}  // namespace fermicalc
