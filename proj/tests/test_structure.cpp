#include <gtest/gtest.h>

#include "fermicalc/sampler.hpp"
#include "support.hpp"

using namespace fctest;

namespace {

Vec e(std::size_t dim, std::size_t k) { return Vec::unit(dim, k); }

Structure<S> rebased(const Structure<S>& s, std::vector<Vec> vectors) {
  return {s.j, UnitaryBasis<S>(s.j, std::move(vectors))};
}

}  // namespace

TEST(StandardStructure, Examples) {
  const auto s1 = standard_structure<S>(1);
  Matrix<S> j(2, 2);
  j(0, 1) = -1;
  j(1, 0) = 1;
  EXPECT_EQ(s1.j.matrix(), j);
  EXPECT_EQ(s1.basis[0], e(2, 1));
  const auto s2 = standard_structure<S>(2);
  EXPECT_EQ(s2.basis[1], e(4, 3));
  EXPECT_THROW(standard_structure<S>(0), std::invalid_argument);
}

TEST(ComplexStructure, RejectsInvalid) {
  EXPECT_THROW(ComplexStructure<S>(Matrix<S>::identity(2)), InvalidStructure);
  Matrix<S> scaled(2, 2);
  scaled(0, 1) = -2;
  scaled(1, 0) = q(1, 2);
  EXPECT_THROW((void)ComplexStructure<S>(scaled), InvalidStructure);  // squares to -I but not orthogonal
  EXPECT_THROW(ComplexStructure<S>(Matrix<S>(3, 3)), InvalidStructure);
}

TEST(UnitaryBasis, RejectsInvalid) {
  const auto s = standard_structure<S>(2);
  EXPECT_THROW(UnitaryBasis<S>(s.j, {e(4, 1)}), InvalidStructure);
  EXPECT_THROW(UnitaryBasis<S>(s.j, {e(4, 1), e(4, 2)}), InvalidStructure);  // e2 = J e1
  EXPECT_THROW(UnitaryBasis<S>(s.j, {e(4, 1), I() * e(4, 3)}), InvalidStructure);
  EXPECT_NO_THROW(UnitaryBasis<S>(s.j, {e(4, 2), e(4, 4)}));
}

TEST(CayleyStructure, ZeroGivesStandard) {
  const auto s = cayley_structure(Matrix<S>(4, 4));
  EXPECT_EQ(s.j.matrix(), standard_structure<S>(2).j.matrix());
}

TEST(CayleyStructure, Validation) {
  EXPECT_THROW(cayley_structure(Matrix<S>::identity(2)), std::invalid_argument);
  Matrix<S> a(2, 2);
  a(0, 1) = rt2();
  a(1, 0) = -rt2();
  EXPECT_THROW(cayley_structure(a), std::invalid_argument);
}

TEST(RandomStructure, ValidAndSeedDependent) {
  const auto a = random_structure(2, 1), b = random_structure(2, 2), a2 = random_structure(2, 1);
  for (const auto* s : {&a, &b}) {
    const auto& j = s->j.matrix();
    EXPECT_EQ(j.transpose() * j, Matrix<S>::identity(4));
    EXPECT_EQ(j * j, -Matrix<S>::identity(4));
  }
  EXPECT_EQ(a.j.matrix(), a2.j.matrix());
  EXPECT_FALSE(a.j.matrix() == b.j.matrix());
}

TEST(JInner, StandardM1) {
  const auto s = standard_structure<S>(1);
  EXPECT_EQ(j_inner(s.j, e(2, 1), e(2, 1)), S(1));
  EXPECT_EQ(j_inner(s.j, e(2, 1), e(2, 2)), I());
  EXPECT_EQ(j_inner(s.j, e(2, 2), e(2, 1)), -I());
  EXPECT_THROW(j_inner(s.j, e(2, 1), e(4, 1)), std::invalid_argument);
  EXPECT_THROW(j_inner(s.j, I() * e(2, 1), e(2, 1)), std::invalid_argument);
}

TEST(GammaVec, StandardM1) {
  const auto s = standard_structure<S>(1);
  const S h = S(1) / rt2();
  EXPECT_EQ(gamma_vec(s.j, e(2, 1), Polarity::plus), vec<S>({h, -I() * h}));
  EXPECT_EQ(gamma_vec(s.j, e(2, 1), Polarity::minus), vec<S>({h, I() * h}));
}

TEST(GammaVec, UnitarityAndIsotropy) {
  const auto s = random_structure(2, 9);
  Sampler r(31);
  for (int t = 0; t < 30; ++t) {
    const Vec x = r.real_vector<S>(4), y = r.real_vector<S>(4);
    const Vec xp = gamma_vec(s.j, x, Polarity::plus), yp = gamma_vec(s.j, y, Polarity::plus);
    const Vec xm = gamma_vec(s.j, x, Polarity::minus), ym = gamma_vec(s.j, y, Polarity::minus);
    EXPECT_EQ(hermitian(xp, yp), j_inner(s.j, x, y));
    EXPECT_EQ(hermitian(xm, ym), j_inner(s.j, x, y).conj());
    EXPECT_EQ(bilinear(xp, yp), S());
    EXPECT_EQ(bilinear(xm, ym), S());
    EXPECT_EQ(hermitian(xp, ym), S());
    EXPECT_EQ(bilinear(xm, yp), j_inner(s.j, x, y));
    EXPECT_EQ(s.j.apply(xp), I() * xp);
    EXPECT_EQ(s.j.apply(xm), -I() * xm);
  }
}

TEST(GammaExt, Examples) {
  const auto s = standard_structure<S>(2);
  const MV v1 = MV::generator(2, 1), v2 = MV::generator(2, 2);
  EXPECT_EQ(gamma_ext(s, v1, Polarity::plus), to_multivector(gamma_vec(s.j, s.basis[0], Polarity::plus)));
  const MV lhs = gamma_ext(s, wedge(v1, v2), Polarity::minus);
  const MV rhs = wedge(to_multivector(gamma_vec(s.j, s.basis[1], Polarity::minus)),
                       to_multivector(gamma_vec(s.j, s.basis[0], Polarity::minus)));
  EXPECT_EQ(lhs, rhs);
  EXPECT_THROW(gamma_ext(s, MV::generator(3, 3), Polarity::plus), std::out_of_range);
}

TEST(VjCoordinates, RoundTrip) {
  const auto s = random_structure(2, 4);
  Sampler r(32);
  for (int t = 0; t < 20; ++t) {
    const Vec x = r.real_vector<S>(4);
    EXPECT_EQ(from_vj_coordinates(s, vj_coordinates(s, x)), x);
  }
}

TEST(GammaForm, HandValues) {
  EXPECT_EQ(gamma_form(standard_structure<S>(1)), ext_blade(2, {1, 2}, I()));
  EXPECT_EQ(gamma_form(standard_structure<S>(2)), ext_blade(4, {1, 2}, I()) + ext_blade(4, {3, 4}, I()));
}

TEST(GammaForm, BasisIndependence) {
  const auto s = standard_structure<S>(2);
  const MV g = gamma_form(s);
  const Vec v1 = s.basis[0], v2 = s.basis[1];
  const S h = S(1) / rt2();
  EXPECT_EQ(gamma_form(rebased(s, {v2, v1})), g);
  EXPECT_EQ(gamma_form(rebased(s, {s.j.apply(v1), v2})), g);
  EXPECT_EQ(gamma_form(rebased(s, {h * (v1 + v2), h * (v1 - v2)})), g);
  EXPECT_EQ(gamma_form(rebased(s, {h * (v1 + s.j.apply(v1)), v2})), g);
}

TEST(OmegaForm, HandValues) {
  EXPECT_EQ(omega_form(standard_structure<S>(1)), ext_blade(2, {1, 2}, -I()));
  EXPECT_EQ(omega_form(standard_structure<S>(2)), ext_blade(4, {1, 2, 3, 4}, S(-1)));
}

TEST(OmegaForm, UnitAndInterleaved) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (std::size_t m : {1u, 2u, 3u}) {
      const auto s = random_structure(m, seed);
      const MV w = omega_form(s);
      EXPECT_EQ(det_inner(w, w), S(1));
      EXPECT_EQ(w, interleaved_omega(s));
    }
  }
}

TEST(Eigenprojector, Properties) {
  const auto s = random_structure(2, 5);
  const auto p = eigenprojector(s.j, Polarity::plus), m = eigenprojector(s.j, Polarity::minus);
  EXPECT_EQ(p * p, p);
  EXPECT_EQ(p + m, Matrix<S>::identity(4));
  EXPECT_EQ(p * m, Matrix<S>(4, 4));
  EXPECT_EQ(s.j.matrix() * p, I() * p);
}

TEST(FloatStructure, GramSchmidtBasis) {
  const auto exact = random_structure(3, 8);
  const ComplexStructure<FloatScalar> j(convert_matrix<FloatScalar>(exact.j.matrix()));
  const auto basis = unitary_basis_from(j);
  ASSERT_EQ(basis.size(), 3u);
  const Structure<FloatScalar> s{j, basis};
  EXPECT_TRUE(approx_equal(gamma_form(s), gamma_form(convert_structure<FloatScalar>(exact)), 1e-12));
}
