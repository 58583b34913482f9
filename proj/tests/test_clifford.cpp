#include <gtest/gtest.h>

#include "fermicalc/sampler.hpp"
#include "support.hpp"

using namespace fctest;

namespace {

CL cgen(std::size_t dim, int k) { return CL::generator(dim, static_cast<std::size_t>(k)); }

}  // namespace

TEST(CliffordProduct, Relations) {
  EXPECT_EQ(cl_mul(cgen(2, 1), cgen(2, 1)), CL::scalar(2, S(1)));
  EXPECT_TRUE((cl_mul(cgen(2, 1), cgen(2, 2)) + cl_mul(cgen(2, 2), cgen(2, 1))).is_zero());
  const CL e12 = cl_blade(2, {1, 2});
  EXPECT_EQ(cl_mul(e12, e12), CL::scalar(2, S(-1)));
  EXPECT_THROW(cl_mul(cgen(2, 1), cgen(4, 1)), std::invalid_argument);
}

TEST(CliffordProduct, VectorSquare) {
  Sampler r(21);
  for (int t = 0; t < 50; ++t) {
    const Vec z = r.complex_vector<S>(4);
    EXPECT_EQ(cl_mul(from_vector(z), from_vector(z)), CL::scalar(4, bilinear(z, z)));
  }
}

// The product agrees with Jordan-Wigner matrices, which are built without
// any blade sign bookkeeping.
TEST(CliffordProduct, MatrixRepresentationOracle) {
  for (std::size_t m : {1u, 2u}) {
    const std::size_t n = 2 * m;
    const auto gammas = jordan_wigner(m);
    Sampler r(22 + m);
    for (int t = 0; t < 40; ++t) {
      const CL a = r.element<CL>(n, 5), b = r.element<CL>(n, 5);
      EXPECT_EQ(represent(cl_mul(a, b), gammas), represent(a, gammas) * represent(b, gammas));
      EXPECT_EQ(trace(a), normalized_matrix_trace(represent(a, gammas)));
    }
  }
}

TEST(CliffordProduct, Associativity) {
  Sampler r(23);
  for (int t = 0; t < 30; ++t) {
    const CL a = r.element<CL>(6, 4), b = r.element<CL>(6, 4), c = r.element<CL>(6, 4);
    EXPECT_EQ(cl_mul(cl_mul(a, b), c), cl_mul(a, cl_mul(b, c)));
  }
}

TEST(GradeAutomorphism, Examples) {
  EXPECT_EQ(grade_automorphism(cgen(2, 1)), -cgen(2, 1));
  EXPECT_EQ(grade_automorphism(cl_blade(2, {1, 2})), cl_blade(2, {1, 2}));
  Sampler r(24);
  for (int t = 0; t < 30; ++t) {
    const CL a = r.element<CL>(4, 6), b = r.element<CL>(4, 6);
    EXPECT_EQ(grade_automorphism(grade_automorphism(a)), a);
    EXPECT_EQ(grade_automorphism(cl_mul(a, b)), cl_mul(grade_automorphism(a), grade_automorphism(b)));
  }
}

TEST(Star, Examples) {
  EXPECT_EQ(star(cl_blade(2, {1}, I())), cl_blade(2, {1}, -I()));
  EXPECT_EQ(star(cl_blade(2, {1, 2})), cl_blade(2, {1, 2}, S(-1)));
  Sampler r(25);
  for (int t = 0; t < 30; ++t) {
    const CL a = r.element<CL>(4, 6), b = r.element<CL>(4, 6);
    EXPECT_EQ(star(star(a)), a);
    EXPECT_EQ(star(cl_mul(a, b)), cl_mul(star(b), star(a)));
  }
}

TEST(Trace, Examples) {
  EXPECT_EQ(trace(CL::scalar(2, S(1))), S(1));
  EXPECT_EQ(trace(cl_blade(2, {1, 2})), S());
  Sampler r(26);
  for (int t = 0; t < 30; ++t) {
    const CL a = r.element<CL>(4, 6), b = r.element<CL>(4, 6);
    EXPECT_EQ(trace(cl_mul(a, b)), trace(cl_mul(b, a)));
    EXPECT_EQ(trace(grade_automorphism(a)), trace(a));
    EXPECT_EQ(trace(star(a)), trace(a).conj());
  }
}

TEST(TracialInner, Examples) {
  EXPECT_EQ(tracial_inner(cl_blade(2, {1, 2}), cl_blade(2, {1, 2})), S(1));
  for (BladeMask s = 0; s < 16; ++s)
    for (BladeMask t = 0; t < 16; ++t)
      EXPECT_EQ(tracial_inner(CL::blade(4, s), CL::blade(4, t)), s == t ? S(1) : S());
  Sampler r(27);
  for (int t = 0; t < 30; ++t) {
    const Vec x = r.complex_vector<S>(4), y = r.complex_vector<S>(4);
    EXPECT_EQ(tracial_inner(from_vector(x), from_vector(y)), bilinear(x.conj(), y));
  }
  EXPECT_THROW(tracial_inner(cgen(2, 1), cgen(4, 1)), std::invalid_argument);
}

TEST(FromVector, Examples) {
  EXPECT_EQ(from_vector(Vec::unit(2, 1)), cgen(2, 1));
  EXPECT_TRUE(from_vector(Vec(2)).is_zero());
}

TEST(CliffordElement, Printing) {
  const CL a = CL::scalar(2, I()) + cl_blade(2, {1, 2});
  EXPECT_EQ(a.to_string(), "(0+1i) 1 + (1) e1 e2");
}
