#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "fermicalc/verify.hpp"
#include "support.hpp"

using namespace fctest;

TEST(VerifySuite, PassesAtM1AndM2) {
  for (std::size_t m : {1u, 2u}) {
    const OrderingContext<S> ctx(standard_structure<S>(m));
    const Report report = verify_suite(ctx, VerifyOptions{20, 1});
    EXPECT_TRUE(report.passed()) << report.to_text();
    EXPECT_EQ(report.failures(), 0u);
    EXPECT_EQ(report.backend, "exact");
    EXPECT_EQ(report.half_dim, m);
  }
}

TEST(VerifySuite, FloatBackend) {
  const OrderingContext<FloatScalar> ctx(convert_structure<FloatScalar>(random_structure(2, 4)));
  const Report report = verify_suite(ctx, VerifyOptions{20, 2});
  EXPECT_TRUE(report.passed()) << report.to_text();
  EXPECT_EQ(report.backend, "float");
}

TEST(VerifySuite, ThreadCountDoesNotChangeResults) {
  const OrderingContext<S> ctx(random_structure(2, 5));
  VerifyOptions serial{10, 3};
  VerifyOptions parallel = serial;
  parallel.jobs = 4;
  const Report a = verify_suite(ctx, serial), b = verify_suite(ctx, parallel);
  EXPECT_EQ(a.to_text(), b.to_text());
}

TEST(VerifySuite, CoversEveryFamily) {
  const OrderingContext<S> ctx(standard_structure<S>(1));
  const Report report = verify_suite(ctx, VerifyOptions{5, 1});
  for (const char* name :
       {"clifford.vector_square", "clifford.trace_tracial", "clifford.trace_grading_invariant",
        "clifford.trace_unit", "clifford.monomial_gram", "structure.gamma_basis_independence",
        "structure.omega_unit", "structure.omega_interleaved", "structure.bilinear_pairing",
        "structure.isotropy", "structure.perpendicularity", "structure.gamma_plus_unitary",
        "structure.gamma_minus_antiunitary", "berezin.main_theorem_blades", "berezin.inner_product_blades",
        "berezin.nu_degree2", "berezin.nu_degree3", "berezin.normal_main_theorem_blades",
        "berezin.normal_nu_degree2", "berezin.normal_nu_degree3"})
    EXPECT_NE(report.find(name), nullptr) << name;
  EXPECT_EQ(report.find("no.such.check"), nullptr);
}

TEST(Report, TextAndJson) {
  Report r;
  r.backend = "exact";
  r.half_dim = 2;
  r.checks.push_back({"a.ok", true, 3, 0.0, ""});
  r.checks.push_back({"b.bad", false, 7, 0.5, "(1) e1"});
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failures(), 1u);
  const std::string text = r.to_text();
  EXPECT_NE(text.find("PASS a.ok (trials=3, max_err=0)"), std::string::npos) << text;
  EXPECT_NE(text.find("FAIL b.bad (trials=7, max_err=0.5)"), std::string::npos) << text;
  EXPECT_NE(text.find("counterexample: (1) e1"), std::string::npos) << text;
  const auto j = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(j.at("backend"), "exact");
  EXPECT_EQ(j.at("checks").size(), 2u);
  EXPECT_EQ(j.at("passed"), false);
}
