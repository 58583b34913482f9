#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <type_traits>

#include "fermicalc/cli/config.hpp"
#include "fermicalc/cli/evaluate.hpp"
#include "fermicalc/cli/expr.hpp"
#include "fermicalc/sampler.hpp"
#include "support.hpp"

using namespace fctest;
using namespace fermicalc::cli;

namespace {

std::string eval_str(std::size_t m, const std::string& text) {
  const OrderingContext<S> ctx(standard_structure<S>(m));
  return evaluate(ctx, text).to_string();
}

// Low-grade values reparse with a narrower sort; lift them back.
template <class T, Field F>
T lift(const Value<F>& v, std::size_t n) {
  if (v.sort == Sort::scalar) return T::scalar(n, v.scalar);
  if constexpr (std::is_same_v<T, CliffordElement<F>>) {
    if (v.sort == Sort::cl) return v.cl;
  }
  T out(n);
  for (const auto& [mask, c] : v.ext.terms()) out.add_term(mask, c);
  return out;
}

}  // namespace

TEST(Parser, Trees) {
  EXPECT_EQ(to_string(parse("E(e1 ^ e2)")), "call(E, wedge(e1, e2))");
  EXPECT_EQ(to_string(parse("e1 * e2 + i")), "sum(cl_mul(e1, e2), 0+1i)");
  EXPECT_EQ(parse("E(e1 ^ e2)").sort, Sort::scalar);
  EXPECT_EQ(parse("e1 * e2").sort, Sort::cl);
  EXPECT_EQ(parse("e1 ^ e2").sort, Sort::ext);
  EXPECT_EQ(parse("e1 + 2").sort, Sort::vec);
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse("e1 ^ e2 * e3"), ParseError);
  EXPECT_THROW(parse("(e1 ^ e2) + e1 * e2"), ParseError);
  EXPECT_THROW(parse("foo(e1)"), ParseError);
  EXPECT_THROW(parse("e5", ParseOptions{2}), ParseError);
  EXPECT_THROW(parse("e0"), ParseError);
  EXPECT_THROW(parse("v3", ParseOptions{2}), ParseError);
  EXPECT_THROW(parse("tau(e1 ^ e2)"), ParseError);
  EXPECT_THROW(parse("E(e1 * e2)"), ParseError);
  EXPECT_THROW(parse("E(e1"), ParseError);
  EXPECT_THROW(parse("1/0"), ParseError);
  EXPECT_THROW(parse("e1 $ e2"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("jip(e1)"), ParseError);
}

TEST(Parser, ErrorOffset) {
  try {
    parse("e1 + $");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
}

TEST(Parser, ParenthesizedMixingAllowed) {
  EXPECT_NO_THROW(parse("(e1 ^ e2) ^ e3"));
  EXPECT_NO_THROW(parse("nu(e1 ^ e2) * e3"));
}

TEST(Evaluate, SpecValues) {
  EXPECT_EQ(eval_str(1, "E(e1 ^ e2)"), "0+1i");
  EXPECT_EQ(eval_str(1, "tau(nu(e1 ^ e2))"), "0+1i");
  EXPECT_EQ(eval_str(1, "jip(e2, e1)"), "0-1i");
  EXPECT_EQ(eval_str(2, "E(1)"), "1");
  EXPECT_EQ(eval_str(2, "E(e1)"), "0");
  EXPECT_EQ(eval_str(2, "E(e1 ^ e2 ^ e3 ^ e4)"), "-1");
  EXPECT_EQ(eval_str(1, "nuN(e1 ^ e2)"), "(0-1i) 1 + (1) e1 e2");
  EXPECT_EQ(eval_str(1, "EN(e1 ^ e2)"), "0-1i");
}

TEST(Evaluate, Builtins) {
  const OrderingContext<S> ctx(standard_structure<S>(2));
  EXPECT_EQ(evaluate(ctx, "star(i e1)").cl, cl_blade(4, {1}, -I()));
  EXPECT_EQ(evaluate(ctx, "G(e1 * e2 + e3)").cl, cl_blade(4, {1, 2}) - cl_blade(4, {3}));
  EXPECT_EQ(evaluate(ctx, "ip(e1 ^ e2, e1 ^ e2)").scalar, S(1));
  EXPECT_EQ(evaluate(ctx, "ip(e1 * e2, e1 * e2)").scalar, S(1));
  EXPECT_EQ(evaluate(ctx, "grade(1 + e1 ^ e2, 2)").ext, ext_blade(4, {1, 2}));
  const auto gp = evaluate(ctx, "gp(v1)");
  EXPECT_EQ(gp.sort, Sort::vec);
  EXPECT_EQ(gp.ext, to_multivector(gamma_vec(ctx.structure().j, Vec::unit(4, 1), Polarity::plus)));
  EXPECT_EQ(evaluate(ctx, "gm(v1 ^ v2)").ext,
            wedge(to_multivector(gamma_vec(ctx.structure().j, Vec::unit(4, 3), Polarity::minus)),
                  to_multivector(gamma_vec(ctx.structure().j, Vec::unit(4, 1), Polarity::minus))));
}

TEST(Evaluate, Errors) {
  const OrderingContext<S> ctx(standard_structure<S>(2));
  EXPECT_THROW(evaluate(ctx, "jip(i e1, e2)"), EvalError);
  EXPECT_THROW(evaluate(ctx, "grade(e1, 1/2)"), EvalError);
  EXPECT_THROW(evaluate(ctx, "grade(e1, 7)"), EvalError);
  EXPECT_THROW(evaluate(ctx, "e5"), ParseError);
}

TEST(Evaluate, Deterministic) {
  const auto s = random_structure(2, 3);
  const std::string text = "nu((e1 + 1/2 e2) ^ e3 ^ (e4 - i e1)) * star(nuN(e2 ^ e4))";
  const std::string first = evaluate(OrderingContext<S>(s), text).to_string();
  for (int k = 0; k < 3; ++k) EXPECT_EQ(evaluate(OrderingContext<S>(s), text).to_string(), first);
}

TEST(Evaluate, PrintParseRoundTripExact) {
  const OrderingContext<S> ctx(standard_structure<S>(2));
  Sampler r(71);
  for (int t = 0; t < 100; ++t) {
    const S x = r.exact_scalar();
    EXPECT_EQ(evaluate(ctx, x.to_string()).scalar, x) << x.to_string();
    const MV a = r.element<MV>(4, 5);
    EXPECT_EQ(lift<MV>(evaluate(ctx, a.to_string()), 4), a) << a.to_string();
    const CL c = r.element<CL>(4, 5);
    EXPECT_EQ(lift<CL>(evaluate(ctx, c.to_string()), 4), c) << c.to_string();
  }
}

TEST(Evaluate, PrintParseRoundTripFloat) {
  const OrderingContext<FloatScalar> ctx(convert_structure<FloatScalar>(standard_structure<S>(2)));
  Sampler r(72);
  for (int t = 0; t < 100; ++t) {
    const auto a = r.element<Multivector<FloatScalar>>(4, 5);
    const auto back = lift<Multivector<FloatScalar>>(evaluate(ctx, a.to_string()), 4);
    EXPECT_TRUE(approx_equal(back, a, 1e-11)) << a.to_string();
  }
}

TEST(Evaluate, FloatBackendAgrees) {
  const OrderingContext<FloatScalar> ctx(convert_structure<FloatScalar>(standard_structure<S>(1)));
  EXPECT_EQ(evaluate(ctx, "E(e1 ^ e2)").to_string(), "0+1i");
}

TEST(Config, Parse) {
  const Config c = parse_config(R"({"M":3,"structure":"random","backend":"float","seed":7,"tol":1e-8})");
  EXPECT_EQ(c.half_dim, 3u);
  EXPECT_EQ(c.structure, StructureKind::random);
  EXPECT_EQ(c.backend, Backend::floating);
  EXPECT_EQ(c.seed, 7u);
  EXPECT_DOUBLE_EQ(c.tol, 1e-8);
  const Config d = parse_config("{}");
  EXPECT_EQ(d.half_dim, 2u);
  EXPECT_EQ(d.structure, StructureKind::standard);
  EXPECT_EQ(d.backend, Backend::exact);
}

TEST(Config, Errors) {
  EXPECT_THROW(parse_config("{"), ConfigError);
  EXPECT_THROW(parse_config("[]"), ConfigError);
  EXPECT_THROW(parse_config(R"({"M":0})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"backend":"quad"})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"structure":"weird"})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"tol":-1})"), ConfigError);
  EXPECT_THROW(parse_config(R"({"structure":[["0","1/0"],["1","0"]]})"), ConfigError);
}

TEST(Config, ExplicitStructure) {
  const Config c = parse_config(R"({"structure":[["0","1"],["-1","0"]],
                                    "basis":[[{"value":"1/2","sqrt2":true},{"value":"1/2","sqrt2":true}]]})");
  EXPECT_EQ(c.half_dim, 1u);
  const auto s = build_structure<S>(c);
  const OrderingContext<S> ctx(s);
  EXPECT_EQ(expectation(ctx, ext_blade(2, {1, 2})), -I());
  EXPECT_EQ(build_structure<FloatScalar>(parse_config(R"({"structure":[["0","1"],["-1","0"]]})")).half_dim(), 1u);
  EXPECT_THROW(build_structure<S>(parse_config(R"({"structure":[["0","1"],["-1","0"]]})")), ConfigError);
  EXPECT_THROW(build_structure<S>(parse_config(R"({"structure":[["1","0"],["0","1"]],"basis":[["1","0"]]})")),
               ConfigError);
  EXPECT_THROW(build_structure<S>(parse_config(R"({"structure":[["0","1"],["-1","0"]],"basis":[["1","1"]]})")),
               ConfigError);
}

TEST(Config, StructureFile) {
  const std::string path = ::testing::TempDir() + "fermicalc_structure.json";
  {
    std::ofstream out(path);
    out << R"({"J":[["0","-1","0","0"],["1","0","0","0"],["0","0","0","-1"],["0","0","1","0"]],
              "basis":[["1","0","0","0"],["0","0","1","0"]]})";
  }
  Config c;
  load_structure_file(path, c);
  EXPECT_EQ(c.half_dim, 2u);
  EXPECT_EQ(c.structure, StructureKind::explicit_matrix);
  EXPECT_EQ(gamma_form(build_structure<S>(c)), gamma_form(standard_structure<S>(2)));
  std::remove(path.c_str());
  EXPECT_THROW(load_structure_file(path, c), ConfigError);
}
