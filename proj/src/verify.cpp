#include "fermicalc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>
#include <type_traits>
#include <utility>

#include <nlohmann/json.hpp>

#include "fermicalc/sampler.hpp"

namespace fermicalc {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    char err[32];
    std::snprintf(err, sizeof err, "%.3g", c.max_err);
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " (trials=" << c.trials
       << ", max_err=" << err << ")\n";
    if (!c.passed) os << "  counterexample: " << c.counterexample << "\n";
  }
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["backend"] = backend;
  j["M"] = half_dim;
  j["passed"] = passed();
  j["failures"] = failures();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json entry{{"name", c.name},
                         {"passed", c.passed},
                         {"trials", c.trials},
                         {"max_err", c.max_err}};
    if (!c.passed) entry["counterexample"] = c.counterexample;
    j["checks"].push_back(std::move(entry));
  }
  return j.dump(2);
}

namespace {

struct Outcome {
  double err = 0.0;
  bool ok = true;

  Outcome& operator&=(const Outcome& other) {
    err = std::max(err, other.err);
    ok = ok && other.ok;
    return *this;
  }
};

Outcome holds(bool condition) { return {condition ? 0.0 : 1.0, condition}; }

template <Field F>
Outcome compare(const F& a, const F& b, double tol) {
  return {(a - b).magnitude(), approx_equal(a, b, tol)};
}

template <Field F, class Tag>
Outcome compare(const BladeSum<F, Tag>& a, const BladeSum<F, Tag>& b, double tol) {
  if (a.dim() != b.dim()) return {1.0, false};
  return {max_abs_diff(a, b), approx_equal(a, b, tol)};
}

template <Field F>
Outcome compare(const Vector<F>& a, const Vector<F>& b, double tol) {
  if (a.dim() != b.dim()) return {1.0, false};
  Outcome out;
  for (std::size_t i = 0; i < a.dim(); ++i) out &= compare(a[i], b[i], tol);
  return out;
}

template <Field F>
Outcome compare(const Matrix<F>& a, const Matrix<F>& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return {1.0, false};
  Outcome out;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out &= compare(a(r, c), b(r, c), tol);
  return out;
}

template <class T>
concept Printable = requires(const T& t) {
  { t.to_string() } -> std::convertible_to<std::string>;
};

template <Printable T>
std::string describe(const T& x) {
  return x.to_string();
}

inline std::string describe(const std::string& x) { return x; }
template <std::integral I>
std::string describe(I x) {
  return std::to_string(x);
}

template <Field F>
std::string describe(const Matrix<F>& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + m(r, c).to_string();
  }
  return out + "]";
}

template <class T>
std::string describe(const std::vector<T>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + describe(xs[i]);
  return out + "}";
}

template <class... Ts>
std::string describe(const std::tuple<Ts...>& t) {
  std::string out;
  std::apply(
      [&](const auto&... xs) { ((out += (out.empty() ? "" : " | ") + describe(xs)), ...); }, t);
  return out;
}

template <class T>
struct is_blade_sum : std::false_type {};
template <class F, class Tag>
struct is_blade_sum<BladeSum<F, Tag>> : std::true_type {};

template <class Prop, class Tuple>
Outcome evaluate(Prop& prop, const Tuple& input, std::string* error) {
  try {
    return std::apply(prop, input);
  } catch (const std::exception& ex) {
    if (error) *error = ex.what();
    return {INFINITY, false};
  }
}

// Greedily drops terms from multivector-valued inputs while the property
// keeps failing.
template <class Prop, class Tuple>
Tuple shrink(Prop& prop, Tuple input) {
  bool progress = true;
  while (progress) {
    progress = false;
    auto try_element = [&](auto index) {
      constexpr std::size_t I = decltype(index)::value;
      using Elem = std::tuple_element_t<I, Tuple>;
      if constexpr (is_blade_sum<Elem>::value) {
        for (const auto& [mask, c] : std::get<I>(input).terms()) {
          Tuple candidate = input;
          Elem reduced(std::get<I>(input).dim());
          for (const auto& [m2, c2] : std::get<I>(input).terms())
            if (m2 != mask) reduced.add_term(m2, c2);
          std::get<I>(candidate) = reduced;
          if (!evaluate(prop, candidate, nullptr).ok) {
            input = std::move(candidate);
            progress = true;
            return;
          }
        }
      }
    };
    [&]<std::size_t... Is>(std::index_sequence<Is...>) {
      ((progress ? void() : try_element(std::integral_constant<std::size_t, Is>{})), ...);
    }(std::make_index_sequence<std::tuple_size_v<Tuple>>{});
  }
  return input;
}

template <class Gen, class Prop>
CheckResult run_check(std::string name, std::size_t trials, Gen gen, Prop prop) {
  CheckResult result;
  result.name = std::move(name);
  result.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    auto input = gen(t);
    std::string error;
    const Outcome o = evaluate(prop, input, &error);
    result.max_err = std::max(result.max_err, o.err);
    if (!o.ok && result.passed) {
      result.passed = false;
      auto small = shrink(prop, input);
      result.counterexample = describe(small);
      if (!error.empty()) result.counterexample += " (error: " + error + ")";
    }
  }
  return result;
}

// Leibniz expansion; independent of the blade-coefficient inner product.
template <Field F>
F leibniz_det(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  F out;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    F term(1);
    for (std::size_t r = 0; r < n; ++r) term *= m(r, perm[r]);
    out += (inversions & 1) ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

template <Field F>
class Suite {
 public:
  Suite(const OrderingContext<F>& ctx, const VerifyOptions& options)
      : ctx_(ctx), s_(ctx.structure()), opt_(options), n_(ctx.dim()), m_(ctx.half_dim()) {}

  Report run() {
    add_scalar_checks();
    add_exterior_checks();
    add_clifford_checks();
    add_structure_checks();
    add_berezin_checks();

    Report report;
    report.backend = F::is_exact ? "exact" : "float";
    report.half_dim = m_;
    report.checks.resize(checks_.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t k = next++; k < checks_.size(); k = next++) report.checks[k] = checks_[k]();
    };
    const unsigned jobs = std::max(1u, opt_.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    return report;
  }

 private:
  using MV = Multivector<F>;
  using CL = CliffordElement<F>;
  using Vec = Vector<F>;

  // Registers a randomized check; each gets its own sampler stream so
  // results do not depend on scheduling.
  template <class Gen, class Prop>
  void random(std::string name, Gen gen, Prop prop, std::size_t trials = 0) {
    const std::uint64_t stream = checks_.size();
    const std::size_t count = trials ? trials : opt_.trials;
    checks_.push_back([name = std::move(name), gen, prop, count, stream, seed = opt_.seed] {
      Sampler sampler(seed, stream);
      return run_check(name, count, [&](std::size_t) { return gen(sampler); }, prop);
    });
  }

  template <class Case, class Prop>
  void cases(std::string name, std::function<std::vector<Case>()> make, Prop prop) {
    checks_.push_back([name = std::move(name), make, prop] {
      const std::vector<Case> all = make();
      return run_check(name, all.size(), [&](std::size_t t) { return all[t]; }, prop);
    });
  }

  double tol() const { return opt_.tol; }

  std::vector<BladeMask> all_masks(std::size_t dim) const {
    std::vector<BladeMask> out(std::size_t{1} << dim);
    std::iota(out.begin(), out.end(), BladeMask{0});
    return out;
  }

  std::vector<std::tuple<BladeMask, BladeMask>> all_mask_pairs(std::size_t dim) const {
    std::vector<std::tuple<BladeMask, BladeMask>> out;
    for (BladeMask a : all_masks(dim))
      for (BladeMask b : all_masks(dim)) out.emplace_back(a, b);
    return out;
  }

  void add_scalar_checks() {
    const double t = tol();
    random(
        "scalar.field_axioms",
        [](Sampler& r) {
          return std::tuple{r.scalar<F>(), r.scalar<F>(), r.scalar<F>(),
                            F::embed(r.nonzero_exact_scalar())};
        },
        [t](const F& x, const F& y, const F& z, const F& w) {
          Outcome o = compare((x + y) + z, x + (y + z), t);
          o &= compare((x * y) * z, x * (y * z), t);
          o &= compare(x * (y + z), x * y + x * z, t);
          o &= compare(x + y, y + x, t);
          o &= compare(x * y, y * x, t);
          o &= compare(w * w.inverse(), F(1), t);
          o &= compare(x - x, F(0), t);
          return o;
        });
    random(
        "scalar.conjugation",
        [](Sampler& r) { return std::tuple{r.scalar<F>(), r.scalar<F>()}; },
        [t](const F& x, const F& y) {
          Outcome o = compare((x * y).conj(), x.conj() * y.conj(), t);
          o &= compare((x + y).conj(), x.conj() + y.conj(), t);
          o &= compare(x.conj().conj(), x, t);
          return o;
        });
    random(
        "scalar.backend_agreement",
        [](Sampler& r) {
          return std::tuple{r.exact_scalar(), r.exact_scalar(), r.exact_scalar(),
                            r.nonzero_exact_scalar()};
        },
        [](const ExactScalar& x, const ExactScalar& y, const ExactScalar& z,
           const ExactScalar& w) {
          const ExactScalar exact = (x * y + z) / w - x.conj();
          const auto e = [](const ExactScalar& v) { return FloatScalar::embed(v); };
          const FloatScalar approx = (e(x) * e(y) + e(z)) / e(w) - e(x).conj();
          return compare(FloatScalar::embed(exact), approx, 1e-12);
        });
  }

  void add_exterior_checks() {
    const double t = tol();
    const std::size_t n = n_;
    random(
        "exterior.graded_anticommutativity",
        [n](Sampler& r) {
          const int p = static_cast<int>(r.integer(0, static_cast<long>(n)));
          const int q = static_cast<int>(r.integer(0, static_cast<long>(n)));
          return std::tuple{r.element_with_grades<MV>(n, 4, [p](int g) { return g == p; }),
                            r.element_with_grades<MV>(n, 4, [q](int g) { return g == q; }), p, q};
        },
        [t](const MV& a, const MV& b, int p, int q) {
          const MV rhs = wedge(b, a);
          return compare(wedge(a, b), ((p * q) & 1) ? -rhs : rhs, t);
        });
    random(
        "exterior.associativity",
        [n](Sampler& r) {
          return std::tuple{r.element<MV>(n, 4), r.element<MV>(n, 4), r.element<MV>(n, 4)};
        },
        [t](const MV& a, const MV& b, const MV& c) {
          return compare(wedge(wedge(a, b), c), wedge(a, wedge(b, c)), t);
        });
    random(
        "exterior.det_inner_hermitian",
        [n](Sampler& r) { return std::tuple{r.element<MV>(n, 6), r.element<MV>(n, 6)}; },
        [t](const MV& a, const MV& b) {
          Outcome o = compare(det_inner(a, b), det_inner(b, a).conj(), t);
          const F aa = det_inner(a, a);
          o &= compare(aa, aa.conj(), t);
          o &= holds(a.terms().empty() ? aa.is_zero() : aa.to_complex().real() > 0.0);
          return o;
        });
    random(
        "exterior.det_inner_gram_determinant",
        [n](Sampler& r) {
          const std::size_t k = static_cast<std::size_t>(r.integer(1, std::min<long>(3, n)));
          std::vector<Vec> xs, ys;
          for (std::size_t i = 0; i < k; ++i) {
            xs.push_back(r.complex_vector<F>(n));
            ys.push_back(r.complex_vector<F>(n));
          }
          return std::tuple{xs, ys};
        },
        [t, n](const std::vector<Vec>& xs, const std::vector<Vec>& ys) {
          MV x = MV::scalar(n, F(1)), y = MV::scalar(n, F(1));
          Matrix<F> gram(xs.size(), ys.size());
          for (std::size_t i = 0; i < xs.size(); ++i) {
            x = wedge(x, to_multivector(xs[i]));
            y = wedge(y, to_multivector(ys[i]));
            for (std::size_t j = 0; j < ys.size(); ++j) gram(i, j) = hermitian(xs[i], ys[j]);
          }
          return compare(det_inner(x, y), leibniz_det(gram), t);
        });
    random(
        "exterior.substitution_composition",
        [n](Sampler& r) {
          return std::tuple{r.element<MV>(n, 4), r.invertible_matrix<F>(n),
                            r.invertible_matrix<F>(n)};
        },
        [t](const MV& a, const Matrix<F>& b1, const Matrix<F>& b2) {
          const MV direct = substitute_generators(a, b1 * b2, Substitution::hom, t);
          const MV stepwise = substitute_generators(
              substitute_generators(a, b2, Substitution::hom, t), b1, Substitution::hom, t);
          return compare(direct, stepwise, t);
        },
        std::max<std::size_t>(1, opt_.trials / 5));
    random(
        "exterior.exp_inverse",
        [n](Sampler& r) {
          return std::tuple{
              r.element_with_grades<MV>(n, 4, [](int g) { return g >= 2 && g % 2 == 0; })};
        },
        [t, n](const MV& a) {
          return compare(wedge(ext_exp(a), ext_exp(-a)), MV::scalar(n, F(1)), t);
        });
  }

  void add_clifford_checks() {
    const double t = tol();
    const std::size_t n = n_;
    const auto& s = s_;
    random(
        "clifford.vector_square",
        [n](Sampler& r) { return std::tuple{r.complex_vector<F>(n)}; },
        [t, n](const Vec& z) {
          const CL zc = from_vector(z);
          return compare(cl_mul(zc, zc), CL::scalar(n, bilinear(z, z)), t);
        });
    random(
        "clifford.trace_tracial",
        [n](Sampler& r) { return std::tuple{r.element<CL>(n, 6), r.element<CL>(n, 6)}; },
        [t](const CL& a, const CL& b) { return compare(trace(cl_mul(a, b)), trace(cl_mul(b, a)), t); });
    random(
        "clifford.trace_grading_invariant",
        [n](Sampler& r) { return std::tuple{r.element<CL>(n, 8)}; },
        [t](const CL& a) { return compare(trace(grade_automorphism(a)), trace(a), t); });
    random(
        "clifford.trace_star",
        [n](Sampler& r) { return std::tuple{r.element<CL>(n, 8)}; },
        [t](const CL& a) { return compare(trace(star(a)), trace(a).conj(), t); });
    cases<std::tuple<int>>(
        "clifford.trace_unit", [] { return std::vector{std::tuple{0}}; },
        [t, n](int) { return compare(trace(CL::scalar(n, F(1))), F(1), t); });
    random(
        "clifford.grading_automorphism",
        [n](Sampler& r) { return std::tuple{r.element<CL>(n, 6), r.element<CL>(n, 6)}; },
        [t](const CL& a, const CL& b) {
          Outcome o = compare(grade_automorphism(cl_mul(a, b)),
                              cl_mul(grade_automorphism(a), grade_automorphism(b)), t);
          o &= compare(grade_automorphism(grade_automorphism(a)), a, t);
          return o;
        });
    random(
        "clifford.star_antiautomorphism",
        [n](Sampler& r) { return std::tuple{r.element<CL>(n, 6), r.element<CL>(n, 6)}; },
        [t](const CL& a, const CL& b) {
          Outcome o = compare(star(cl_mul(a, b)), cl_mul(star(b), star(a)), t);
          o &= compare(star(star(a)), a, t);
          return o;
        });
    cases<std::tuple<BladeMask>>(
        "clifford.monomial_gram",
        [this, n] {
          std::vector<std::tuple<BladeMask>> out;
          for (BladeMask m : all_masks(n)) out.emplace_back(m);
          return out;
        },
        [t, n](BladeMask a) {
          Outcome o;
          const CL ea = CL::blade(n, a);
          for (BladeMask b = 0; b < (BladeMask{1} << n); ++b)
            o &= compare(tracial_inner(ea, CL::blade(n, b)), a == b ? F(1) : F(0), t);
          return o;
        });
    random(
        "clifford.isotropic_anticommute",
        [n](Sampler& r) {
          return std::tuple{r.real_vector<F>(n), r.real_vector<F>(n), static_cast<int>(r.coin())};
        },
        [t, n, &s](const Vec& x, const Vec& y, int plus) {
          const Polarity pol = plus ? Polarity::plus : Polarity::minus;
          const CL a = from_vector(gamma_vec(s.j, x, pol));
          const CL b = from_vector(gamma_vec(s.j, y, pol));
          Outcome o = compare(cl_mul(a, b) + cl_mul(b, a), CL(n), t);
          o &= compare(cl_mul(a, a), CL(n), t);
          return o;
        });
  }

  void add_structure_checks() {
    const double t = tol();
    const std::size_t n = n_;
    const std::size_t m = m_;
    const auto& s = s_;
    const auto& ctx = ctx_;
    cases<std::tuple<int>>(
        "structure.eigenprojectors", [] { return std::vector{std::tuple{0}}; },
        [t, n, &s](int) {
          const auto pp = eigenprojector(s.j, Polarity::plus);
          const auto pm = eigenprojector(s.j, Polarity::minus);
          const auto& j = s.j.matrix();
          const F i = F::imag_unit();
          Outcome o = compare(pp * pp, pp, t);
          o &= compare(pm * pm, pm, t);
          o &= compare(pp + pm, Matrix<F>::identity(n), t);
          o &= compare(j * pp, i * pp, t);
          o &= compare(j * pm, -i * pm, t);
          return o;
        });
    random(
        "structure.isotropy",
        [n](Sampler& r) { return std::tuple{r.real_vector<F>(n), r.real_vector<F>(n)}; },
        [t, &s](const Vec& x, const Vec& y) {
          Outcome o = compare(bilinear(gamma_vec(s.j, x, Polarity::plus), gamma_vec(s.j, y, Polarity::plus)), F(0), t);
          o &= compare(bilinear(gamma_vec(s.j, x, Polarity::minus), gamma_vec(s.j, y, Polarity::minus)), F(0), t);
          return o;
        });
    random(
        "structure.perpendicularity",
        [n](Sampler& r) { return std::tuple{r.real_vector<F>(n), r.real_vector<F>(n)}; },
        [t, &s](const Vec& x, const Vec& y) {
          const MV xm = to_multivector(gamma_vec(s.j, x, Polarity::minus));
          const MV yp = to_multivector(gamma_vec(s.j, y, Polarity::plus));
          return compare(det_inner(xm, yp), F(0), t);
        });
    random(
        "structure.gamma_plus_unitary",
        [n](Sampler& r) { return std::tuple{r.real_vector<F>(n), r.real_vector<F>(n)}; },
        [t, &s](const Vec& x, const Vec& y) {
          return compare(hermitian(gamma_vec(s.j, x, Polarity::plus), gamma_vec(s.j, y, Polarity::plus)),
                         j_inner(s.j, x, y), t);
        });
    random(
        "structure.gamma_minus_antiunitary",
        [n](Sampler& r) { return std::tuple{r.real_vector<F>(n), r.real_vector<F>(n)}; },
        [t, &s](const Vec& x, const Vec& y) {
          return compare(hermitian(gamma_vec(s.j, x, Polarity::minus), gamma_vec(s.j, y, Polarity::minus)),
                         j_inner(s.j, y, x), t);
        });
    random(
        "structure.conjugate_pair",
        [n](Sampler& r) { return std::tuple{r.real_vector<F>(n)}; },
        [t, &s](const Vec& v) {
          return compare(gamma_vec(s.j, v, Polarity::plus).conj(), gamma_vec(s.j, v, Polarity::minus), t);
        });
    random(
        "structure.bilinear_pairing",
        [n](Sampler& r) { return std::tuple{r.real_vector<F>(n), r.real_vector<F>(n)}; },
        [t, &s](const Vec& x, const Vec& y) {
          return compare(bilinear(gamma_vec(s.j, x, Polarity::minus), gamma_vec(s.j, y, Polarity::plus)),
                         j_inner(s.j, x, y), t);
        });
    random(
        "structure.gamma_ext_unitarity",
        [m](Sampler& r) { return std::tuple{r.element<MV>(m, 4), r.element<MV>(m, 4)}; },
        [t, &s](const MV& xi, const MV& eta) {
          Outcome o = compare(det_inner(gamma_ext(s, xi, Polarity::plus, t), gamma_ext(s, eta, Polarity::plus, t)),
                              det_inner(xi, eta), t);
          o &= compare(det_inner(gamma_ext(s, xi, Polarity::minus, t), gamma_ext(s, eta, Polarity::minus, t)),
                       det_inner(eta, xi), t);
          return o;
        });
    cases<std::tuple<std::string>>(
        "structure.gamma_basis_independence",
        [m] {
          std::vector<std::tuple<std::string>> out{{"permuted"}, {"rotated-by-J"}, {"phase"}};
          if (m >= 2) out.emplace_back("mixed");
          return out;
        },
        [t, m, &s, &ctx](const std::string& kind) {
          std::vector<Vec> vs = s.basis.vectors();
          const F r2 = F(1) / F::sqrt2();
          if (kind == "permuted") {
            std::reverse(vs.begin(), vs.end());
          } else if (kind == "rotated-by-J") {
            for (auto& v : vs) v = s.j.apply(v);
          } else if (kind == "phase") {
            vs[0] = r2 * (vs[0] + s.j.apply(vs[0]));
          } else if (m >= 2) {
            const Vec a = vs[0], b = vs[1];
            vs[0] = r2 * (a + b);
            vs[1] = r2 * (a - b);
          }
          Structure<F> alt{s.j, UnitaryBasis<F>(s.j, vs, t)};
          return compare(gamma_form(alt), ctx.gamma(), t);
        });
    cases<std::tuple<int>>(
        "structure.omega_unit", [] { return std::vector{std::tuple{0}}; },
        [t, &ctx](int) { return compare(det_inner(ctx.omega(), ctx.omega()), F(1), t); });
    cases<std::tuple<int>>(
        "structure.omega_interleaved", [] { return std::vector{std::tuple{0}}; },
        [t, m, &s, &ctx](int) {
          F factorial(1);
          for (std::size_t k = 2; k <= m; ++k) factorial *= F(static_cast<long>(k));
          Outcome o = compare(interleaved_omega(s), ctx.omega(), t);
          o &= compare(F(1) / factorial * wedge_power(-ctx.gamma(), m), ctx.omega(), t);
          return o;
        });
  }

  void add_berezin_checks() {
    const double t = tol();
    const std::size_t n = n_;
    const std::size_t m = m_;
    const auto& s = s_;
    const auto& ctx = ctx_;

    auto blade_cases = [this, n] {
      std::vector<std::tuple<MV>> out;
      for (BladeMask b : all_masks(n)) out.emplace_back(MV::blade(n, b));
      return out;
    };

    cases<std::tuple<int>>(
        "berezin.normalization", [] { return std::vector{std::tuple{0}}; },
        [t, n, &ctx](int) {
          const MV one = MV::scalar(n, F(1));
          Outcome o = compare(expectation(ctx, one), F(1), t);
          o &= compare(expectation_normal(ctx, one), F(1), t);
          o &= compare(nu(ctx, one), CL::scalar(n, F(1)), t);
          return o;
        });
    cases<std::tuple<MV>>("berezin.main_theorem_blades", blade_cases, [t, &ctx](const MV& z) {
      return compare(expectation(ctx, z), trace(nu(ctx, z)), t);
    });
    random(
        "berezin.main_theorem_random", [n](Sampler& r) { return std::tuple{r.element<MV>(n, 8)}; },
        [t, &ctx](const MV& z) { return compare(expectation(ctx, z), trace(nu(ctx, z)), t); });
    cases<std::tuple<MV>>("berezin.normal_main_theorem_blades", blade_cases, [t, &ctx](const MV& z) {
      return compare(expectation_normal(ctx, z), trace(nu_normal(ctx, z)), t);
    });
    random(
        "berezin.normal_main_theorem_random",
        [n](Sampler& r) { return std::tuple{r.element<MV>(n, 8)}; },
        [t, &ctx](const MV& z) {
          return compare(expectation_normal(ctx, z), trace(nu_normal(ctx, z)), t);
        });

    auto blade_pairs = [this, m] {
      std::vector<std::tuple<MV, MV>> out;
      for (auto [a, b] : all_mask_pairs(m)) out.emplace_back(MV::blade(m, a), MV::blade(m, b));
      return out;
    };
    auto inner_product = [t, &s, &ctx](const MV& xi, const MV& eta) {
      const MV zeta = wedge(gamma_ext(s, xi, Polarity::minus, t), gamma_ext(s, eta, Polarity::plus, t));
      return compare(expectation(ctx, zeta), det_inner(xi, eta), t);
    };
    auto normal_inner_product = [t, &s, &ctx](const MV& xi, const MV& eta) {
      const MV zeta = wedge(gamma_ext(s, eta, Polarity::plus, t), gamma_ext(s, xi, Polarity::minus, t));
      return compare(expectation_normal(ctx, zeta), det_inner(xi, eta), t);
    };
    cases<std::tuple<MV, MV>>("berezin.inner_product_blades", blade_pairs, inner_product);
    random(
        "berezin.inner_product_random",
        [m](Sampler& r) { return std::tuple{r.element<MV>(m, 4), r.element<MV>(m, 4)}; },
        inner_product);
    random(
        "berezin.inner_product_decomposable",
        [n, m](Sampler& r) {
          const std::size_t k = static_cast<std::size_t>(r.integer(0, std::min<long>(3, m)));
          std::vector<Vec> xs, ys;
          for (std::size_t i = 0; i < k; ++i) {
            xs.push_back(r.real_vector<F>(n));
            ys.push_back(r.real_vector<F>(n));
          }
          return std::tuple{xs, ys};
        },
        [t, m, &s, &ctx](const std::vector<Vec>& xs, const std::vector<Vec>& ys) {
          MV xi = MV::scalar(m, F(1)), eta = MV::scalar(m, F(1));
          MV minus_xi = MV::scalar(s.dim(), F(1));
          Matrix<F> gram(xs.size(), ys.size());
          for (std::size_t i = 0; i < xs.size(); ++i) {
            xi = wedge(xi, to_multivector(vj_coordinates(s, xs[i])));
            eta = wedge(eta, to_multivector(vj_coordinates(s, ys[i])));
            minus_xi = wedge(to_multivector(gamma_vec(s.j, xs[i], Polarity::minus)), minus_xi);
            for (std::size_t j = 0; j < ys.size(); ++j) gram(i, j) = j_inner(s.j, xs[i], ys[j]);
          }
          Outcome o = compare(gamma_ext(s, xi, Polarity::minus, t), minus_xi, t);
          const MV zeta = wedge(gamma_ext(s, xi, Polarity::minus, t), gamma_ext(s, eta, Polarity::plus, t));
          o &= compare(expectation(ctx, zeta), leibniz_det(gram), t);
          return o;
        });
    cases<std::tuple<MV, MV>>("berezin.normal_inner_product_blades", blade_pairs, normal_inner_product);
    random(
        "berezin.normal_inner_product_random",
        [m](Sampler& r) { return std::tuple{r.element<MV>(m, 4), r.element<MV>(m, 4)}; },
        normal_inner_product);

    cases<std::tuple<BladeMask, BladeMask>>(
        "berezin.factorized_action", [this, m] { return all_mask_pairs(m); },
        [t, n, m, &s, &ctx](BladeMask a, BladeMask b) {
          const MV xi = MV::blade(m, a), eta = MV::blade(m, b);
          std::vector<Vec> minus_factors, plus_factors;
          for (std::size_t g : generators_of(a))
            minus_factors.insert(minus_factors.begin(), gamma_vec(s.j, s.basis[g - 1], Polarity::minus));
          for (std::size_t g : generators_of(b))
            plus_factors.push_back(gamma_vec(s.j, s.basis[g - 1], Polarity::plus));
          const CL minus_cl = cl_product(n, minus_factors), plus_cl = cl_product(n, plus_factors);
          const MV gm = gamma_ext(s, xi, Polarity::minus, t), gp = gamma_ext(s, eta, Polarity::plus, t);
          Outcome o = compare(nu(ctx, wedge(gm, gp)), cl_mul(minus_cl, plus_cl), t);
          o &= compare(nu_normal(ctx, wedge(gp, gm)), cl_mul(plus_cl, minus_cl), t);
          return o;
        });
    cases<std::tuple<std::size_t, std::size_t, int>>(
        "berezin.block_isotropy",
        [m] {
          std::vector<std::tuple<std::size_t, std::size_t, int>> out;
          for (int block = 0; block < 2; ++block)
            for (std::size_t a = 0; a < m; ++a)
              for (std::size_t b = 0; b < m; ++b) out.emplace_back(a, b, block);
          return out;
        },
        [t, n, m, &ctx](std::size_t a, std::size_t b, int block) {
          const auto& basis = ctx.adapted_basis(Ordering::antinormal);
          const std::size_t off = block ? m : 0;
          CL fa(n), fb(n);
          for (std::size_t r = 0; r < n; ++r) {
            fa.add_term(BladeMask{1} << r, basis(r, off + a));
            fb.add_term(BladeMask{1} << r, basis(r, off + b));
          }
          return compare(cl_mul(fa, fb) + cl_mul(fb, fa), CL(n), t);
        });
    cases<std::tuple<int>>(
        "berezin.parity_bijection", [] { return std::vector<std::tuple<int>>{{0}, {1}}; },
        [t, n, &ctx](int which) {
          const Ordering ord = which ? Ordering::normal : Ordering::antinormal;
          const Matrix<F> mat = ordering_matrix(ctx, ord);
          Outcome o;
          for (std::size_t r = 0; r < mat.rows(); ++r)
            for (std::size_t c = 0; c < mat.cols(); ++c)
              if (((grade_of(static_cast<BladeMask>(r)) ^ grade_of(static_cast<BladeMask>(c))) & 1) != 0)
                o &= compare(mat(r, c), F(0), t);
          // Rank per parity block.
          for (int parity = 0; parity < 2; ++parity) {
            std::vector<std::size_t> idx;
            for (std::size_t k = 0; k < mat.rows(); ++k)
              if ((grade_of(static_cast<BladeMask>(k)) & 1) == parity) idx.push_back(k);
            Matrix<F> blockm(idx.size(), idx.size());
            for (std::size_t r = 0; r < idx.size(); ++r)
              for (std::size_t c = 0; c < idx.size(); ++c) blockm(r, c) = mat(idx[r], idx[c]);
            o &= holds(blockm.rank(t) == idx.size());
          }
          (void)n;
          return o;
        });
    random(
        "berezin.odd_expectation_vanishes",
        [n](Sampler& r) {
          return std::tuple{r.element_with_grades<MV>(n, 8, [](int g) { return g % 2 == 1; })};
        },
        [t, &ctx](const MV& z) {
          Outcome o = compare(expectation(ctx, z), F(0), t);
          o &= compare(expectation_normal(ctx, z), F(0), t);
          o &= holds(nu(ctx, z).has_parity(1) && nu_normal(ctx, z).has_parity(1));
          return o;
        });
    random(
        "berezin.nu_fixes_vectors",
        [n](Sampler& r) { return std::tuple{r.complex_vector<F>(n)}; },
        [t, &ctx](const Vec& w) {
          Outcome o = compare(nu(ctx, to_multivector(w)), from_vector(w), t);
          o &= compare(nu_normal(ctx, to_multivector(w)), from_vector(w), t);
          return o;
        });
    random(
        "berezin.nu_degree2",
        [n](Sampler& r) { return std::tuple{r.real_vector<F>(n), r.real_vector<F>(n)}; },
        [t, &ctx](const Vec& x, const Vec& y) {
          return compare(nu(ctx, wedge(to_multivector(x), to_multivector(y))), nu_formula_deg2(ctx, x, y), t);
        });
    random(
        "berezin.nu_degree3",
        [n](Sampler& r) {
          return std::tuple{r.real_vector<F>(n), r.real_vector<F>(n), r.real_vector<F>(n)};
        },
        [t, &ctx](const Vec& x, const Vec& y, const Vec& z) {
          const MV w = wedge(wedge(to_multivector(x), to_multivector(y)), to_multivector(z));
          return compare(nu(ctx, w), nu_formula_deg3(ctx, x, y, z), t);
        });
    random(
        "berezin.normal_nu_degree2",
        [n](Sampler& r) { return std::tuple{r.real_vector<F>(n), r.real_vector<F>(n)}; },
        [t, &ctx](const Vec& x, const Vec& y) {
          return compare(nu_normal(ctx, wedge(to_multivector(x), to_multivector(y))),
                         nu_normal_formula_deg2(ctx, x, y), t);
        });
    random(
        "berezin.normal_nu_degree3",
        [n](Sampler& r) {
          return std::tuple{r.real_vector<F>(n), r.real_vector<F>(n), r.real_vector<F>(n)};
        },
        [t, &ctx](const Vec& x, const Vec& y, const Vec& z) {
          const MV w = wedge(wedge(to_multivector(x), to_multivector(y)), to_multivector(z));
          return compare(nu_normal(ctx, w), nu_normal_formula_deg3(ctx, x, y, z), t);
        });
  }

  const OrderingContext<F>& ctx_;
  const Structure<F>& s_;
  VerifyOptions opt_;
  std::size_t n_;
  std::size_t m_;
  std::vector<std::function<CheckResult()>> checks_;
};

}  // namespace

template <Field F>
Report verify_suite(const OrderingContext<F>& ctx, const VerifyOptions& options) {
  return Suite<F>(ctx, options).run();
}

template Report verify_suite<ExactScalar>(const OrderingContext<ExactScalar>&, const VerifyOptions&);
template Report verify_suite<FloatScalar>(const OrderingContext<FloatScalar>&, const VerifyOptions&);

}  // namespace fermicalc
