// Python bindings over the exact backend, plus string-level eval/verify on
// either backend.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <type_traits>

#include "fermicalc/berezin.hpp"
#include "fermicalc/cli/config.hpp"
#include "fermicalc/cli/evaluate.hpp"
#include "fermicalc/verify.hpp"

namespace py = pybind11;
using namespace fermicalc;

namespace {

using S = ExactScalar;
using MV = Multivector<S>;
using CL = CliffordElement<S>;
using Vec = Vector<S>;
using Ctx = OrderingContext<S>;

S to_scalar(const py::handle& h) {
  if (py::isinstance<S>(h)) return h.cast<S>();
  if (py::isinstance<py::int_>(h)) return S(Rational(py::str(h).cast<std::string>()));
  if (py::isinstance<py::str>(h)) return S(parse_rational(h.cast<std::string>()));
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))  // fractions.Fraction
    return S(Rational(py::str(h.attr("numerator")).cast<std::string>() + "/" +
                      py::str(h.attr("denominator")).cast<std::string>()));
  throw py::type_error("expected Scalar, int, Fraction or 'p/q' string");
}

BladeMask mask_from(const std::vector<int>& gens, std::size_t dim) {
  BladeMask m = 0;
  for (int g : gens) {
    if (g < 1 || static_cast<std::size_t>(g) > dim)
      throw py::index_error("generator " + std::to_string(g) + " outside 1.." + std::to_string(dim));
    const BladeMask bit = BladeMask{1} << (g - 1);
    if (m & bit) throw py::value_error("repeated generator " + std::to_string(g));
    m |= bit;
  }
  return m;
}

// Blade from an arbitrary generator order, with the reordering sign.
template <class T>
T blade_from(std::size_t dim, const std::vector<int>& gens, const S& coeff) {
  mask_from(gens, dim);
  T out = T::scalar(dim, coeff);
  for (int g : gens) {
    T next(dim);
    for (const auto& [mask, c] : out.terms()) {
      const BladeMask bit = BladeMask{1} << (g - 1);
      next.add_term(mask | bit, S(reorder_sign(mask, bit)) * c);
    }
    out = next;
  }
  return out;
}

template <class T>
py::dict terms_dict(const T& a) {
  py::dict d;
  for (const auto& [mask, c] : a.terms()) {
    py::tuple key(grade_of(mask));
    std::size_t k = 0;
    for (std::size_t g : generators_of(mask)) key[k++] = py::int_(g);
    d[key] = c;
  }
  return d;
}

Vec to_vector(const py::iterable& items) {
  std::vector<S> comps;
  for (const auto& h : items) comps.push_back(to_scalar(h));
  return Vec(std::move(comps));
}

Matrix<S> to_matrix(const std::vector<std::vector<py::object>>& rows) {
  const std::size_t n = rows.size();
  Matrix<S> m(n, n == 0 ? 0 : rows.front().size());
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != m.cols()) throw py::value_error("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = to_scalar(rows[r][c]);
  }
  return m;
}

template <class T>
void bind_blade_sum(py::class_<T>& cls) {
  cls.def(py::init<std::size_t>(), py::arg("dim"))
      .def_static("scalar", [](std::size_t dim, const py::object& c) { return T::scalar(dim, to_scalar(c)); })
      .def_static("generator", &T::generator, py::arg("dim"), py::arg("k"))
      .def_static(
          "blade",
          [](std::size_t dim, const std::vector<int>& gens, const py::object& c) {
            return blade_from<T>(dim, gens, to_scalar(c));
          },
          py::arg("dim"), py::arg("generators"), py::arg("coeff") = py::int_(1))
      .def_property_readonly("dim", &T::dim)
      .def("terms", &terms_dict<T>)
      .def("coeff", [](const T& a, const std::vector<int>& gens) { return a.coeff(mask_from(gens, a.dim())); })
      .def("is_zero", &T::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(
          "__mul__",
          [](const T& a, const py::object& c) -> T {
            if constexpr (std::is_same_v<T, CL>) {
              if (py::isinstance<CL>(c)) return cl_mul(a, c.cast<CL>());
            }
            return to_scalar(c) * a;
          },
          py::is_operator())
      .def("__rmul__", [](const T& a, const py::object& c) { return to_scalar(c) * a; }, py::is_operator())
      .def("__str__", &T::to_string)
      .def("__repr__", [name = std::string(py::str(cls.attr("__name__")))](const T& a) {
        return name + "(" + a.to_string() + ")";
      });
}

}  // namespace

PYBIND11_MODULE(_fermicalc, m) {
  m.doc() = "Exterior and Clifford algebra kernel with Berezin expectation";

  py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);
  py::register_exception<InvalidStructure>(m, "InvalidStructure", PyExc_ValueError);
  py::register_exception<cli::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<cli::EvalError>(m, "EvalError", PyExc_ValueError);
  py::register_exception<cli::ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<S>(m, "Scalar")
      .def(py::init<>())
      .def(py::init([](const py::object& x) { return to_scalar(x); }))
      .def(py::init([](const py::object& re, const py::object& im, const py::object& s_re, const py::object& s_im) {
             const S a = to_scalar(re), b = to_scalar(im), c = to_scalar(s_re), d = to_scalar(s_im);
             return S(a.re(), b.re(), c.re(), d.re());
           }),
           py::arg("re"), py::arg("im") = 0, py::arg("sqrt2_re") = 0, py::arg("sqrt2_im") = 0)
      .def_static("i", &S::imag_unit)
      .def_static("sqrt2", &S::sqrt2)
      .def_property_readonly("re", [](const S& x) { return rational_to_string(x.re()); })
      .def_property_readonly("im", [](const S& x) { return rational_to_string(x.im()); })
      .def_property_readonly("sqrt2_re", [](const S& x) { return rational_to_string(x.sqrt2_re()); })
      .def_property_readonly("sqrt2_im", [](const S& x) { return rational_to_string(x.sqrt2_im()); })
      .def("conj", &S::conj)
      .def("is_zero", &S::is_zero)
      .def("__complex__", &S::to_complex)
      .def("__add__", [](const S& a, const py::object& b) { return a + to_scalar(b); }, py::is_operator())
      .def("__radd__", [](const S& a, const py::object& b) { return to_scalar(b) + a; }, py::is_operator())
      .def("__sub__", [](const S& a, const py::object& b) { return a - to_scalar(b); }, py::is_operator())
      .def("__rsub__", [](const S& a, const py::object& b) { return to_scalar(b) - a; }, py::is_operator())
      .def("__mul__", [](const S& a, const py::object& b) { return a * to_scalar(b); }, py::is_operator())
      .def("__rmul__", [](const S& a, const py::object& b) { return to_scalar(b) * a; }, py::is_operator())
      .def("__truediv__", [](const S& a, const py::object& b) { return a / to_scalar(b); }, py::is_operator())
      .def("__rtruediv__", [](const S& a, const py::object& b) { return to_scalar(b) / a; }, py::is_operator())
      .def(-py::self)
      .def("__eq__", [](const S& a, const py::object& b) {
        try {
          return a == to_scalar(b);
        } catch (const py::type_error&) {
          return false;
        }
      })
      .def("__hash__", [](const S& a) { return py::hash(py::str(a.to_string())); })
      .def("__str__", &S::to_string)
      .def("__repr__", [](const S& x) { return "Scalar(" + x.to_string() + ")"; });

  py::class_<MV> mv(m, "Multivector");
  bind_blade_sum(mv);
  mv.def("__xor__", [](const MV& a, const MV& b) { return wedge(a, b); }, py::is_operator())
      .def("grade", &grade_project<S>, py::arg("k"));

  py::class_<CL> cl(m, "CliffordElement");
  bind_blade_sum(cl);

  py::class_<Vec>(m, "Vector")
      .def(py::init([](const py::iterable& items) { return to_vector(items); }))
      .def_static("unit", &Vec::unit, py::arg("dim"), py::arg("k"))
      .def_property_readonly("dim", &Vec::dim)
      .def("components", [](const Vec& v) { return v.comps(); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def("__rmul__", [](const Vec& v, const py::object& c) { return to_scalar(c) * v; }, py::is_operator())
      .def("__str__", &Vec::to_string)
      .def("__repr__", [](const Vec& v) { return "Vector(" + v.to_string() + ")"; });

  py::enum_<Polarity>(m, "Polarity").value("minus", Polarity::minus).value("plus", Polarity::plus);

  py::class_<Structure<S>>(m, "Structure")
      .def(py::init([](const std::vector<std::vector<py::object>>& j, const std::vector<py::iterable>& basis) {
             ComplexStructure<S> cs(to_matrix(j), 0.0);
             std::vector<Vec> vs;
             for (const auto& b : basis) vs.push_back(to_vector(b));
             return Structure<S>{cs, UnitaryBasis<S>(cs, std::move(vs), 0.0)};
           }),
           py::arg("J"), py::arg("basis"))
      .def_static("standard", &standard_structure<S>, py::arg("M"))
      .def_static("random", &random_structure, py::arg("M"), py::arg("seed"))
      .def_property_readonly("M", &Structure<S>::half_dim)
      .def_property_readonly("dim", &Structure<S>::dim)
      .def_property_readonly("basis", [](const Structure<S>& s) { return s.basis.vectors(); })
      .def("J", [](const Structure<S>& s) {
        const auto& j = s.j.matrix();
        std::vector<std::vector<S>> rows(j.rows(), std::vector<S>(j.cols()));
        for (std::size_t r = 0; r < j.rows(); ++r)
          for (std::size_t c = 0; c < j.cols(); ++c) rows[r][c] = j(r, c);
        return rows;
      })
      .def("j_inner", [](const Structure<S>& s, const Vec& x, const Vec& y) { return j_inner(s.j, x, y); })
      .def("gamma_vec", [](const Structure<S>& s, const Vec& v, Polarity p) { return gamma_vec(s.j, v, p); })
      .def("gamma_ext", [](const Structure<S>& s, const MV& xi, Polarity p) { return gamma_ext(s, xi, p); })
      .def("gamma", &gamma_form<S>)
      .def("omega", &omega_form<S>);

  py::class_<Ctx, std::shared_ptr<Ctx>>(m, "Context")
      .def(py::init([](const Structure<S>& s) { return std::make_shared<Ctx>(s); }), py::arg("structure"))
      .def_property_readonly("structure", &Ctx::structure)
      .def_property_readonly("gamma", &Ctx::gamma)
      .def_property_readonly("omega", &Ctx::omega)
      .def("expectation", &expectation<S>, py::arg("zeta"))
      .def("expectation_normal", &expectation_normal<S>, py::arg("zeta"))
      .def("nu", &nu<S>, py::arg("zeta"))
      .def("nu_normal", &nu_normal<S>, py::arg("zeta"))
      .def("nu_formula_deg2", &nu_formula_deg2<S>)
      .def("nu_formula_deg3", &nu_formula_deg3<S>)
      .def("eval", [](const Ctx& ctx, const std::string& text) { return cli::evaluate(ctx, text).to_string(); });

  m.def("wedge", &wedge<S>);
  m.def("cl_mul", &cl_mul<S>);
  m.def("det_inner", &det_inner<S>);
  m.def("ext_exp", &ext_exp<S>);
  m.def("trace", &trace<S>);
  m.def("star", &star<S>);
  m.def("grade_automorphism", &grade_automorphism<S>);
  m.def("tracial_inner", &tracial_inner<S>);
  m.def("from_vector", &from_vector<S>);
  m.def("to_multivector", &to_multivector<S>);

  m.def(
      "eval",
      [](const std::string& text, std::size_t M, const std::string& backend, const std::string& structure,
         std::uint64_t seed) {
        cli::Config cfg;
        cfg.half_dim = M;
        cfg.seed = seed;
        cfg.structure = structure == "random" ? cli::StructureKind::random : cli::StructureKind::standard;
        if (backend == "float") {
          return cli::evaluate(OrderingContext<FloatScalar>(cli::build_structure<FloatScalar>(cfg)), text).to_string();
        }
        return cli::evaluate(Ctx(cli::build_structure<S>(cfg)), text).to_string();
      },
      py::arg("expr"), py::arg("M") = 2, py::arg("backend") = "exact", py::arg("structure") = "standard",
      py::arg("seed") = 0);

  m.def(
      "verify_json",
      [](std::size_t M, std::size_t trials, std::uint64_t seed, const std::string& backend,
         const std::string& structure, unsigned jobs) {
        cli::Config cfg;
        cfg.half_dim = M;
        cfg.seed = seed;
        cfg.structure = structure == "random" ? cli::StructureKind::random : cli::StructureKind::standard;
        VerifyOptions opts{trials, seed, kDefaultTolerance, jobs};
        py::gil_scoped_release release;
        if (backend == "float")
          return verify_suite(OrderingContext<FloatScalar>(cli::build_structure<FloatScalar>(cfg)), opts).to_json();
        return verify_suite(Ctx(cli::build_structure<S>(cfg)), opts).to_json();
      },
      py::arg("M") = 2, py::arg("trials") = 50, py::arg("seed") = 1, py::arg("backend") = "exact",
      py::arg("structure") = "standard", py::arg("jobs") = 1);
}
