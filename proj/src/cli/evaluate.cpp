#include "fermicalc/cli/evaluate.hpp"

namespace fermicalc::cli {

namespace {

template <Field F>
class Evaluator {
 public:
  explicit Evaluator(const OrderingContext<F>& ctx) : ctx_(ctx), n_(ctx.dim()) {}

  Value<F> eval(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::literal: return scalar(F::embed(e.value));
      case Expr::Kind::generator: {
        const Vector<F> v = e.family == 'e' ? Vector<F>::unit(n_, e.index)
                                            : ctx_.structure().basis[e.index - 1];
        return ext_value(Sort::vec, to_multivector(v));
      }
      case Expr::Kind::negate: {
        Value<F> v = eval(e.args[0]);
        v.scalar = -v.scalar;
        v.ext = -v.ext;
        v.cl = -v.cl;
        return v;
      }
      case Expr::Kind::add:
      case Expr::Kind::sub: return sum(e);
      case Expr::Kind::scale: {
        const Value<F> a = eval(e.args[0]), b = eval(e.args[1]);
        const Value<F>& s = a.sort == Sort::scalar ? a : b;
        Value<F> other = a.sort == Sort::scalar ? b : a;
        other.scalar = s.scalar * other.scalar;
        other.ext = s.scalar * other.ext;
        other.cl = s.scalar * other.cl;
        return other;
      }
      case Expr::Kind::wedge:
        return ext_value(Sort::ext, wedge(as_ext(eval(e.args[0])), as_ext(eval(e.args[1]))));
      case Expr::Kind::clifford:
        return cl_value(cl_mul(as_cl(eval(e.args[0])), as_cl(eval(e.args[1]))));
      case Expr::Kind::call: return call(e);
    }
    throw EvalError("unknown expression node");
  }

 private:
  Value<F> scalar(const F& x) const {
    Value<F> v;
    v.sort = Sort::scalar;
    v.scalar = x;
    v.ext = Multivector<F>(n_);
    v.cl = CliffordElement<F>(n_);
    return v;
  }
  Value<F> ext_value(Sort sort, Multivector<F> m) const {
    Value<F> v = scalar(F());
    v.sort = sort;
    v.ext = std::move(m);
    return v;
  }
  Value<F> cl_value(CliffordElement<F> c) const {
    Value<F> v = scalar(F());
    v.sort = Sort::cl;
    v.cl = std::move(c);
    return v;
  }

  Multivector<F> as_ext(const Value<F>& v) const {
    switch (v.sort) {
      case Sort::scalar: return Multivector<F>::scalar(n_, v.scalar);
      case Sort::vec:
      case Sort::ext: return v.ext;
      case Sort::cl: break;
    }
    throw EvalError("expected an exterior value, got a Clifford value");
  }

  // Elements of grade <= 1 have the same coefficients in both algebras.
  CliffordElement<F> as_cl(const Value<F>& v) const {
    switch (v.sort) {
      case Sort::scalar: return CliffordElement<F>::scalar(n_, v.scalar);
      case Sort::vec: {
        CliffordElement<F> out(n_);
        for (const auto& [mask, c] : v.ext.terms()) out.add_term(mask, c);
        return out;
      }
      case Sort::cl: return v.cl;
      case Sort::ext: break;
    }
    throw EvalError("expected a Clifford value, got an exterior value");
  }

  Vector<F> as_vector(const Value<F>& v) const {
    if (v.sort != Sort::vec || v.ext.coeff(0) != F())
      throw EvalError("expected a vector");
    return vector_part(v.ext);
  }

  Value<F> sum(const Expr& e) const {
    const Value<F> a = eval(e.args[0]), b = eval(e.args[1]);
    const bool add = e.kind == Expr::Kind::add;
    switch (e.sort) {
      case Sort::scalar: return scalar(add ? a.scalar + b.scalar : a.scalar - b.scalar);
      case Sort::vec:
      case Sort::ext: return ext_value(e.sort, add ? as_ext(a) + as_ext(b) : as_ext(a) - as_ext(b));
      case Sort::cl: return cl_value(add ? as_cl(a) + as_cl(b) : as_cl(a) - as_cl(b));
    }
    throw EvalError("bad sum");
  }

  Value<F> call(const Expr& e) const {
    const std::string& f = e.callee;
    const Value<F> a = eval(e.args[0]);
    const auto& s = ctx_.structure();
    if (f == "E") return scalar(expectation(ctx_, as_ext(a)));
    if (f == "EN") return scalar(expectation_normal(ctx_, as_ext(a)));
    if (f == "tau") return scalar(trace(as_cl(a)));
    if (f == "nu") return cl_value(nu(ctx_, as_ext(a)));
    if (f == "nuN") return cl_value(nu_normal(ctx_, as_ext(a)));
    if (f == "star") return cl_value(star(as_cl(a)));
    if (f == "G") return cl_value(grade_automorphism(as_cl(a)));
    if (f == "gp" || f == "gm") {
      const Polarity pol = f == "gp" ? Polarity::plus : Polarity::minus;
      return ext_value(e.sort, gamma_ext(s, to_vj_multivector(s, as_ext(a)), pol, ctx_.tol()));
    }
    const Value<F> b = eval(e.args[1]);
    if (f == "ip") {
      if (a.sort == Sort::cl || b.sort == Sort::cl) return scalar(tracial_inner(as_cl(a), as_cl(b)));
      return scalar(det_inner(as_ext(a), as_ext(b)));
    }
    if (f == "jip") {
      const Vector<F> x = as_vector(a), y = as_vector(b);
      if (!x.is_real() || !y.is_real()) throw EvalError("jip expects real vectors");
      return scalar(j_inner(s.j, x, y));
    }
    if (f == "grade") {
      const ExactScalar k = exact_integer(b.scalar);
      const long grade = k.re().get_num().get_si();
      if (grade < 0 || static_cast<std::size_t>(grade) > n_)
        throw EvalError("grade " + std::to_string(grade) + " outside 0.." + std::to_string(n_));
      return ext_value(e.sort, grade_project(as_ext(a), static_cast<int>(grade)));
    }
    throw EvalError("unknown function '" + f + "'");
  }

  static ExactScalar exact_integer(const F& x) {
    const auto z = x.to_complex();
    const double rounded = std::round(z.real());
    if (z.imag() != 0.0 || std::abs(z.real() - rounded) > 1e-12)
      throw EvalError("grade must be a nonnegative integer, got " + x.to_string());
    return ExactScalar(static_cast<long>(rounded));
  }

  const OrderingContext<F>& ctx_;
  std::size_t n_;
};

}  // namespace

template <Field F>
Value<F> evaluate(const OrderingContext<F>& ctx, const Expr& e) {
  try {
    return Evaluator<F>(ctx).eval(e);
  } catch (const EvalError&) {
    throw;
  } catch (const std::exception& ex) {
    throw EvalError(ex.what());
  }
}

template Value<ExactScalar> evaluate(const OrderingContext<ExactScalar>&, const Expr&);
template Value<FloatScalar> evaluate(const OrderingContext<FloatScalar>&, const Expr&);

}  // namespace fermicalc::cli
