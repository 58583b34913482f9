#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "fermicalc/berezin.hpp"
#include "fermicalc/cli/expr.hpp"

namespace fermicalc::cli {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A tagged result. `ext` holds both vec- and ext-sorted values.
template <Field F>
struct Value {
  Sort sort = Sort::scalar;
  F scalar;
  Multivector<F> ext;
  CliffordElement<F> cl;

  std::string to_string() const {
    switch (sort) {
      case Sort::scalar: return scalar.to_string();
      case Sort::vec:
      case Sort::ext: return ext.to_string();
      case Sort::cl: return cl.to_string();
    }
    return {};
  }
};

template <Field F>
Value<F> evaluate(const OrderingContext<F>& ctx, const Expr& e);

/// parse + evaluate with generators sized to the context.
template <Field F>
Value<F> evaluate(const OrderingContext<F>& ctx, std::string_view text) {
  return evaluate(ctx, parse(text, ParseOptions{ctx.half_dim()}));
}

extern template Value<ExactScalar> evaluate(const OrderingContext<ExactScalar>&, const Expr&);
extern template Value<FloatScalar> evaluate(const OrderingContext<FloatScalar>&, const Expr&);

}  // namespace fermicalc::cli
