#pragma once

// Randomized and exhaustive verification of every identity the kernel is
// built on, from field axioms up to E = tau o nu.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fermicalc/berezin.hpp"
#include "fermicalc/scalar.hpp"

namespace fermicalc {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t trials = 0;
  double max_err = 0.0;
  /// Shrunk failing input, empty on success.
  std::string counterexample;
};

struct VerifyOptions {
  std::size_t trials = 50;
  std::uint64_t seed = 1;
  double tol = kDefaultTolerance;
  unsigned jobs = 1;
};

class Report {
 public:
  std::vector<CheckResult> checks;
  std::string backend;
  std::size_t half_dim = 0;

  bool passed() const;
  std::size_t failures() const;
  const CheckResult* find(const std::string& name) const;

  /// One line per identity: "PASS name (trials=N, max_err=E)", failures
  /// followed by an indented counterexample line.
  std::string to_text() const;
  std::string to_json() const;
};

template <Field F>
Report verify_suite(const OrderingContext<F>& ctx, const VerifyOptions& options);

extern template Report verify_suite<ExactScalar>(const OrderingContext<ExactScalar>&,
                                                 const VerifyOptions&);
extern template Report verify_suite<FloatScalar>(const OrderingContext<FloatScalar>&,
                                                 const VerifyOptions&);

}  // namespace fermicalc
