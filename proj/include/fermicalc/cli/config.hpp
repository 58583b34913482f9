#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fermicalc/exterior.hpp"
#include "fermicalc/matrix.hpp"
#include "fermicalc/structure.hpp"

namespace fermicalc::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Backend { exact, floating };

enum class StructureKind { standard, random, explicit_matrix };

/// Run configuration. JSON form, rationals as strings to stay exact:
///
///   {"M": 2, "structure": "standard", "backend": "exact", "tol": 1e-9,
///    "seed": 7, "trials": 50}
///
/// "structure" may also be "random" (Cayley-random from "seed") or a 2M x 2M
/// matrix of "p/q" strings, optionally with "basis": a list of M vectors
/// whose entries are "p/q" strings or {"value": "p/q", "sqrt2": true}.
struct Config {
  std::size_t half_dim = 2;
  StructureKind structure = StructureKind::standard;
  std::optional<Matrix<ExactScalar>> j;
  std::optional<std::vector<Vector<ExactScalar>>> basis;
  Backend backend = Backend::exact;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 0;
  std::size_t trials = 50;
  unsigned jobs = 1;
};

/// Overlays the keys present in `json_text` onto `base`.
Config parse_config(const std::string& json_text, Config base = {});
Config load_config_file(const std::string& path, Config base = {});

/// Reads a structure file {"J": [[...]], "basis": [[...]]} into `cfg`.
void load_structure_file(const std::string& path, Config& cfg);

/// Validated structure for the configured backend.
template <Field F>
Structure<F> build_structure(const Config& cfg);

extern template Structure<ExactScalar> build_structure<ExactScalar>(const Config&);
extern template Structure<FloatScalar> build_structure<FloatScalar>(const Config&);

}  // namespace fermicalc::cli
