#include "fermicalc/cli/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fermicalc::cli {

namespace {

using nlohmann::json;

ExactScalar entry_value(const json& v) {
  if (v.is_number_integer()) return ExactScalar(v.get<long>());
  if (v.is_string()) return ExactScalar(parse_rational(v.get<std::string>()));
  if (v.is_object()) {
    if (!v.contains("value")) throw ConfigError("basis entry object needs a \"value\"");
    ExactScalar x = entry_value(v.at("value"));
    if (v.value("sqrt2", false)) x *= ExactScalar::sqrt2();
    return x;
  }
  throw ConfigError("matrix entries must be \"p/q\" strings or integers, got " + v.dump());
}

Matrix<ExactScalar> read_matrix(const json& rows) {
  if (!rows.is_array() || rows.empty()) throw ConfigError("J must be a nonempty array of rows");
  const std::size_t n = rows.size();
  Matrix<ExactScalar> out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) throw ConfigError("J must be square");
    for (std::size_t c = 0; c < n; ++c) out(r, c) = entry_value(rows[r][c]);
  }
  return out;
}

std::vector<Vector<ExactScalar>> read_basis(const json& vectors) {
  if (!vectors.is_array()) throw ConfigError("basis must be an array of vectors");
  std::vector<Vector<ExactScalar>> out;
  for (const auto& v : vectors) {
    if (!v.is_array()) throw ConfigError("basis vectors must be arrays");
    std::vector<ExactScalar> comps;
    for (const auto& c : v) comps.push_back(entry_value(c));
    out.emplace_back(std::move(comps));
  }
  return out;
}

void apply_structure(const json& j, Config& cfg) {
  if (j.contains("J")) {
    cfg.j = read_matrix(j.at("J"));
    cfg.structure = StructureKind::explicit_matrix;
    cfg.half_dim = cfg.j->rows() / 2;
  }
  if (j.contains("basis")) cfg.basis = read_basis(j.at("basis"));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Config parse_config(const std::string& json_text, Config cfg) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("malformed config: ") + ex.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  try {
    if (j.contains("M")) {
      const long m = j.at("M").get<long>();
      if (m < 1) throw ConfigError("M must be a positive integer");
      cfg.half_dim = static_cast<std::size_t>(m);
    }
    if (j.contains("structure")) {
      const json& s = j.at("structure");
      if (s.is_string()) {
        const auto name = s.get<std::string>();
        if (name == "standard") {
          cfg.structure = StructureKind::standard;
        } else if (name == "random") {
          cfg.structure = StructureKind::random;
        } else {
          throw ConfigError("structure must be \"standard\", \"random\" or a matrix");
        }
      } else {
        cfg.j = read_matrix(s);
        cfg.structure = StructureKind::explicit_matrix;
        cfg.half_dim = cfg.j->rows() / 2;
      }
    }
    if (j.contains("J")) apply_structure(j, cfg);
    if (j.contains("basis")) cfg.basis = read_basis(j.at("basis"));
    if (j.contains("backend")) {
      const auto b = j.at("backend").get<std::string>();
      if (b == "exact") {
        cfg.backend = Backend::exact;
      } else if (b == "float") {
        cfg.backend = Backend::floating;
      } else {
        throw ConfigError("backend must be \"exact\" or \"float\"");
      }
    }
    if (j.contains("tol")) {
      cfg.tol = j.at("tol").get<double>();
      if (!(cfg.tol >= 0.0)) throw ConfigError("tol must be nonnegative");
    }
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("trials")) cfg.trials = j.at("trials").get<std::size_t>();
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("bad config value: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(ex.what());
  } catch (const DivisionByZero& ex) {
    throw ConfigError(ex.what());
  }
  return cfg;
}

Config load_config_file(const std::string& path, Config base) {
  return parse_config(read_file(path), std::move(base));
}

void load_structure_file(const std::string& path, Config& cfg) {
  json j;
  try {
    j = json::parse(read_file(path));
    if (!j.is_object() || !j.contains("J")) throw ConfigError("structure file needs a \"J\" matrix");
    apply_structure(j, cfg);
  } catch (const json::exception& ex) {
    throw ConfigError("malformed structure file '" + path + "': " + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(ex.what());
  } catch (const DivisionByZero& ex) {
    throw ConfigError(ex.what());
  }
}

template <Field F>
Structure<F> build_structure(const Config& cfg) {
  try {
    switch (cfg.structure) {
      case StructureKind::standard:
        return convert_structure<F>(standard_structure<ExactScalar>(cfg.half_dim), cfg.tol);
      case StructureKind::random:
        return convert_structure<F>(random_structure(cfg.half_dim, cfg.seed), cfg.tol);
      case StructureKind::explicit_matrix: break;
    }
    if (!cfg.j) throw ConfigError("explicit structure without a J matrix");
    const double tol = F::is_exact ? 0.0 : cfg.tol;
    ComplexStructure<F> j(convert_matrix<F>(*cfg.j), tol);
    if (!cfg.basis) {
      if constexpr (F::is_exact) {
        throw ConfigError("the exact backend needs an explicit unitary basis for a custom J");
      } else {
        return {j, unitary_basis_from(j)};
      }
    }
    std::vector<Vector<F>> vs;
    for (const auto& v : *cfg.basis) {
      std::vector<F> comps;
      for (const auto& c : v.comps()) comps.push_back(F::embed(c));
      vs.emplace_back(std::move(comps));
    }
    UnitaryBasis<F> basis(j, std::move(vs), tol);
    return {std::move(j), std::move(basis)};
  } catch (const InvalidStructure& ex) {
    throw ConfigError(std::string("invalid structure: ") + ex.what());
  }
}

template Structure<ExactScalar> build_structure<ExactScalar>(const Config&);
template Structure<FloatScalar> build_structure<FloatScalar>(const Config&);

}  // namespace fermicalc::cli
