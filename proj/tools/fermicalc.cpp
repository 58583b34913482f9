// fermicalc: evaluate expressions, run the identity suite, print the M = 1 demo.
//
// Exit status: 0 success, 1 an identity failed, 2 usage / parse / eval error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fermicalc/berezin.hpp"
#include "fermicalc/cli/config.hpp"
#include "fermicalc/cli/evaluate.hpp"
#include "fermicalc/verify.hpp"

namespace fc = fermicalc;
namespace cli = fermicalc::cli;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Args {
  std::string config_file;
  std::string structure = "standard";
  std::string backend;
  std::optional<std::size_t> dim;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  unsigned jobs = 1;
  std::string expr;
  std::string summary;
  bool json = false;
};

cli::Config resolve(const Args& a) {
  cli::Config cfg;
  if (!a.config_file.empty()) cfg = cli::load_config_file(a.config_file, cfg);
  if (a.structure == "standard") {
    if (a.config_file.empty()) cfg.structure = cli::StructureKind::standard;
  } else if (a.structure == "random") {
    cfg.structure = cli::StructureKind::random;
  } else {
    cli::load_structure_file(a.structure, cfg);
  }
  if (a.dim) {
    if (cfg.structure == cli::StructureKind::explicit_matrix && *a.dim != cfg.half_dim)
      throw cli::ConfigError("--dim " + std::to_string(*a.dim) + " disagrees with the " +
                             std::to_string(cfg.half_dim * 2) + "x" +
                             std::to_string(cfg.half_dim * 2) + " structure matrix");
    cfg.half_dim = *a.dim;
  }
  if (cfg.half_dim < 1 || cfg.half_dim > fc::kMaxGenerators / 2)
    throw cli::ConfigError("M must be between 1 and " + std::to_string(fc::kMaxGenerators / 2));
  if (!a.backend.empty()) cfg.backend = a.backend == "float" ? cli::Backend::floating : cli::Backend::exact;
  if (a.tol) cfg.tol = *a.tol;
  if (a.seed) cfg.seed = *a.seed;
  if (a.trials) cfg.trials = *a.trials;
  cfg.jobs = a.jobs;
  return cfg;
}

template <fc::Field F>
int run_eval(const cli::Config& cfg, const std::string& text) {
  const fc::OrderingContext<F> ctx(cli::build_structure<F>(cfg), cfg.tol);
  std::cout << cli::evaluate(ctx, text).to_string() << "\n";
  return 0;
}

template <fc::Field F>
int run_verify(const cli::Config& cfg, const Args& a) {
  const fc::OrderingContext<F> ctx(cli::build_structure<F>(cfg), cfg.tol);
  fc::VerifyOptions opts;
  opts.trials = cfg.trials;
  opts.seed = cfg.seed;
  opts.tol = cfg.tol;
  opts.jobs = cfg.jobs;
  const fc::Report report = fc::verify_suite(ctx, opts);
  if (a.json) {
    std::cout << report.to_json() << "\n";
  } else {
    std::cout << report.to_text();
  }
  if (!a.summary.empty()) {
    std::ofstream out(a.summary);
    if (!out) throw cli::ConfigError("cannot write '" + a.summary + "'");
    out << report.to_json() << "\n";
  }
  return report.passed() ? 0 : kExitFailure;
}

int run_demo() {
  using S = fc::ExactScalar;
  const fc::OrderingContext<S> ctx(fc::standard_structure<S>(1));
  const auto e12 = fc::wedge(fc::Multivector<S>::generator(2, 1), fc::Multivector<S>::generator(2, 2));
  const S expect = fc::expectation(ctx, e12);
  const auto ordered = fc::nu(ctx, e12);
  const S traced = fc::trace(ordered);
  std::cout << "M = 1, standard J\n"
            << "gamma        = " << ctx.gamma().to_string() << "\n"
            << "omega        = " << ctx.omega().to_string() << "\n"
            << "E(e1^e2)     = " << expect.to_string() << "\n"
            << "nu(e1^e2)    = " << ordered.to_string() << "\n"
            << "tau(nu(...)) = " << traced.to_string() << "\n"
            << (expect == traced ? "E = tau o nu holds\n" : "E = tau o nu FAILS\n");
  return expect == traced ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exterior/Clifford calculator with Berezin expectation and ordering maps"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("--config", a.config_file, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--dim", a.dim, "half dimension M (V has dimension 2M)");
  app.add_option("--structure", a.structure, "standard | random | JSON file with J and basis");
  app.add_option("--backend", a.backend, "exact | float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", a.tol, "float comparison tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", a.seed, "seed for random structures and sampling");

  auto* eval = app.add_subcommand("eval", "evaluate an expression and print the value");
  eval->add_option("expr", a.expr, "expression, e.g. \"E(e1 ^ e2)\"")->required();

  auto* verify = app.add_subcommand("verify", "run the identity suite");
  verify->add_option("--trials", a.trials, "random trials per identity");
  verify->add_option("--jobs", a.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--summary", a.summary, "also write the JSON report to this file");
  verify->add_flag("--json", a.json, "print the JSON report instead of text");

  auto* demo = app.add_subcommand("demo", "print the M = 1 worked example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (demo->parsed()) return run_demo();
    const cli::Config cfg = resolve(a);
    const bool exact = cfg.backend == cli::Backend::exact;
    if (eval->parsed())
      return exact ? run_eval<fc::ExactScalar>(cfg, a.expr) : run_eval<fc::FloatScalar>(cfg, a.expr);
    if (verify->parsed())
      return exact ? run_verify<fc::ExactScalar>(cfg, a) : run_verify<fc::FloatScalar>(cfg, a);
  } catch (const cli::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cli::EvalError& e) {
    std::cerr << "evaluation error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
