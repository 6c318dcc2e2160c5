// Command-line front end for seminormed integrals on finite capacity
// spaces: evaluation, validation, translation-invariance checking, and
// counterexample synthesis.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "semint/invariance.hpp"
#include "semint/json_io.hpp"
#include "semint/tolerance.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;   // witness found / violations / oracle mismatch
constexpr int kExitParse = 2;     // malformed input, bad descriptor, bad options
constexpr int kExitInvalid = 3;   // instance fails semantic validation

struct RunConfig {
  std::string instance_path;
  std::string capacity_path;
  std::string semicopula_arg;
  std::string semicopula_file;
  std::string output_path;
  int resolution = 64;
  double step = 1e-3;
  long samples = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool sugeno = false;
  bool shilkret = false;
};

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw semint::ParseError("cannot open '" + path + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw semint::ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

// Accepts a family name ("min", "product", "lukasiewicz", "drastic") or an
// inline JSON descriptor; --semicopula-file supplies the descriptor from disk.
semint::SemicopulaSpec resolve_semicopula(const RunConfig& cfg) {
  if (cfg.sugeno) return semint::SemicopulaSpec::minimum();
  if (cfg.shilkret) return semint::SemicopulaSpec::product();
  if (!cfg.semicopula_file.empty()) {
    return semint::semicopula_from_json(load_json_file(cfg.semicopula_file));
  }
  if (cfg.semicopula_arg.empty()) {
    throw semint::ParseError("no semicopula given; use --semicopula or --semicopula-file");
  }
  const auto first = cfg.semicopula_arg.find_first_not_of(" \t");
  if (first != std::string::npos && cfg.semicopula_arg[first] == '{') {
    try {
      return semint::semicopula_from_json(json::parse(cfg.semicopula_arg));
    } catch (const json::exception& e) {
      throw semint::ParseError(std::string("invalid semicopula descriptor: ") + e.what());
    }
  }
  return semint::semicopula_from_json(json{{"kind", cfg.semicopula_arg}});
}

void emit(const json& doc, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(output_path);
  if (!out) {
    throw semint::ParseError("cannot write '" + output_path + "'");
  }
  out << doc.dump(2) << "\n";
}

// Loads and semantically validates an instance. Schema problems throw
// ParseError; semantic failures print the offending report and exit 3.
semint::Instance load_checked_instance(const RunConfig& cfg) {
  const json doc = load_json_file(cfg.instance_path);
  std::optional<semint::Instance> inst;
  try {
    inst.emplace(semint::instance_from_json(doc));
  } catch (const std::domain_error& e) {
    std::cerr << "instance validation failed: " << e.what() << "\n";
    std::exit(kExitInvalid);
  }
  const auto report = semint::validate_capacity(inst->capacity);
  if (!report.passed) {
    std::cerr << "instance validation failed:\n"
              << semint::report_to_json(report).dump(2) << "\n";
    std::exit(kExitInvalid);
  }
  return std::move(*inst);
}

int cmd_integrate(const RunConfig& cfg) {
  const semint::SemicopulaSpec spec = resolve_semicopula(cfg);
  const semint::Instance inst = load_checked_instance(cfg);
  const auto result = semint::seminormed_integral(spec, inst);
  emit(semint::integral_result_to_json(result), cfg.output_path);
  return kExitOk;
}

int cmd_check(const RunConfig& cfg) {
  const semint::SemicopulaSpec spec = resolve_semicopula(cfg);
  if (cfg.samples > 0 && !cfg.seed_set) {
    throw semint::ParseError("--seed is required when --samples > 0");
  }
  const semint::SamplingPlan plan{cfg.resolution, cfg.samples, cfg.seed};
  const auto verdict = semint::check_invariance(spec, plan);
  emit(semint::verdict_to_json(verdict, spec), cfg.output_path);
  return verdict.invariant ? kExitOk : kExitFinding;
}

int cmd_synthesize(const RunConfig& cfg) {
  const semint::SemicopulaSpec spec = resolve_semicopula(cfg);
  const auto witness = semint::synthesize_counterexample(spec, cfg.resolution);
  if (!witness) {
    emit(json{{"witness", nullptr}}, cfg.output_path);
    return kExitOk;
  }
  emit(semint::witness_to_json(*witness, spec), cfg.output_path);
  return kExitFinding;
}

int cmd_validate(const RunConfig& cfg) {
  json out = json::object();
  bool all_passed = true;
  if (!cfg.capacity_path.empty()) {
    const auto capacity = semint::capacity_from_json(load_json_file(cfg.capacity_path));
    const auto report = semint::validate_capacity(capacity);
    out["capacity"] = semint::report_to_json(report);
    all_passed = all_passed && report.passed;
  }
  if (!cfg.semicopula_arg.empty() || !cfg.semicopula_file.empty()) {
    const auto spec = resolve_semicopula(cfg);
    const auto report = semint::validate_semicopula(spec, cfg.resolution);
    out["semicopula"] = semint::report_to_json(report);
    all_passed = all_passed && report.passed;
  }
  if (out.empty()) {
    throw semint::ParseError("nothing to validate; give --capacity and/or --semicopula");
  }
  emit(out, cfg.output_path);
  return all_passed ? kExitOk : kExitFinding;
}

int cmd_oracle_compare(const RunConfig& cfg) {
  const semint::SemicopulaSpec spec = resolve_semicopula(cfg);
  const semint::Instance inst = load_checked_instance(cfg);
  const double exact = semint::seminormed_integral(spec, inst).value;
  const double oracle = semint::grid_oracle(spec, inst, cfg.step);
  const double difference = exact - oracle;
  emit(json{{"exact", exact}, {"oracle", oracle}, {"difference", difference}},
       cfg.output_path);
  return std::abs(difference) <= semint::kEqTolerance ? kExitOk : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "seminormed integrals I(mu,f) = sup_t S(t, mu({f >= t})) on finite "
      "capacity spaces, with translation-invariance checking"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_semicopula_flags = [&cfg](CLI::App* sub) {
    sub->add_option("--semicopula", cfg.semicopula_arg,
                    "family name or inline JSON descriptor");
    sub->add_option("--semicopula-file", cfg.semicopula_file,
                    "path to a JSON descriptor");
  };

  auto* integrate = app.add_subcommand("integrate", "evaluate I(mu,f) on an instance");
  integrate->add_option("--instance", cfg.instance_path, "instance JSON file")
      ->required();
  add_semicopula_flags(integrate);
  auto* sugeno_flag =
      integrate->add_flag("--sugeno", cfg.sugeno, "shortcut for --semicopula min");
  auto* shilkret_flag = integrate->add_flag("--shilkret", cfg.shilkret,
                                            "shortcut for --semicopula product");
  sugeno_flag->excludes(shilkret_flag);
  sugeno_flag->excludes(integrate->get_option("--semicopula"));
  shilkret_flag->excludes(integrate->get_option("--semicopula"));
  integrate->add_option("--output", cfg.output_path, "write the result here");

  auto* check = app.add_subcommand("check", "decide translation invariance");
  add_semicopula_flags(check);
  check->add_option("--resolution", cfg.resolution, "synthesis lattice steps")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  check->add_option("--samples", cfg.samples, "random confidence-sweep instances")
      ->check(CLI::Range(0L, 100000000L))
      ->capture_default_str();
  check->add_option("--seed", cfg.seed, "seed for the confidence sweep")
      ->each([&cfg](const std::string&) { cfg.seed_set = true; });
  check->add_option("--output", cfg.output_path, "write the verdict here");

  auto* synthesize =
      app.add_subcommand("synthesize", "construct a counterexample certificate");
  add_semicopula_flags(synthesize);
  synthesize->add_option("--resolution", cfg.resolution, "synthesis lattice steps")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  synthesize->add_option("--output", cfg.output_path, "write the certificate here");

  auto* validate =
      app.add_subcommand("validate", "check capacity or semicopula axioms");
  validate->add_option("--capacity", cfg.capacity_path, "capacity JSON file");
  add_semicopula_flags(validate);
  validate->add_option("--resolution", cfg.resolution, "validation lattice steps")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  validate->add_option("--output", cfg.output_path, "write the report here");

  auto* oracle =
      app.add_subcommand("oracle-compare", "cross-check the exact evaluator");
  oracle->add_option("--instance", cfg.instance_path, "instance JSON file")
      ->required();
  add_semicopula_flags(oracle);
  oracle->add_option("--step", cfg.step, "oracle grid step, in [1e-6, 0.01]")
      ->check(CLI::Range(1e-6, 0.01))
      ->capture_default_str();
  oracle->add_option("--output", cfg.output_path, "write the comparison here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (integrate->parsed()) return cmd_integrate(cfg);
    if (check->parsed()) return cmd_check(cfg);
    if (synthesize->parsed()) return cmd_synthesize(cfg);
    if (validate->parsed()) return cmd_validate(cfg);
    if (oracle->parsed()) return cmd_oracle_compare(cfg);
  } catch (const semint::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
