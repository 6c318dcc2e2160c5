#include "semint/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "semint/tolerance.hpp"

namespace semint {

namespace {

using nlohmann::json;

const json& require_key(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ParseError(std::string("missing key '") + key + "'");
  }
  return doc.at(key);
}

double require_number(const json& doc, const char* key) {
  const json& v = require_key(doc, key);
  if (!v.is_number()) {
    throw ParseError(std::string("key '") + key + "' must be a number");
  }
  return v.get<double>();
}

std::string subset_key(const FiniteSpace& space, std::uint32_t mask) {
  std::vector<std::string> labels;
  for (int i = 0; i < space.size(); ++i) {
    if (mask & (1u << i)) labels.push_back(space.label(i));
  }
  std::sort(labels.begin(), labels.end());
  std::string key;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) key += ',';
    key += labels[i];
  }
  return key;
}

std::uint32_t mask_from_key(const FiniteSpace& space, const std::string& key) {
  if (key.empty()) return 0;
  std::uint32_t mask = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = key.find(',', pos);
    const std::string label =
        key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const int idx = space.index_of(label);
    if (idx < 0) {
      throw ParseError("unknown point label '" + label + "' in capacity key '" + key + "'");
    }
    const std::uint32_t bit = 1u << idx;
    if (mask & bit) {
      throw ParseError("duplicate label '" + label + "' in capacity key '" + key + "'");
    }
    mask |= bit;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return mask;
}

FiniteSpace space_from_json(const json& doc) {
  const json& pts = require_key(doc, "points");
  if (!pts.is_array() || pts.empty()) {
    throw ParseError("'points' must be a nonempty array of labels");
  }
  std::vector<std::string> labels;
  labels.reserve(pts.size());
  for (const auto& p : pts) {
    if (!p.is_string()) throw ParseError("'points' entries must be strings");
    labels.push_back(p.get<std::string>());
  }
  try {
    return FiniteSpace(std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Capacity capacity_values_from_json(const FiniteSpace& space, const json& doc) {
  const json& cap = require_key(doc, "capacity");
  if (!cap.is_object()) throw ParseError("'capacity' must be an object");
  const std::size_t expected = std::size_t{1} << space.size();
  if (cap.size() != expected) {
    throw ParseError("'capacity' must list all " + std::to_string(expected) +
                     " subsets, got " + std::to_string(cap.size()));
  }
  std::vector<double> values(expected, 0.0);
  std::vector<bool> seen(expected, false);
  for (const auto& [key, value] : cap.items()) {
    const std::uint32_t mask = mask_from_key(space, key);
    if (seen[mask]) {
      throw ParseError("subset listed twice in 'capacity': '" + key + "'");
    }
    if (!value.is_number()) {
      throw ParseError("capacity value for '" + key + "' must be a number");
    }
    seen[mask] = true;
    values[mask] = value.get<double>();
  }
  return Capacity(space, std::move(values));
}

MeasurableFunction function_from_json(const FiniteSpace& space, const json& doc) {
  const json& fn = require_key(doc, "function");
  if (!fn.is_object()) throw ParseError("'function' must be an object");
  if (fn.size() != static_cast<std::size_t>(space.size())) {
    throw ParseError("'function' must assign a value to every point");
  }
  std::vector<double> values(static_cast<std::size_t>(space.size()), 0.0);
  for (const auto& [key, value] : fn.items()) {
    const int idx = space.index_of(key);
    if (idx < 0) throw ParseError("unknown point label '" + key + "' in 'function'");
    if (!value.is_number()) {
      throw ParseError("function value for '" + key + "' must be a number");
    }
    values[static_cast<std::size_t>(idx)] = value.get<double>();
  }
  return MeasurableFunction(space, std::move(values));
}

}  // namespace

nlohmann::json semicopula_to_json(const SemicopulaSpec& spec) {
  switch (spec.kind) {
    case SemicopulaKind::Min:
      return {{"kind", "min"}};
    case SemicopulaKind::Product:
      return {{"kind", "product"}};
    case SemicopulaKind::Lukasiewicz:
      return {{"kind", "lukasiewicz"}};
    case SemicopulaKind::Drastic:
      return {{"kind", "drastic"}};
    case SemicopulaKind::Yager:
      return {{"kind", "yager"}, {"p", spec.yager_p}};
    case SemicopulaKind::Table:
      return {{"kind", "table"},
              {"resolution", spec.table_resolution},
              {"values", spec.table}};
  }
  throw std::logic_error("unhandled semicopula kind");
}

SemicopulaSpec semicopula_from_json(const nlohmann::json& doc) {
  const json& kind = require_key(doc, "kind");
  if (!kind.is_string()) throw ParseError("'kind' must be a string");
  const std::string name = kind.get<std::string>();
  if (name == "min") return SemicopulaSpec::minimum();
  if (name == "product") return SemicopulaSpec::product();
  if (name == "lukasiewicz") return SemicopulaSpec::lukasiewicz();
  if (name == "drastic") return SemicopulaSpec::drastic();
  if (name == "yager") {
    const double p = require_number(doc, "p");
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw ParseError("yager 'p' must be a positive real");
    }
    return SemicopulaSpec::yager(p);
  }
  if (name == "table") {
    const json& res = require_key(doc, "resolution");
    if (!res.is_number_integer() || res.get<long>() < 1) {
      throw ParseError("table 'resolution' must be a positive integer");
    }
    const json& values = require_key(doc, "values");
    if (!values.is_array()) throw ParseError("table 'values' must be an array of rows");
    std::vector<std::vector<double>> grid;
    grid.reserve(values.size());
    for (const auto& row : values) {
      if (!row.is_array()) throw ParseError("table rows must be arrays");
      std::vector<double> r;
      r.reserve(row.size());
      for (const auto& v : row) {
        if (!v.is_number()) throw ParseError("table entries must be numbers");
        r.push_back(v.get<double>());
      }
      grid.push_back(std::move(r));
    }
    std::string label = "table";
    if (doc.contains("label") && doc.at("label").is_string()) {
      label = doc.at("label").get<std::string>();
    }
    try {
      return SemicopulaSpec::from_table(res.get<int>(), std::move(grid), std::move(label));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown semicopula kind '" + name + "'");
}

nlohmann::json instance_to_json(const Instance& inst) {
  json doc = capacity_to_json(inst.capacity);
  json fn = json::object();
  for (int i = 0; i < inst.space().size(); ++i) {
    fn[inst.space().label(i)] = inst.function.values[static_cast<std::size_t>(i)];
  }
  doc["function"] = std::move(fn);
  return doc;
}

Instance instance_from_json(const nlohmann::json& doc) {
  FiniteSpace space = space_from_json(doc);
  Capacity capacity = capacity_values_from_json(space, doc);
  MeasurableFunction function = function_from_json(space, doc);
  return Instance(std::move(capacity), std::move(function));
}

nlohmann::json capacity_to_json(const Capacity& capacity) {
  json cap = json::object();
  const std::uint32_t full = capacity.space.full_mask();
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    cap[subset_key(capacity.space, mask)] = capacity.values[mask];
  }
  return {{"points", capacity.space.points()}, {"capacity", std::move(cap)}};
}

Capacity capacity_from_json(const nlohmann::json& doc) {
  FiniteSpace space = space_from_json(doc);
  return capacity_values_from_json(space, doc);
}

nlohmann::json integral_result_to_json(const IntegralResult& result) {
  return {{"value", result.value},
          {"argmax_t", result.argmax_threshold},
          {"level", result.level_at_argmax}};
}

IntegralResult integral_result_from_json(const nlohmann::json& doc) {
  return {require_number(doc, "value"), require_number(doc, "argmax_t"),
          require_number(doc, "level")};
}

nlohmann::json report_to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"axiom", v.axiom},
                          {"location", v.location},
                          {"observed", v.observed},
                          {"bound", v.bound}});
  }
  return {{"passed", report.passed},
          {"grid_resolution", report.grid_resolution},
          {"violations", std::move(violations)}};
}

ValidationReport report_from_json(const nlohmann::json& doc) {
  ValidationReport report;
  const json& passed = require_key(doc, "passed");
  if (!passed.is_boolean()) throw ParseError("'passed' must be a boolean");
  const json& res = require_key(doc, "grid_resolution");
  if (!res.is_number_integer()) throw ParseError("'grid_resolution' must be an integer");
  report.grid_resolution = res.get<int>();
  const json& violations = require_key(doc, "violations");
  if (!violations.is_array()) throw ParseError("'violations' must be an array");
  for (const auto& v : violations) {
    const json& axiom = require_key(v, "axiom");
    const json& location = require_key(v, "location");
    if (!axiom.is_string() || !location.is_string()) {
      throw ParseError("violation 'axiom' and 'location' must be strings");
    }
    report.add(axiom.get<std::string>(), location.get<std::string>(),
               require_number(v, "observed"), require_number(v, "bound"));
  }
  if (passed.get<bool>() != report.passed) {
    throw ParseError("'passed' inconsistent with the violation list");
  }
  return report;
}

nlohmann::json witness_to_json(const InvarianceWitness& witness,
                               const SemicopulaSpec& spec) {
  return {{"a", witness.a},
          {"b", witness.b},
          {"c", witness.c},
          {"instance", instance_to_json(witness.instance)},
          {"lhs", witness.lhs},
          {"rhs", witness.rhs},
          {"gap", witness.gap},
          {"semicopula", semicopula_to_json(spec)}};
}

ParsedWitness witness_from_json(const nlohmann::json& doc) {
  const double a = require_number(doc, "a");
  const double b = require_number(doc, "b");
  const double c = require_number(doc, "c");
  if (std::abs(c - (1.0 - a)) > kEqTolerance) {
    throw ParseError("certificate violates c = 1 - a");
  }
  Instance inst = instance_from_json(require_key(doc, "instance"));
  InvarianceWitness witness{a,
                            b,
                            c,
                            std::move(inst),
                            require_number(doc, "lhs"),
                            require_number(doc, "rhs"),
                            require_number(doc, "gap")};
  return {std::move(witness), semicopula_from_json(require_key(doc, "semicopula"))};
}

nlohmann::json verdict_to_json(const InvarianceVerdict& verdict,
                               const SemicopulaSpec& spec) {
  json doc = {{"invariant", verdict.invariant},
              {"samples_checked", verdict.samples_checked},
              {"max_residual_seen", verdict.max_residual_seen},
              {"semicopula", semicopula_to_json(spec)},
              {"phase2_role",
               "randomized sweep; supplementary assurance beyond lattice-scale "
               "synthesis"}};
  doc["witness"] =
      verdict.witness ? witness_to_json(*verdict.witness, spec) : json(nullptr);
  return doc;
}

InvarianceVerdict verdict_from_json(const nlohmann::json& doc) {
  InvarianceVerdict verdict;
  const json& invariant = require_key(doc, "invariant");
  if (!invariant.is_boolean()) throw ParseError("'invariant' must be a boolean");
  verdict.invariant = invariant.get<bool>();
  const json& samples = require_key(doc, "samples_checked");
  if (!samples.is_number_integer()) {
    throw ParseError("'samples_checked' must be an integer");
  }
  verdict.samples_checked = samples.get<long>();
  verdict.max_residual_seen = require_number(doc, "max_residual_seen");
  const json& witness = require_key(doc, "witness");
  if (!witness.is_null()) {
    verdict.witness = witness_from_json(witness).witness;
  }
  return verdict;
}

}  // namespace semint
