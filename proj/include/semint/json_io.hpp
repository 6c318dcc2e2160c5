#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "semint/invariance.hpp"

namespace semint {

// Schema problem in an input document (missing or malformed keys, unknown
// labels, wrong table shape). Distinct from semantic validation failures,
// which are reported through ValidationReport.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Semicopula descriptors: {"kind":"lukasiewicz"} | {"kind":"yager","p":2.0}
// | {"kind":"table","resolution":64,"values":[[...]]} (row = x step).
nlohmann::json semicopula_to_json(const SemicopulaSpec& spec);
SemicopulaSpec semicopula_from_json(const nlohmann::json& doc);

// Instances: {"points":[...], "capacity":{"":0.0, "x1":..., "x1,x2":...},
// "function":{"x1":...}}. Capacity keys are comma-joined sorted point
// labels, "" for ∅; all 2^n keys are required.
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& doc);

// Capacity-only documents (same schema, "function" optional and ignored).
nlohmann::json capacity_to_json(const Capacity& capacity);
Capacity capacity_from_json(const nlohmann::json& doc);

nlohmann::json integral_result_to_json(const IntegralResult& result);
IntegralResult integral_result_from_json(const nlohmann::json& doc);

nlohmann::json report_to_json(const ValidationReport& report);
ValidationReport report_from_json(const nlohmann::json& doc);

// Witness certificates embed the semicopula descriptor so they can be
// re-verified on their own.
nlohmann::json witness_to_json(const InvarianceWitness& witness,
                               const SemicopulaSpec& spec);
struct ParsedWitness {
  InvarianceWitness witness;
  SemicopulaSpec semicopula;
};
ParsedWitness witness_from_json(const nlohmann::json& doc);

nlohmann::json verdict_to_json(const InvarianceVerdict& verdict,
                               const SemicopulaSpec& spec);
InvarianceVerdict verdict_from_json(const nlohmann::json& doc);

}  // namespace semint
