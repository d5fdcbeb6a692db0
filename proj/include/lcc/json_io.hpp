#pragma once

#include <string>

#include <json.hpp>

#include "lcc/analysis.hpp"
#include "lcc/core.hpp"
#include "lcc/families.hpp"

namespace lcc {

using json = nlohmann::json;

// CodeSpec: {"n": int, "q": int, "m": int, "a": [int, ...], "b": int}.
// Integers outside the signed 64-bit range are written as decimal strings;
// readers accept either form.
json to_json(const CodeSpec& spec);
CodeSpec code_spec_from_json(const json& doc);

// EngineReport: {"coeffs": ["<decimal>", ...], "engine": "exact|dft|brute",
//                "residual": float, "elapsed_ms": float}.
json to_json(const EngineReport& report);
WeightEnumerator enumerator_from_json(const json& doc);

// Family request: {"family": "<name>", "params": {"n": ..., ...}}.
FamilyDescriptor family_request_from_json(const json& doc);
bool is_family_request(const json& doc);

json to_json(const SweepResult& sweep);
/// Header "b,size,A_0,...,A_n", one row per residue in ascending order.
std::string to_csv(const SweepResult& sweep);

json to_json(const CrossCheckReport& check);

}  // namespace lcc
