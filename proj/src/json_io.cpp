#include "lcc/json_io.hpp"

#include <sstream>

#include "lcc/errors.hpp"

namespace lcc {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw ValidationError(ValidationError::Kind::malformed_input, what);
}

json integer_to_json(const BigInt& value) {
  if (auto v = to_i64(value)) return *v;
  return to_decimal(value);
}

BigInt integer_from_json(const json& value, const std::string& field) {
  if (value.is_number_unsigned()) return from_u64(value.get<std::uint64_t>());
  if (value.is_number_integer()) return from_i64(value.get<std::int64_t>());
  if (value.is_string()) {
    if (auto parsed = parse_bigint(value.get<std::string>())) return *parsed;
  }
  malformed("field '" + field + "' must be an integer");
}

std::int64_t small_integer_from_json(const json& value, const std::string& field) {
  auto v = to_i64(integer_from_json(value, field));
  if (!v) malformed("field '" + field + "' is out of range");
  return *v;
}

const json& require_field(const json& doc, const char* field) {
  if (!doc.is_object() || !doc.contains(field)) {
    malformed(std::string("missing field '") + field + "'");
  }
  return doc.at(field);
}

json coeffs_to_json(const WeightEnumerator& enumerator) {
  json coeffs = json::array();
  for (const auto& c : enumerator.coeffs()) coeffs.push_back(to_decimal(c));
  return coeffs;
}

}  // namespace

json to_json(const CodeSpec& spec) {
  json a = json::array();
  for (const auto& coeff : spec.a) a.push_back(integer_to_json(coeff));
  return json{{"n", spec.n}, {"q", spec.q}, {"m", integer_to_json(spec.m)},
              {"a", std::move(a)}, {"b", integer_to_json(spec.b)}};
}

CodeSpec code_spec_from_json(const json& doc) {
  CodeSpec spec;
  spec.n = small_integer_from_json(require_field(doc, "n"), "n");
  spec.q = small_integer_from_json(require_field(doc, "q"), "q");
  spec.m = integer_from_json(require_field(doc, "m"), "m");
  const json& a = require_field(doc, "a");
  if (!a.is_array()) malformed("field 'a' must be an array of integers");
  for (const auto& coeff : a) spec.a.push_back(integer_from_json(coeff, "a"));
  spec.b = integer_from_json(require_field(doc, "b"), "b");
  return spec;
}

json to_json(const EngineReport& report) {
  return json{{"coeffs", coeffs_to_json(report.enumerator)},
              {"engine", std::string(to_string(report.engine))},
              {"residual", report.residual},
              {"elapsed_ms", report.elapsed.count()}};
}

WeightEnumerator enumerator_from_json(const json& doc) {
  const json& coeffs = require_field(doc, "coeffs");
  if (!coeffs.is_array()) malformed("field 'coeffs' must be an array");
  std::vector<BigInt> values;
  for (const auto& c : coeffs) {
    if (!c.is_string()) malformed("coefficients must be decimal strings");
    auto parsed = parse_bigint(c.get<std::string>());
    if (!parsed || sgn(*parsed) < 0) malformed("coefficient is not a nonnegative integer");
    values.push_back(*parsed);
  }
  if (values.empty()) malformed("field 'coeffs' is empty");
  return WeightEnumerator(std::move(values));
}

bool is_family_request(const json& doc) { return doc.is_object() && doc.contains("family"); }

FamilyDescriptor family_request_from_json(const json& doc) {
  const json& name = require_field(doc, "family");
  if (!name.is_string()) malformed("field 'family' must be a string");
  auto family = parse_family(name.get<std::string>());
  if (!family) malformed("unknown family '" + name.get<std::string>() + "'");
  FamilyParams params;
  if (doc.contains("params")) {
    const json& p = doc.at("params");
    if (!p.is_object()) malformed("field 'params' must be an object");
    for (const auto& [key, value] : p.items()) params[key] = integer_from_json(value, key);
  }
  return resolve_family(*family, params);
}

json to_json(const SweepResult& sweep) {
  json rows = json::array();
  for (const auto& row : sweep.rows) {
    rows.push_back(json{{"b", row.b},
                        {"size", to_decimal(row.size)},
                        {"coeffs", coeffs_to_json(row.enumerator)}});
  }
  json out{{"spec", to_json(sweep.spec)},
           {"rows", std::move(rows)},
           {"totals", coeffs_to_json(sweep.totals)}};
  out["spec"].erase("b");
  if (!sweep.label.empty()) out["family"] = sweep.label;
  return out;
}

std::string to_csv(const SweepResult& sweep) {
  std::ostringstream out;
  out << "b,size";
  for (std::size_t w = 0; w <= sweep.totals.length(); ++w) out << ",A_" << w;
  out << '\n';
  for (const auto& row : sweep.rows) {
    out << row.b << ',' << to_decimal(row.size);
    for (const auto& c : row.enumerator.coeffs()) out << ',' << to_decimal(c);
    out << '\n';
  }
  return out.str();
}

json to_json(const CrossCheckReport& check) {
  json reports = json::array();
  for (const auto& r : check.reports) reports.push_back(to_json(r));
  json out{{"agree", check.agree}, {"reports", std::move(reports)}};
  if (check.disagreeing) {
    out["disagreeing"] = {std::string(to_string(check.disagreeing->first)),
                          std::string(to_string(check.disagreeing->second))};
  }
  if (check.first_difference) out["first_difference"] = *check.first_difference;
  if (check.dft_residual) out["dft_residual"] = *check.dft_residual;
  return out;
}

}  // namespace lcc
