#include "gaussdeg/io.hpp"

#include "gaussdeg/errors.hpp"

#include <string>

namespace gaussdeg {

namespace {

using json = nlohmann::ordered_json;

const json& require_field(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) throw ParameterError(std::string("missing field '") + key + "'");
  return *it;
}

int require_int(const json& object, const char* key) {
  const json& value = require_field(object, key);
  if (!value.is_number_integer()) {
    throw ParameterError(std::string("field '") + key + "' must be an integer");
  }
  return value.get<int>();
}

}  // namespace

SegreIntegralTable table_from_json(const json& document) {
  if (!document.is_object()) throw ParameterError("integral table must be a JSON object");
  const int n = require_int(document, "n");
  const int ambient_dim = require_int(document, "N");
  const json& entries = require_field(document, "entries");
  if (!entries.is_array()) throw ParameterError("field 'entries' must be an array");

  std::map<Partition, BigInt> values;
  for (const json& entry : entries) {
    if (!entry.is_object()) throw ParameterError("each entry must be an object");
    const json& parts = require_field(entry, "partition");
    if (!parts.is_array()) throw ParameterError("'partition' must be an array of integers");
    std::vector<int> raw;
    for (const json& p : parts) {
      if (!p.is_number_integer()) throw ParameterError("'partition' must be an array of integers");
      raw.push_back(p.get<int>());
    }
    Partition lam(std::move(raw));
    const json& integral = require_field(entry, "integral");
    if (!integral.is_string()) throw ParameterError("'integral' must be a decimal string");
    if (!values.emplace(lam, parse_decimal(integral.get<std::string>())).second) {
      throw ParameterError("duplicate entry for partition " + lam.to_string());
    }
  }
  return SegreIntegralTable(n, ambient_dim, std::move(values));
}

SegreIntegralTable read_table(std::istream& in) {
  json document;
  try {
    document = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParameterError(std::string("integral table is not valid JSON: ") + e.what());
  }
  return table_from_json(document);
}

json partition_to_json(const Partition& lam) { return json(lam.parts()); }

json table_to_json(const SegreIntegralTable& table) {
  json entries = json::array();
  // Reverse-lexicographic, matching enumerate_partitions.
  for (const Partition& lam : enumerate_partitions(table.dim(), table.dim())) {
    entries.push_back({{"partition", partition_to_json(lam)}, {"integral", to_decimal(table.at(lam))}});
  }
  return {{"n", table.dim()}, {"N", table.ambient_dim()}, {"entries", std::move(entries)}};
}

json report_to_json(const DegreeReport& report) {
  json out;
  out["n"] = report.n;
  out["d"] = report.d ? json(*report.d) : json(nullptr);
  out["N"] = report.ambient_dim;
  out["m"] = report.m;
  out["dim"] = report.dim_xm;
  out["degree"] = to_decimal(report.degree);
  out["method"] = std::string(method_name(report.method));
  out["notes"] = report.notes;
  return out;
}

json bounds_to_json(const BoundsReport& report) {
  return {
      {"product", to_decimal(report.product)},
      {"ratio", to_fraction_string(report.ratio)},
      {"lower", to_fraction_string(report.lower)},
      {"upper", to_fraction_string(report.upper)},
      {"conjecture_upper", to_fraction_string(report.conjecture_upper)},
      {"virtual_degree", to_fraction_string(report.virtual_degree)},
      {"within_bounds", report.within_bounds},
      {"within_conjecture", report.within_conjecture},
  };
}

}  // namespace gaussdeg
