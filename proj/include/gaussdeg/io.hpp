#pragma once

#include "gaussdeg/degrees.hpp"
#include "gaussdeg/schur.hpp"

#include <json.hpp>

#include <istream>

namespace gaussdeg {

// Big integers travel as decimal strings, rationals as "p/q".

/// Reads {"n": int, "N": int, "entries": [{"partition": [...], "integral":
/// "decimal"}]}. Partitions may carry trailing zeros. Throws ParameterError
/// on any schema violation, including duplicate partitions.
SegreIntegralTable table_from_json(const nlohmann::ordered_json& document);
SegreIntegralTable read_table(std::istream& in);

nlohmann::ordered_json table_to_json(const SegreIntegralTable& table);

nlohmann::ordered_json partition_to_json(const Partition& lam);
nlohmann::ordered_json report_to_json(const DegreeReport& report);
nlohmann::ordered_json bounds_to_json(const BoundsReport& report);

}  // namespace gaussdeg
