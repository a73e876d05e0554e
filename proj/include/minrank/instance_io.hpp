#pragma once

#include <string>

#include <json.hpp>

#include "minrank/bounds.hpp"
#include "minrank/poly_matrix.hpp"

namespace minrank {

// Versioned instance file format ("format": 1). Classical instances carry
// the k scalar matrices, generalized ones the polynomial grid in canonical
// text form; both embed the generator seed for replay.
nlohmann::ordered_json instance_to_json(const MinRankInstance& instance);
MinRankInstance instance_from_json(const nlohmann::json& j);

// Byte-identical for identical instances (two-space indent, trailing newline).
void write_instance(const MinRankInstance& instance, const std::string& path);
MinRankInstance read_instance(const std::string& path);

nlohmann::ordered_json bound_report_to_json(const bounds::BoundReport& rep);

}  // namespace minrank
