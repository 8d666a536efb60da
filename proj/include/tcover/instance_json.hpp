#pragma once

#include <string>

#include <json.hpp>

#include "tcover/instance.hpp"

namespace tcover {

/// {"edges": [[...], ...], "k": int, "n": int, "r": "num/den", "schema": "v1"}
/// Edge index lists are written sorted; keys in lexicographic order.
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

/// Parses text; malformed JSON or schema violations raise ValidationError
/// carrying the line and column where known.
Instance parse_instance(const std::string& text);
std::string dump_instance(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

}  // namespace tcover
