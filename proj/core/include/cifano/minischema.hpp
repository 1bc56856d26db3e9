#pragma once

#include <string>

namespace cifano {

/// Validates a JSON document against the structural subset of JSON Schema
/// used by the shipped schema files: type, properties, required, items,
/// enum, additionalProperties (boolean), minimum, minItems. Returns true on
/// success; otherwise false with a path-qualified message in *error.
bool validate_json_schema(const std::string& document, const std::string& schema,
                          std::string* error = nullptr);

}  // namespace cifano
