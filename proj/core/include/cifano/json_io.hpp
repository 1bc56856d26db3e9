#pragma once

#include <string>
#include <vector>

#include "cifano/field.hpp"
#include "cifano/point_schemes.hpp"
#include "cifano/subspace.hpp"

namespace cifano {

/// {"ambient_dim": n, "points": [["1","0","2/3"], ...]} with scalar strings.
std::string point_set_to_json(const PointSet& z, int indent = 2);
PointSet point_set_from_json(const Field& field, const std::string& text);

/// {"span": [["1","1","0","0","0"], ["0","0","1","1","0"]]}.
std::string subspace_to_json(const LinearSubspace& s, int indent = 2);
LinearSubspace subspace_from_json(const Field& field, const std::string& text);

std::vector<std::string> scalar_strings(const std::vector<FieldScalar>& v);

}  // namespace cifano
