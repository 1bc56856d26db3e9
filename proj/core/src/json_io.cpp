#include "cifano/json_io.hpp"

#include <json.hpp>

namespace cifano {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json coords_to_json(const std::vector<FieldScalar>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : v) arr.push_back(c.str());
  return arr;
}

std::vector<FieldScalar> coords_from_json(const Field& field, const ordered_json& arr) {
  if (!arr.is_array() || arr.empty()) {
    throw std::invalid_argument("coordinate vector must be a nonempty array");
  }
  std::vector<FieldScalar> v;
  for (const auto& item : arr) {
    if (item.is_string()) {
      v.push_back(field.parse(item.get<std::string>()));
    } else if (item.is_number_integer()) {
      v.push_back(field.integer(item.get<long long>()));
    } else {
      throw std::invalid_argument("coordinates must be strings or integers");
    }
  }
  return v;
}

}  // namespace

std::string point_set_to_json(const PointSet& z, int indent) {
  ordered_json doc;
  doc["ambient_dim"] = z.ambient_dim;
  ordered_json pts = ordered_json::array();
  for (const auto& p : z.points) pts.push_back(coords_to_json(p));
  doc["points"] = pts;
  if (!z.provenance.empty()) doc["provenance"] = z.provenance;
  return doc.dump(indent);
}

PointSet point_set_from_json(const Field& field, const std::string& text) {
  ordered_json doc = ordered_json::parse(text);
  if (!doc.contains("points")) throw std::invalid_argument("point set file: missing 'points'");
  PointSet z;
  for (const auto& item : doc["points"]) {
    z.points.push_back(normalize_projective(coords_from_json(field, item)));
  }
  if (z.points.empty()) throw std::invalid_argument("point set file: no points");
  std::size_t width = z.points.front().size();
  for (const auto& p : z.points) {
    if (p.size() != width) throw std::invalid_argument("point set file: ragged coordinates");
  }
  if (doc.contains("ambient_dim")) {
    z.ambient_dim = doc["ambient_dim"].get<int>();
    if (z.ambient_dim + 1 != static_cast<int>(width)) {
      throw std::invalid_argument("point set file: ambient_dim does not match coordinates");
    }
  } else {
    z.ambient_dim = static_cast<int>(width) - 1;
  }
  for (std::size_t i = 0; i < z.points.size(); ++i) {
    for (std::size_t j = i + 1; j < z.points.size(); ++j) {
      if (z.points[i] == z.points[j]) {
        throw std::invalid_argument("point set file: points must be distinct");
      }
    }
  }
  z.provenance = doc.value("provenance", std::string("explicit point list"));
  return z;
}

std::string subspace_to_json(const LinearSubspace& s, int indent) {
  ordered_json doc;
  ordered_json span = ordered_json::array();
  for (std::size_t j = 0; j < s.param().cols(); ++j) {
    std::vector<FieldScalar> col;
    for (std::size_t i = 0; i < s.param().rows(); ++i) col.push_back(s.param().at(i, j));
    span.push_back(coords_to_json(col));
  }
  doc["span"] = span;
  return doc.dump(indent);
}

LinearSubspace subspace_from_json(const Field& field, const std::string& text) {
  ordered_json doc = ordered_json::parse(text);
  if (!doc.contains("span")) throw std::invalid_argument("subspace file: missing 'span'");
  std::vector<std::vector<FieldScalar>> pts;
  for (const auto& item : doc["span"]) pts.push_back(coords_from_json(field, item));
  return LinearSubspace::span_of(field, pts);
}

std::vector<std::string> scalar_strings(const std::vector<FieldScalar>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

}  // namespace cifano
