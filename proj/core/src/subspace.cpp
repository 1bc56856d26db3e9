#include "cifano/subspace.hpp"

#include <sstream>
#include <stdexcept>

namespace cifano {

LinearSubspace::LinearSubspace(const ExactMatrix& param) : param_(param.column_echelon()) {
  if (param_.cols() != param.cols()) {
    throw std::invalid_argument("LinearSubspace: parameterization does not have full column rank");
  }
  if (param_.cols() == 0 || param_.cols() > param_.rows()) {
    throw std::invalid_argument("LinearSubspace: bad subspace dimensions");
  }
}

LinearSubspace LinearSubspace::span_of(Field field,
                                       const std::vector<std::vector<FieldScalar>>& points) {
  if (points.empty()) throw std::invalid_argument("LinearSubspace::span_of: no points");
  std::size_t n1 = points.front().size();
  ExactMatrix m(field, n1, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (points[j].size() != n1) throw std::invalid_argument("LinearSubspace::span_of: ragged points");
    for (std::size_t i = 0; i < n1; ++i) m.at(i, j) = points[j][i];
  }
  // Drop dependent points rather than reject: span_of is a span.
  return LinearSubspace(m.column_echelon());
}

std::vector<FieldScalar> LinearSubspace::point_at(const std::vector<FieldScalar>& params) const {
  return param_.apply(params);
}

bool LinearSubspace::contains_point(const std::vector<FieldScalar>& pt) const {
  if (pt.size() != param_.rows()) throw std::invalid_argument("LinearSubspace: point dimension mismatch");
  ExactMatrix aug(param_.field(), param_.rows(), param_.cols() + 1);
  for (std::size_t i = 0; i < param_.rows(); ++i) {
    for (std::size_t j = 0; j < param_.cols(); ++j) aug.at(i, j) = param_.at(i, j);
    aug.at(i, param_.cols()) = pt[i];
  }
  return aug.rank() == param_.cols();
}

bool LinearSubspace::canonical_less(const LinearSubspace& a, const LinearSubspace& b) {
  if (a.param_.rows() != b.param_.rows()) return a.param_.rows() < b.param_.rows();
  if (a.param_.cols() != b.param_.cols()) return a.param_.cols() < b.param_.cols();
  for (std::size_t i = 0; i < a.param_.rows(); ++i) {
    for (std::size_t j = 0; j < a.param_.cols(); ++j) {
      const FieldScalar& x = a.param_.at(i, j);
      const FieldScalar& y = b.param_.at(i, j);
      if (x != y) return FieldScalar::canonical_less(x, y);
    }
  }
  return false;
}

std::string LinearSubspace::str() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t j = 0; j < param_.cols(); ++j) {
    if (j) os << ", ";
    os << "(";
    for (std::size_t i = 0; i < param_.rows(); ++i) {
      if (i) os << ":";
      os << param_.at(i, j).str();
    }
    os << ")";
  }
  os << "}";
  return os.str();
}

MultiPoly restrict_to_subspace(const MultiPoly& f, const LinearSubspace& subspace) {
  if (f.num_vars() != subspace.ambient_dim() + 1) {
    throw std::invalid_argument("restrict_to_subspace: ambient dimension mismatch");
  }
  return f.compose_linear(subspace.param());
}

ExactMatrix complete_to_basis(const LinearSubspace& subspace) {
  const ExactMatrix& p = subspace.param();
  std::size_t n1 = p.rows();
  std::vector<std::vector<FieldScalar>> cols;
  for (std::size_t j = 0; j < p.cols(); ++j) {
    std::vector<FieldScalar> c;
    c.reserve(n1);
    for (std::size_t i = 0; i < n1; ++i) c.push_back(p.at(i, j));
    cols.push_back(std::move(c));
  }
  Field field = p.field();
  for (std::size_t k = 0; k < n1 && cols.size() < n1; ++k) {
    std::vector<FieldScalar> e(n1, field.zero());
    e[k] = field.one();
    ExactMatrix trial(field, n1, cols.size() + 1);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (std::size_t i = 0; i < n1; ++i) trial.at(i, j) = cols[j][i];
    }
    for (std::size_t i = 0; i < n1; ++i) trial.at(i, cols.size()) = e[i];
    if (trial.rank() == cols.size() + 1) cols.push_back(std::move(e));
  }
  ExactMatrix basis(field, n1, n1);
  for (std::size_t j = 0; j < n1; ++j) {
    for (std::size_t i = 0; i < n1; ++i) basis.at(i, j) = cols[j][i];
  }
  return basis;
}

}  // namespace cifano
