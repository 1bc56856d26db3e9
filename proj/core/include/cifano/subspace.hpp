#pragma once

#include <string>
#include <vector>

#include "cifano/matrix.hpp"
#include "cifano/poly.hpp"

namespace cifano {

/// A k-dimensional linear subspace of projective n-space, stored as an
/// (n+1) x (k+1) parameterization whose columns span the cone over the
/// subspace. The matrix is kept in reduced column echelon form, so two
/// subspaces are equal exactly when their column spans coincide.
class LinearSubspace {
 public:
  /// Canonicalizes; throws if the columns are not independent.
  explicit LinearSubspace(const ExactMatrix& param);

  /// Span of the given points (each of length n+1).
  static LinearSubspace span_of(Field field, const std::vector<std::vector<FieldScalar>>& points);

  int ambient_dim() const { return static_cast<int>(param_.rows()) - 1; }
  int sub_dim() const { return static_cast<int>(param_.cols()) - 1; }
  const ExactMatrix& param() const { return param_; }

  /// param * (s, t, ...): the point of the cone at the given parameters.
  std::vector<FieldScalar> point_at(const std::vector<FieldScalar>& params) const;

  bool contains_point(const std::vector<FieldScalar>& pt) const;

  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
    return a.param_ == b.param_;
  }
  friend bool operator!=(const LinearSubspace& a, const LinearSubspace& b) { return !(a == b); }

  /// Deterministic total order (for sorted, reproducible enumerations).
  static bool canonical_less(const LinearSubspace& a, const LinearSubspace& b);

  std::string str() const;

 private:
  ExactMatrix param_;
};

/// f with the subspace's parameterization substituted in: a homogeneous
/// polynomial in sub_dim()+1 variables, identically zero exactly when the
/// subspace lies in {f = 0}.
MultiPoly restrict_to_subspace(const MultiPoly& f, const LinearSubspace& subspace);

/// Extends the subspace parameterization to a basis of the ambient space by
/// greedily appending coordinate vectors; returns an invertible
/// (n+1) x (n+1) matrix whose first k+1 columns span the subspace cone.
ExactMatrix complete_to_basis(const LinearSubspace& subspace);

}  // namespace cifano
