#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cifano/field.hpp"
#include "cifano/matrix.hpp"
#include "cifano/rng.hpp"

namespace cifano {

/// A reduced zero-dimensional scheme: a list of distinct projective points,
/// each normalized so its first nonzero coordinate is 1, sorted canonically.
struct PointSet {
  int ambient_dim = 0;
  std::vector<std::vector<FieldScalar>> points;
  /// Human-readable construction record (degrees, seed, retries).
  std::string provenance;
  /// Degrees of the cutting divisors when built as a grid complete
  /// intersection; empty otherwise.
  std::vector<int> grid_degrees;
  /// Per-point choice of hyperplane index within each divisor (grid only).
  std::vector<std::vector<int>> grid_choice;

  std::size_t size() const { return points.size(); }
};

std::vector<FieldScalar> normalize_projective(std::vector<FieldScalar> v);

struct GridBuildStats {
  int retries = 0;
};

/// Zero-dimensional grid complete intersection in P^n: divisor i is a union
/// of degrees[i] random hyperplanes, and the scheme is the prod(degrees)
/// points obtained by picking one hyperplane from each divisor. Degenerate
/// draws (non-transverse tuples, coincident points) are retried with
/// derived seeds and counted in stats; the retry budget exhausting throws.
PointSet build_grid_scheme(const Field& field, int n, const std::vector<int>& degrees,
                           std::uint64_t seed, GridBuildStats* stats = nullptr);

/// Distinct uniformly random points (no structure).
PointSet random_points(const Field& field, int n, int count, std::uint64_t seed);

/// Sub-scheme selected by keep[i].
PointSet subset(const PointSet& z, const std::vector<bool>& keep);

/// One row per point, one column per degree-m monomial (descending grevlex);
/// entries are the monomial values at the points.
ExactMatrix evaluation_matrix(const PointSet& z, int m);

/// h^0(P^n, I_Z(m)) = #monomials - rank(evaluation matrix).
long long h0_ideal_points(const PointSet& z, int m);

struct CayleyBacharachResult {
  bool holds = false;
  /// A point whose removal enlarges the space of degree-m divisors, if any.
  std::optional<std::size_t> witness_index;
};

/// Z satisfies Cayley-Bacharach in degree m when every degree-m divisor
/// through all but one point of Z contains all of Z; equivalently, removing
/// any single point leaves h^0 of the ideal unchanged.
CayleyBacharachResult cayley_bacharach_check(const PointSet& z, int m);

/// Checks h0(I_{Z'}(m)) - h0(I_Z(m)) = h1(I_{Z''}(d_sum - n - 1 - m)) for
/// the partition Z = Z' (in_first) disjoint-union Z'', both sides computed
/// from evaluation-matrix ranks. Requires 0 <= m <= d_sum - n - 1.
bool residual_identity_check(const PointSet& z, const std::vector<bool>& in_first, int m,
                             int d_sum);

}  // namespace cifano
