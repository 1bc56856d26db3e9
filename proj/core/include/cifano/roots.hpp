#pragma once

#include <cstdint>
#include <vector>

#include "cifano/field.hpp"
#include "cifano/poly.hpp"
#include "cifano/rng.hpp"

namespace cifano {

/// All N solutions of x^N = sign in GF(p), sorted by residue.
/// Requires sign in {+1, -1} and 2N | p-1; rejects p otherwise, since only
/// then do both root sets have full size N.
std::vector<FieldScalar> nth_roots(std::uint64_t p, int n, int sign);

/// Smallest prime p > lower_bound with 2N | p-1 for every N in root_orders
/// (so that x^N = +-1 always has N solutions), and p dividing none of
/// avoid_divisors (characteristic hygiene for degrees appearing in exponents
/// and derivative coefficients).
std::uint64_t smallest_admissible_prime(const std::vector<int>& root_orders,
                                        const std::vector<int>& avoid_divisors,
                                        std::uint64_t lower_bound = 1000000);

/// Convenience: GF(p) for the smallest admissible p covering x^d = +-1 for
/// every degree in ds.
Field field_with_roots(const std::vector<int>& ds);

/// Distinct roots in GF(p) of a univariate polynomial given by ascending
/// coefficients, via gcd with x^p - x and randomized equal-degree splitting.
/// Deterministic for a fixed rng state. The zero polynomial is rejected.
std::vector<FieldScalar> univariate_distinct_roots(const std::vector<FieldScalar>& coeffs,
                                                   SeededRng& rng);

struct BinaryFormRoots {
  /// Distinct rational projective roots, normalized and sorted; (1:t) for
  /// finite roots, (0:1) for the root at infinity.
  std::vector<std::vector<FieldScalar>> points;
  /// True when the form has no repeated root over the algebraic closure.
  bool squarefree = true;
};

/// Rational zero locus of a homogeneous binary form over GF(p).
BinaryFormRoots binary_form_roots(const MultiPoly& form, SeededRng& rng);

}  // namespace cifano
