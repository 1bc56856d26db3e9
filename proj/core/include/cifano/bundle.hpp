#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cifano/hilbert.hpp"

namespace cifano {

/// Admissible parameter regimes for the rank-2 construction on a complete
/// intersection surface X in P^n of type (d_1, ..., d_{n-2}).
enum class BundleRegime {
  /// 2 < d_1 < d_2 <= ... (n = 4 additionally d_1 >= 4, d_2 >= 6).
  kGeneral,
  /// d_1 = 2 with n in {4, 5}: the quadric regime with h^0 = 4.
  kQuadric,
};

/// Validates (n, degrees) and names the violated inequality on failure.
BundleRegime validate_bundle_params(int n, const std::vector<int>& degrees);

/// The surface X itself.
CIType surface_type(int n, const std::vector<int>& degrees);
/// The distinguished zero-dimensional scheme Z cut out by two hyperplanes,
/// a degree d_1 - 1 residual divisor, and the remaining degrees; its length
/// is (d_1 - 1) e.
CIType residual_point_type(int n, const std::vector<int>& degrees);

int kronecker_delta_2(const std::vector<int>& degrees);
/// e = d_2 * ... * d_{n-2}.
long long product_tail(const std::vector<int>& degrees);

struct ChernData {
  int rank = 2;
  long long c1 = 1;  // multiples of H
  long long c2 = 0;
  long long chi = 0;  // chi(E) from additivity along the defining sequence
};

/// rank 2, c1 = H, c2 = (d_1 - 1) e, and chi(E) = chi(O_X) + chi(I_Z(1)).
ChernData chern_data(int n, const std::vector<int>& degrees);

struct ECohomology {
  long long h0 = 0;
  long long h1 = 0;
  long long h2 = 0;
  long long chi = 0;
};

/// h^0 = 1 + h^0(X, I_Z(1)) (the span count), h^2 through the twisted
/// defining sequence by two independent routes (Hilbert functions vs. chi
/// additivity), h^1 forced by chi. Any route disagreement or h^1 != 0 is an
/// internal inconsistency and throws.
ECohomology cohomology_of_E(int n, const std::vector<int>& degrees);

/// h^1(X, I_Z(d - n)) = dimension of the extension space of I_Z(1) by O_X,
/// computed as the interpolation deficiency of Z at twist d - n. The value
/// 1 certifies a unique non-split extension.
long long ext1_value(int n, const std::vector<int>& degrees);

struct ComponentEntry {
  long long count = 0;
  int dim = 0;
};

struct ComponentReport {
  std::string example;
  int n = 0;
  std::vector<int> degrees;
  long long c2 = 0;
  std::vector<ComponentEntry> components;
  std::vector<std::string> checked;
  std::vector<std::string> assumed;
};

/// Moduli component counts transferred from Fano-scheme data for the named
/// example family; `checked` lists machine-verified facts, `assumed` the
/// cited classical inputs. Examples: "quintic" (d2), "fermat-lines"
/// (d1, d2), "spinor" (d2, d3), "fermat-planes" (d1, d2, d3),
/// "cone-families" (d1, d2). Unused slots take the documented defaults when
/// passed as 0.
ComponentReport moduli_component_report(const std::string& example, int d1, int d2, int d3,
                                        std::uint64_t seed);

struct BundleReport {
  int n = 0;
  std::vector<int> degrees;
  BundleRegime regime = BundleRegime::kGeneral;
  int d_sum = 0;
  long long e_tail = 0;
  int canonical_coeff = 0;
  int delta = 0;
  ChernData chern;
  ECohomology cohomology;
  long long ext1 = 0;
  long long slope_num = 1, slope_den = 2;  // mu_H in H-units
  /// 4 c_2 - c_1^2 - 3 chi(O_X); standard surface theory, informational only.
  long long expected_moduli_dim = 0;
};

BundleReport bundle_report(int n, const std::vector<int>& degrees);

}  // namespace cifano
