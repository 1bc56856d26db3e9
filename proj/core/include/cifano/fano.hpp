#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cifano/field.hpp"
#include "cifano/poly.hpp"
#include "cifano/rng.hpp"
#include "cifano/subspace.hpp"

namespace cifano {

/// The hypersurface is singular somewhere along the subspace, so the normal
/// sheaf is not locally free there and no splitting type exists.
class SingularAlongSubspaceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Twists (a_1 >= ... >= a_r) of a line's normal bundle N = + O(a_i).
struct SplittingType {
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  int degree() const;
  /// h^0(N) = sum max(0, a_i + 1).
  long long h0() const;

  friend bool operator==(const SplittingType& a, const SplittingType& b) {
    return a.twists == b.twists;
  }
};

struct FanoItem {
  LinearSubspace space;
  bool containment = false;
  long long h0_normal = 0;
  std::optional<SplittingType> splitting;  // lines only
  std::string label;
};

struct FanoReport {
  int ambient_dim = 0;
  int degree = 0;
  std::string hypersurface;
  std::vector<FanoItem> items;
  /// Number of connected components certified by this report and their
  /// dimensions; 0 with a note when the listed subspaces are not isolated.
  long long component_count = 0;
  std::vector<int> component_dims;
  std::string component_note;
  /// Redraws of the auxiliary random form before a generic one was found.
  int redraws = 0;
  std::string auxiliary_form;
};

/// True exactly when the restriction of f to the subspace is the zero
/// polynomial (an exact containment certificate).
bool contains_subspace(const MultiPoly& f, const LinearSubspace& subspace);

/// z0^d - z1^d + z2^d - z3^d in 4 variables.
MultiPoly fermat_signed_surface(const Field& field, int d);
/// The same quadrinomial in 5 variables plus z4 * g for a degree d-1 form g.
MultiPoly fermat_signed_threefold(const Field& field, int d, const MultiPoly& g);
/// z0^d + ... + z5^d in 6 variables.
MultiPoly fermat_p5(const Field& field, int d);

/// The 3 d^2 lines on the signed Fermat surface in P^3: three coordinate
/// pairings each with d^2 root choices. Every line is verified by exact
/// restriction on the surface and, lifted into the hyperplane z4 = 0, on the
/// threefold z0^d - z1^d + z2^d - z3^d + z4 g = 0 with a seeded random g;
/// splitting types and h^0(N) are computed on the threefold. g is redrawn
/// (and the redraw counted) until every line attains the balanced generic
/// splitting.
FanoReport fermat_lines(const Field& field, int d, std::uint64_t seed);

/// The 15 d^3 planes on the Fermat hypersurface of degree d in P^5, each
/// verified by containment and by h^0(N) = 0.
FanoReport fermat_planes_p5(const Field& field, int d);

/// Splitting type of the normal bundle of a line inside the hypersurface
/// {f = 0}, via kernel dimensions of the twisted syzygy maps
/// (a_i) -> sum a_i g_i on binary forms. Throws SingularAlongSubspaceError
/// when the restricted derivative forms share a zero on the line.
SplittingType normal_bundle_splitting(const MultiPoly& f, const LinearSubspace& line);

/// h^0 of the normal bundle of a plane inside a hypersurface in P^5,
/// computed as the space of triples of linear forms (L_i) with
/// sum L_i F_i = 0 on the plane. If the restricted forms share a zero the
/// hypersurface is singular on the plane; *singular is set and the count is
/// still returned.
long long plane_normal_sections(const MultiPoly& f, const LinearSubspace& plane,
                                bool* singular = nullptr);

/// Number of lines on a general degree-d hypersurface in P^n with
/// zero-dimensional expected Fano scheme (d = 2n-3), by torus localization:
/// an exact rational sum over pairs of fixed weights, evaluated for two
/// independent generic integer weight draws and required to agree.
mpz_class bott_line_count(int n, int d, std::uint64_t seed = 0xB077);

/// Single evaluation with explicit weights (pairwise distinct).
mpq_class bott_line_count_with_weights(int n, int d, const std::vector<long long>& weights);

struct ConeFamily {
  std::vector<FieldScalar> vertex;
  int rulings_sampled = 0;
  int rulings_verified = 0;
};

struct Example46Report {
  int d1 = 0;
  bool g_squarefree = false;
  /// One entry per rational zero of g on the line z2 = z3 = z4 = 0.
  std::vector<ConeFamily> families;
  int expected_families = 0;
  long long rank_meeting_line = 0;   // representative line meeting the plane
  long long rank_disjoint_line = 0;  // representative line missing the plane
  long long expected_rank = 0;       // d1 + 1
  std::string g_text;
  std::string h_text;
  bool degenerate = false;
  bool small_degree_warning = false;

  bool passed() const;
};

/// For f = g(z0, z1) + h(z2, z3, z4): verifies the cone of lines over
/// {h = 0} at each zero of g by sampled ruling containment, and computes the
/// rank of the coefficient-space restriction map to each of the two
/// representative lines; full rank d1 + 1 certifies that a general (g, h)
/// admits no line avoiding z2 = z3 = z4 = 0.
Example46Report example46_check(const Field& field, int d1, const MultiPoly& g,
                                const MultiPoly& h, std::uint64_t seed);

/// A split g (distinct random zeros, so every cone vertex is rational) and a
/// dense random h.
std::pair<MultiPoly, MultiPoly> example46_default_forms(const Field& field, int d1,
                                                        std::uint64_t seed);

}  // namespace cifano
