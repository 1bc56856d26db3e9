#pragma once

#include <vector>

#include <gmpxx.h>

namespace cifano {

/// Type of a complete intersection in projective n-space: the ambient
/// dimension and the multiset of degrees of the defining hypersurfaces.
struct CIType {
  int n;
  std::vector<int> degrees;

  CIType(int n_, std::vector<int> degrees_);

  int codim() const { return static_cast<int>(degrees.size()); }
  int dim() const { return n - codim(); }
  int degree_sum() const;
  /// Product of the degrees: the degree of the scheme.
  long long scheme_degree() const;
  /// K = (degree_sum - n - 1) H by adjunction.
  int canonical_coeff() const { return degree_sum() - n - 1; }
};

/// Truncated integer power series prod_i (1 - t^{e_i}) / (1 - t)^{n+1}.
/// Coefficient m is the Hilbert function of the coordinate ring at m.
class HilbertSeries {
 public:
  static HilbertSeries of(const CIType& type, int truncation);

  int truncation() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& coeff(int m) const;

 private:
  std::vector<mpz_class> c_;
};

/// Coefficient of t^m in the Hilbert series (0 for m < 0 by convention;
/// note this differs from h^0(O_Z(m)) = deg Z for points at m < 0).
/// Equals h^0(O_X(m)) for m >= 0 by arithmetic Cohen-Macaulayness.
long long hilbert_function(const CIType& type, long long m);

/// Binomial coefficient with the polynomial extension in the top argument,
/// so C(a, k) = a(a-1)...(a-k+1)/k! for any integer a.
mpz_class binomial_ext(const mpz_class& a, int k);

/// chi(O_X(m)) as the alternating Koszul sum
/// sum_{S subset of degrees} (-1)^|S| C(m - sum S + n, n).
mpz_class euler_structure_sheaf(const CIType& type, long long m);

/// chi of the ideal sheaf in P^n: chi(O_{P^n}(m)) - chi(O_X(m)).
mpz_class euler_ideal_sheaf(const CIType& type, long long m);

long long h0_projective_space(int n, long long m);
long long hn_projective_space(int n, long long m);

/// h^0..h^k of a twisted sheaf plus its Euler characteristic.
struct CohomologyTable {
  long long twist = 0;
  std::vector<long long> h;
  long long euler = 0;
};

/// Cohomology of O_X(m) for a complete intersection X of dim >= 0:
/// h^0 from the Hilbert function, vanishing middle cohomology, top
/// cohomology by duality against the canonical twist. For points the
/// table is the single value h^0(O_Z(m)) = deg Z.
CohomologyTable structure_sheaf_cohomology(const CIType& type, long long m);

/// Cohomology of the ideal sheaf I_X(m) on P^n via the restriction
/// sequence; h^1 vanishes except for points, where it is the failure of
/// the points to impose independent conditions.
CohomologyTable ideal_sheaf_cohomology(const CIType& type, long long m);

/// deg Z - HF(Z, m) = h^1(P^n, I_Z(m)) for a zero-dimensional complete
/// intersection Z and m >= 0.
long long cb_deficiency(const CIType& type, long long m);

}  // namespace cifano
