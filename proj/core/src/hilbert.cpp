#include "cifano/hilbert.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cifano {

namespace {

long long to_ll(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) throw std::overflow_error(std::string(what) + ": value out of 64-bit range");
  return static_cast<long long>(z.get_si());
}

long long alternating_sum(const std::vector<long long>& h) {
  long long acc = 0;
  for (std::size_t i = 0; i < h.size(); ++i) acc += (i % 2 == 0 ? h[i] : -h[i]);
  return acc;
}

}  // namespace

CIType::CIType(int n_, std::vector<int> degrees_) : n(n_), degrees(std::move(degrees_)) {
  if (n < 1) throw std::invalid_argument("CIType: ambient dimension must be >= 1");
  if (degrees.empty() || static_cast<int>(degrees.size()) > n) {
    throw std::invalid_argument("CIType: codimension must satisfy 1 <= codim <= n");
  }
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("CIType: degrees must be >= 1");
  }
}

int CIType::degree_sum() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }

long long CIType::scheme_degree() const {
  long long prod = 1;
  for (int d : degrees) prod *= d;
  return prod;
}

HilbertSeries HilbertSeries::of(const CIType& type, int truncation) {
  if (truncation < 0) throw std::invalid_argument("HilbertSeries: negative truncation");
  std::size_t len = static_cast<std::size_t>(truncation) + 1;
  // Numerator prod (1 - t^e), truncated.
  std::vector<mpz_class> c(len, 0);
  c[0] = 1;
  for (int e : type.degrees) {
    for (std::size_t i = len; i-- > static_cast<std::size_t>(e);) {
      c[i] -= c[i - e];
    }
  }
  // Divide by (1 - t)^{n+1}: n+1 prefix-sum passes.
  for (int pass = 0; pass <= type.n; ++pass) {
    for (std::size_t i = 1; i < len; ++i) c[i] += c[i - 1];
  }
  HilbertSeries s;
  s.c_ = std::move(c);
  return s;
}

const mpz_class& HilbertSeries::coeff(int m) const {
  if (m < 0 || m > truncation()) throw std::out_of_range("HilbertSeries::coeff: beyond truncation");
  return c_[static_cast<std::size_t>(m)];
}

long long hilbert_function(const CIType& type, long long m) {
  if (m < 0) return 0;
  if (m > 1000000) throw std::invalid_argument("hilbert_function: twist too large");
  int def = type.degree_sum() + type.n + 5;
  int trunc = std::max<long long>(def, m);
  HilbertSeries s = HilbertSeries::of(type, static_cast<int>(trunc));
  return to_ll(s.coeff(static_cast<int>(m)), "hilbert_function");
}

mpz_class binomial_ext(const mpz_class& a, int k) {
  if (k < 0) return 0;
  mpz_class num = 1;
  for (int i = 0; i < k; ++i) num *= a - i;
  mpz_class fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  return num / fact;
}

mpz_class euler_structure_sheaf(const CIType& type, long long m) {
  // Fold subset sums with signs.
  std::vector<std::pair<long long, int>> subsets{{0, +1}};
  subsets.reserve(1u << std::min<std::size_t>(type.degrees.size(), 20));
  for (int e : type.degrees) {
    std::size_t sz = subsets.size();
    for (std::size_t i = 0; i < sz; ++i) {
      subsets.push_back({subsets[i].first + e, -subsets[i].second});
    }
  }
  mpz_class acc = 0;
  for (const auto& [sum, sign] : subsets) {
    acc += sign * binomial_ext(mpz_class(static_cast<long>(m - sum + type.n)), type.n);
  }
  return acc;
}

mpz_class euler_ideal_sheaf(const CIType& type, long long m) {
  return binomial_ext(mpz_class(static_cast<long>(m + type.n)), type.n) -
         euler_structure_sheaf(type, m);
}

long long h0_projective_space(int n, long long m) {
  if (m < 0) return 0;
  return to_ll(binomial_ext(mpz_class(static_cast<long>(m + n)), n), "h0_projective_space");
}

long long hn_projective_space(int n, long long m) {
  if (m > -n - 1) return 0;
  return to_ll(binomial_ext(mpz_class(static_cast<long>(-m - 1)), n), "hn_projective_space");
}

CohomologyTable structure_sheaf_cohomology(const CIType& type, long long m) {
  if (type.dim() < 0) throw std::invalid_argument("structure_sheaf_cohomology: negative dimension");
  CohomologyTable t;
  t.twist = m;
  int dim = type.dim();
  if (dim == 0) {
    // Twisting is trivial on points.
    t.h = {type.scheme_degree()};
    t.euler = t.h[0];
    return t;
  }
  t.h.assign(static_cast<std::size_t>(dim) + 1, 0);
  t.h[0] = m >= 0 ? hilbert_function(type, m) : 0;
  long long dual = type.canonical_coeff() - m;
  t.h[static_cast<std::size_t>(dim)] += dual >= 0 ? hilbert_function(type, dual) : 0;
  t.euler = alternating_sum(t.h);
  return t;
}

CohomologyTable ideal_sheaf_cohomology(const CIType& type, long long m) {
  CohomologyTable t;
  t.twist = m;
  int n = type.n;
  int dim = type.dim();
  t.h.assign(static_cast<std::size_t>(n) + 1, 0);
  t.h[0] = m >= 0 ? h0_projective_space(n, m) - hilbert_function(type, m) : 0;
  if (dim == 0) {
    t.h[1] += m >= 0 ? type.scheme_degree() - hilbert_function(type, m) : type.scheme_degree();
  }
  if (dim >= 1) {
    CohomologyTable x = structure_sheaf_cohomology(type, m);
    for (int i = 2; i <= n - 1; ++i) {
      int j = i - 1;
      if (j <= dim) t.h[static_cast<std::size_t>(i)] = x.h[static_cast<std::size_t>(j)];
    }
    if (dim == n - 1) t.h[static_cast<std::size_t>(n)] += x.h[static_cast<std::size_t>(n - 1)];
  }
  t.h[static_cast<std::size_t>(n)] += hn_projective_space(n, m);
  t.euler = alternating_sum(t.h);
  return t;
}

long long cb_deficiency(const CIType& type, long long m) {
  if (type.dim() != 0) throw std::invalid_argument("cb_deficiency: scheme must be zero-dimensional");
  if (m < 0) throw std::invalid_argument("cb_deficiency: twist must be nonnegative");
  return type.scheme_degree() - hilbert_function(type, m);
}

}  // namespace cifano
