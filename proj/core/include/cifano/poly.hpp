#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cifano/field.hpp"
#include "cifano/matrix.hpp"

namespace cifano {

/// Exponent vector of a monomial; length = number of variables.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Graded reverse lexicographic order, descending comparator: a before b
/// when deg a > deg b, or degrees tie and the rightmost nonzero entry of
/// a - b is negative (so z0^2 > z0 z1 > z1^2 > z0 z2 > ...).
struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// All monomials in num_vars variables of the given total degree, in
/// descending grevlex order. Size C(degree + num_vars - 1, num_vars - 1).
std::vector<Exponents> monomial_basis(int num_vars, int degree);

/// Sparse homogeneous multivariate polynomial. Every stored coefficient is
/// nonzero and every exponent vector sums to degree(); the zero polynomial
/// reports degree -1. Terms iterate in descending grevlex order.
class MultiPoly {
 public:
  MultiPoly(Field field, int num_vars);

  static MultiPoly zero(Field field, int num_vars) { return MultiPoly(field, num_vars); }
  static MultiPoly monomial(Field field, const Exponents& exps, const FieldScalar& coeff);
  /// Parses "c*z0^a0*...*zn^an +- ...". Coefficients are integers or
  /// num/den; whitespace is ignored; '*' and '^' may be omitted around
  /// juxtaposed signs but variables are always z<k>. num_vars below the
  /// highest variable index + 1 is an error; pass 0 to infer.
  static MultiPoly parse(Field field, std::string_view text, int num_vars = 0);

  const Field& field() const { return field_; }
  int num_vars() const { return num_vars_; }
  /// -1 for the zero polynomial.
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, FieldScalar, GrevlexGreater>& terms() const { return terms_; }
  FieldScalar coeff(const Exponents& e) const;

  void add_term(const Exponents& exps, const FieldScalar& coeff);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const FieldScalar& c) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Exact evaluation; pt.size() must equal num_vars().
  FieldScalar eval(const std::vector<FieldScalar>& pt) const;

  /// Formal partial derivative; over GF(p) terms whose exponent is
  /// divisible by p drop out.
  MultiPoly derivative(int var) const;

  /// Substitute z_i = sum_j M[i][j] u_j for an (num_vars) x m matrix M;
  /// result lives in m variables. Homogeneous linear substitution.
  MultiPoly compose_linear(const ExactMatrix& m) const;

  /// Keep only terms supported on the first k variables, re-expressed in
  /// k variables (the restriction along u_k = ... = 0).
  MultiPoly restrict_to_first_vars(int k) const;

  std::string str() const;

 private:
  Field field_;
  int num_vars_;
  int degree_;
  std::map<Exponents, FieldScalar, GrevlexGreater> terms_;
};

}  // namespace cifano
