#pragma once

#include <cstddef>
#include <vector>

#include "cifano/field.hpp"

namespace cifano {

/// Dense matrix over an exact field. Row/column counts may be zero.
/// Elimination is plain Gauss-Jordan with first-nonzero pivoting, which
/// keeps every derived object (rref, rank, kernel) canonical.
class ExactMatrix {
 public:
  ExactMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  static ExactMatrix identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const FieldScalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  FieldScalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  ExactMatrix transposed() const;
  ExactMatrix multiplied(const ExactMatrix& rhs) const;
  std::vector<FieldScalar> apply(const std::vector<FieldScalar>& v) const;

  /// Reduced row echelon form; pivot column indices appended to *pivots.
  ExactMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;

  std::size_t rank() const;

  /// Canonical kernel basis: one vector per free column of the rref, with a
  /// unit entry in that column. Every returned v satisfies M v = 0 exactly.
  std::vector<std::vector<FieldScalar>> kernel_basis() const;

  /// Reduced column echelon form with zero columns dropped; canonical
  /// representative of the column span.
  ExactMatrix column_echelon() const;

  /// Inverse of a square full-rank matrix.
  ExactMatrix inverse() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldScalar> a_;
};

std::size_t rank(const ExactMatrix& m);
std::vector<std::vector<FieldScalar>> kernel_basis(const ExactMatrix& m);

}  // namespace cifano
