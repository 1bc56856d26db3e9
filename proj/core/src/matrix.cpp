#include "cifano/matrix.hpp"

#include <stdexcept>

namespace cifano {

ExactMatrix ExactMatrix::identity(Field field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

ExactMatrix ExactMatrix::multiplied(const ExactMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("ExactMatrix::multiplied: shape mismatch");
  ExactMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldScalar& s = at(i, k);
      if (s.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += s * rhs.at(k, j);
      }
    }
  }
  return out;
}

std::vector<FieldScalar> ExactMatrix::apply(const std::vector<FieldScalar>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("ExactMatrix::apply: dimension mismatch");
  std::vector<FieldScalar> out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    }
  }
  return out;
}

ExactMatrix ExactMatrix::rref(std::vector<std::size_t>* pivots) const {
  ExactMatrix m = *this;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows_ && m.at(sel, col).is_zero()) ++sel;
    if (sel == rows_) continue;
    if (sel != pivot_row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
    }
    FieldScalar inv = m.at(pivot_row, col).inverse();
    for (std::size_t j = col; j < cols_; ++j) m.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pivot_row || m.at(i, col).is_zero()) continue;
      FieldScalar factor = m.at(i, col);
      for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= factor * m.at(pivot_row, j);
    }
    if (pivots) pivots->push_back(col);
    ++pivot_row;
  }
  return m;
}

std::size_t ExactMatrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

std::vector<std::vector<FieldScalar>> ExactMatrix::kernel_basis() const {
  std::vector<std::size_t> pivots;
  ExactMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldScalar>> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<FieldScalar> v(cols_, field_.zero());
    v[free_col] = field_.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      v[pivots[k]] = -r.at(k, free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactMatrix ExactMatrix::column_echelon() const {
  std::vector<std::size_t> pivots;
  ExactMatrix r = transposed().rref(&pivots);
  ExactMatrix out(field_, rows_, pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    for (std::size_t i = 0; i < rows_; ++i) out.at(i, k) = r.at(k, i);
  }
  return out;
}

ExactMatrix ExactMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("ExactMatrix::inverse: not square");
  ExactMatrix aug(field_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = field_.one();
  }
  std::vector<std::size_t> pivots;
  ExactMatrix r = aug.rref(&pivots);
  if (pivots.size() != rows_) throw std::domain_error("ExactMatrix::inverse: singular matrix");
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] != k) throw std::domain_error("ExactMatrix::inverse: singular matrix");
  }
  ExactMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = r.at(i, cols_ + j);
  }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i) {
    if (a.a_[i] != b.a_[i]) return false;
  }
  return true;
}

std::size_t rank(const ExactMatrix& m) { return m.rank(); }

std::vector<std::vector<FieldScalar>> kernel_basis(const ExactMatrix& m) { return m.kernel_basis(); }

}  // namespace cifano
