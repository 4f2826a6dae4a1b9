#include "eqlift/exact_linalg.hpp"

#include <utility>

namespace eqlift::exact {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

Rational determinant(Matrix a) {
  const int n = a.rows;
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (sgn(a(r, col)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (sgn(a(r, col)) == 0) continue;
      const Rational factor = a(r, col) / a(col, col);
      for (int j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
    }
  }
  return det;
}

int rank(Matrix a) {
  EchelonBasis basis(a.cols);
  for (int r = 0; r < a.rows; ++r)
    basis.insert(std::vector<Rational>(a.data.begin() + static_cast<long>(r) * a.cols,
                                       a.data.begin() + static_cast<long>(r + 1) * a.cols));
  return basis.rank();
}

bool EchelonBasis::insert(std::vector<Rational> row) {
  for (std::size_t b = 0; b < rows_.size(); ++b) {
    const int p = pivots_[b];
    if (sgn(row[p]) == 0) continue;
    const Rational factor = row[p];
    for (int j = p; j < cols_; ++j) row[j] -= factor * rows_[b][j];
  }
  int pivot = -1;
  for (int j = 0; j < cols_; ++j)
    if (sgn(row[j]) != 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  const Rational lead = row[pivot];
  for (int j = pivot; j < cols_; ++j) row[j] /= lead;
  // Keep the basis fully reduced so later pivots stay clean in earlier rows.
  for (auto& other : rows_) {
    if (sgn(other[pivot]) == 0) continue;
    const Rational factor = other[pivot];
    for (int j = pivot; j < cols_; ++j) other[j] -= factor * row[j];
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

std::optional<RationalVector> solve_unique(std::span<const std::vector<Rational>> augmented,
                                           std::span<const int> columns, int rhs_column) {
  const int k = static_cast<int>(columns.size());
  EchelonBasis basis(k + 1);
  for (const auto& row : augmented) {
    std::vector<Rational> r(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j < k; ++j) r[j] = row[columns[j]];
    r[k] = row[rhs_column];
    basis.insert(std::move(r));
  }
  // Reduced rows: a pivot in the rhs column means inconsistency; fewer than k
  // pivots means a free variable.
  if (basis.rank() != k) return std::nullopt;
  RationalVector x(k);
  for (const auto& row : basis.rows()) {
    int pivot = 0;
    while (sgn(row[pivot]) == 0) ++pivot;
    if (pivot == k) return std::nullopt;
    x[pivot] = row[k];
  }
  return x;
}

}  // namespace eqlift::exact
