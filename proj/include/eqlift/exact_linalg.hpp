#pragma once

#include <optional>
#include <span>
#include <vector>

#include "eqlift/rational.hpp"

namespace eqlift::exact {

/// Small dense row-major matrix over Q.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

  Rational& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& operator()(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }

  static Matrix identity(int n);
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

/// Gaussian elimination with exact pivoting.
Rational determinant(Matrix a);
int rank(Matrix a);

/// Row echelon basis that accepts rows one at a time. Feeding the rows of a
/// tall matrix gives its rank without materializing it, and lets callers stop
/// as soon as the rank they need is reached.
class EchelonBasis {
 public:
  explicit EchelonBasis(int cols) : cols_(cols) {}

  /// Reduces `row` against the basis; keeps it when independent. Returns true
  /// when the rank grew.
  bool insert(std::vector<Rational> row);

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  /// Reduced rows (each with a leading 1 at its pivot column).
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

 private:
  int cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

/// Unique solution of A x = b, where A is given as augmented rows [A | b].
/// Returns nullopt when the system is inconsistent or underdetermined.
std::optional<RationalVector> solve_unique(std::span<const std::vector<Rational>> augmented,
                                           std::span<const int> columns, int rhs_column);

}  // namespace eqlift::exact
