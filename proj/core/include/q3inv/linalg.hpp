#pragma once

#include <q3inv/cyclotomic.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace q3inv {

using Vec = std::vector<Cyclotomic>;

// Dense row-major matrix over the cyclotomic field. Sized for the exact
// elimination workloads in this project (a few hundred rows/columns).
struct Matrix {
  size_t rows = 0, cols = 0;
  std::vector<Cyclotomic> data;

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), data(r * c) {}

  Cyclotomic& at(size_t r, size_t c) { return data[r * cols + c]; }
  const Cyclotomic& at(size_t r, size_t c) const { return data[r * cols + c]; }

  static Matrix identity(size_t n);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Cyclotomic& s) const;
  Vec apply(const Vec& v) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;
};

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<size_t> rref(Matrix& m);

size_t rank(Matrix m);

// Basis of { x : m x = 0 }.
std::vector<Vec> kernel_basis(const Matrix& m);

// One solution of m x = b, if any.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

std::optional<Matrix> inverse(const Matrix& m);

// Incrementally maintained row space in reduced echelon form. Used to solve
// large homogeneous systems by feeding constraint rows until the kernel is
// small, then verifying candidates against the remaining constraints.
class RowSpace {
 public:
  explicit RowSpace(size_t cols) : cols_(cols) {}

  // Reduces the row against the current space; true if it added a new pivot.
  bool insert(Vec row);
  size_t rank() const { return rows_.size(); }
  size_t cols() const { return cols_; }
  size_t nullity() const { return cols_ - rows_.size(); }
  // Kernel of the accumulated constraint rows.
  std::vector<Vec> kernel() const;

 private:
  size_t cols_;
  std::vector<std::pair<size_t, Vec>> rows_;  // (pivot column, row), sorted
};

// Signature (#positive, #negative eigenvalues) of a symmetric rational
// matrix, by exact congruence diagonalization.
std::pair<int, int> rational_signature(std::vector<std::vector<Rational>> m);

}  // namespace q3inv
