#include <q3inv/linalg.hpp>

#include <algorithm>
#include <stdexcept>

namespace q3inv {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one();
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(rows, o.cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < cols; ++k) {
      const Cyclotomic& x = at(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < o.cols; ++j)
        if (!o.at(k, j).is_zero()) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < data.size(); ++i) r.data[i] += o.data[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix diff shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < data.size(); ++i) r.data[i] -= o.data[i];
  return r;
}

Matrix Matrix::scaled(const Cyclotomic& s) const {
  Matrix r = *this;
  for (auto& x : r.data) x *= s;
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols) throw std::invalid_argument("matrix apply shape mismatch");
  Vec r(rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (size_t i = 0; i < data.size(); ++i)
    if (data[i] != o.data[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

std::vector<size_t> rref(Matrix& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t pr = row;
    while (pr < m.rows && m.at(pr, col).is_zero()) ++pr;
    if (pr == m.rows) continue;
    if (pr != row)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
    Cyclotomic inv = m.at(row, col).inverse();
    for (size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Cyclotomic f = m.at(i, col);
      for (size_t j = col; j < m.cols; ++j)
        if (!m.at(row, j).is_zero()) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  Matrix r = m;
  std::vector<size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    Vec x(m.cols);
    x[f] = Cyclotomic::one();
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r.at(i, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows) throw std::invalid_argument("solve shape mismatch");
  Matrix aug(m.rows, m.cols + 1);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // inconsistent
  Vec x(m.cols);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
  Matrix aug(m.rows, 2 * m.cols);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = Cyclotomic::one();
  }
  std::vector<size_t> pivots = rref(aug);
  if (pivots.size() != m.rows || (!pivots.empty() && pivots.back() >= m.cols)) return std::nullopt;
  Matrix inv(m.rows, m.cols);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
  return inv;
}

bool RowSpace::insert(Vec row) {
  if (row.size() != cols_) throw std::invalid_argument("rowspace width mismatch");
  for (const auto& [piv, r] : rows_) {
    if (row[piv].is_zero()) continue;
    Cyclotomic f = row[piv];
    for (size_t j = 0; j < cols_; ++j)
      if (!r[j].is_zero()) row[j] -= f * r[j];
  }
  size_t piv = 0;
  while (piv < cols_ && row[piv].is_zero()) ++piv;
  if (piv == cols_) return false;
  Cyclotomic inv = row[piv].inverse();
  for (size_t j = piv; j < cols_; ++j) row[j] *= inv;
  // Back-eliminate the new pivot from the existing rows to keep full RREF.
  for (auto& [p, r] : rows_) {
    if (r[piv].is_zero()) continue;
    Cyclotomic f = r[piv];
    for (size_t j = piv; j < cols_; ++j)
      if (!row[j].is_zero()) r[j] -= f * row[j];
  }
  auto it = std::lower_bound(rows_.begin(), rows_.end(), piv,
                             [](const auto& a, size_t b) { return a.first < b; });
  rows_.insert(it, {piv, std::move(row)});
  return true;
}

std::vector<Vec> RowSpace::kernel() const {
  std::vector<bool> is_pivot(cols_, false);
  for (const auto& [p, r] : rows_) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec x(cols_);
    x[f] = Cyclotomic::one();
    for (const auto& [p, r] : rows_) x[p] = -r[f];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::pair<int, int> rational_signature(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("signature needs a square matrix");
  int pos = 0, neg = 0;
  // Symmetric congruence reduction: clear row/column k against a nonzero
  // diagonal pivot, manufacturing one if the diagonal vanishes.
  for (size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      size_t j = k + 1;
      while (j < n && m[k][j] == 0) ++j;
      if (j == n) continue;  // zero row/column: zero eigenvalue
      // Add row/column j into k: new diagonal = 2 m[k][j] + m[j][j] != 0 or retry.
      for (size_t t = 0; t < n; ++t) m[k][t] += m[j][t];
      for (size_t t = 0; t < n; ++t) m[t][k] += m[t][j];
      if (m[k][k] == 0) {
        // 2*m[k][j] + m[j][j] = 0; subtracting instead gives -2 m[k][j] + m[j][j] != 0.
        for (size_t t = 0; t < n; ++t) m[k][t] -= 2 * m[j][t];
        for (size_t t = 0; t < n; ++t) m[t][k] -= 2 * m[t][j];
      }
    }
    if (m[k][k] == 0) continue;
    if (m[k][k] > 0)
      ++pos;
    else
      ++neg;
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (size_t t = 0; t < n; ++t) m[i][t] -= f * m[k][t];
      for (size_t t = 0; t < n; ++t) m[t][i] -= f * m[t][k];
    }
  }
  return {pos, neg};
}

}  // namespace q3inv
