#include "invsem/matrix.hpp"

#include <algorithm>

#include "invsem/errors.hpp"

namespace invsem {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::mul(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidInput("matrix dimensions do not match");
  RationalMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rat& w = o.at(k, j);
        if (w != 0) r.at(i, j) += v * w;
      }
    }
  return r;
}

RationalMatrix RationalMatrix::add(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shapes differ");
  RationalMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

RationalMatrix RationalMatrix::sub(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shapes differ");
  RationalMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& v) { return v == 0; });
}

Rat RationalMatrix::hs_norm_sq() const {
  Rat acc = 0;
  for (const auto& v : data_) acc += v * v;
  return acc;
}

RationalMatrix RationalMatrix::diagonal_part() const {
  RationalMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) r.at(i, i) = at(i, i);
  return r;
}

RationalMatrix RationalMatrix::compress(const std::vector<std::size_t>& keep) const {
  RationalMatrix r(rows_, cols_);
  for (auto i : keep)
    for (auto j : keep) r.at(i, j) = at(i, j);
  return r;
}

std::string RationalMatrix::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += " ";
      s += rat_to_string(at(i, j));
    }
    s += "\n";
  }
  return s;
}

std::size_t matrix_rank(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Rat inv = rows[rank][col];
    for (auto& v : rows[rank]) v /= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      Rat f = rows[r][col];
      if (f == 0) continue;
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

LinearSolveResult solve_linear(const std::vector<std::vector<Rat>>& a,
                               const std::vector<Rat>& b) {
  LinearSolveResult res;
  std::size_t m = a.size();
  std::size_t n = m == 0 ? 0 : a[0].size();
  std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(n + 1, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n] = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && aug[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(aug[rank], aug[pivot]);
    Rat inv = aug[rank][col];
    for (auto& v : aug[rank]) v /= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank) continue;
      Rat f = aug[r][col];
      if (f == 0) continue;
      for (std::size_t c = col; c <= n; ++c) aug[r][c] -= f * aug[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < m; ++r)
    if (aug[r][n] != 0) return res;  // inconsistent

  res.consistent = true;
  res.particular.assign(n, Rat(0));
  for (std::size_t r = 0; r < rank; ++r) res.particular[pivot_col[r]] = aug[r][n];

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(n, Rat(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -aug[r][free_col];
    res.nullspace.push_back(std::move(v));
  }
  return res;
}

}  // namespace invsem
