#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invsem/rational.hpp"

namespace invsem {

/// Dense exact-rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix mul(const RationalMatrix& o) const;
  RationalMatrix add(const RationalMatrix& o) const;
  RationalMatrix sub(const RationalMatrix& o) const;
  RationalMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const RationalMatrix& o) const = default;

  /// Sum of squared entries (squared Hilbert-Schmidt norm; entries are real).
  Rat hs_norm_sq() const;
  /// Zeroes all off-diagonal entries.
  RationalMatrix diagonal_part() const;
  /// Keeps rows and columns in the index set, zeroing the rest.
  RationalMatrix compress(const std::vector<std::size_t>& keep) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

/// Rank by Gauss-Jordan elimination over the rationals.
std::size_t matrix_rank(std::vector<std::vector<Rat>> rows);

struct LinearSolveResult {
  bool consistent = false;
  std::vector<Rat> particular;
  std::vector<std::vector<Rat>> nullspace;
};

/// Solves A x = b exactly, returning a particular solution and a nullspace
/// basis of the homogeneous system.
LinearSolveResult solve_linear(const std::vector<std::vector<Rat>>& a,
                               const std::vector<Rat>& b);

}  // namespace invsem
