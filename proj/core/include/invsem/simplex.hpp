#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "invsem/rational.hpp"

namespace invsem {

/// Equality-constrained system A x = b over nonnegative variables.
struct LinearSystem {
  struct Row {
    std::vector<std::pair<std::uint32_t, Rat>> coeffs;  // sparse, var -> coefficient
    Rat rhs;
    std::string id;
  };
  std::size_t num_vars = 0;
  std::vector<Row> rows;

  std::size_t add_row(std::vector<std::pair<std::uint32_t, Rat>> coeffs, Rat rhs,
                      std::string id);
};

/// Feasibility answer. Exactly one of solution/dual is meaningful. The dual is
/// a Farkas certificate: coefficients y per row such that sum_i y_i * row_i
/// has only nonpositive variable coefficients but positive right-hand side.
struct LpFeasibility {
  bool feasible = false;
  std::vector<Rat> solution;                       // size num_vars when feasible
  std::vector<std::pair<std::size_t, Rat>> dual;   // (row index, coefficient) when not
};

/// Phase-1 simplex with Bland's anticycling rule, exact rational arithmetic.
/// The returned answer is re-verified internally against the input system.
LpFeasibility solve_feasibility(const LinearSystem& sys);

/// Same decision, but two-variable difference rows (x_u - x_v = 0) are first
/// collapsed by union-find; certificates are mapped back to the original rows.
LpFeasibility solve_feasibility_presolved(const LinearSystem& sys);

/// Exact checks used both internally and by verifiers.
bool verify_solution(const LinearSystem& sys, const std::vector<Rat>& x);
bool verify_farkas(const LinearSystem& sys,
                   const std::vector<std::pair<std::size_t, Rat>>& dual);

}  // namespace invsem
