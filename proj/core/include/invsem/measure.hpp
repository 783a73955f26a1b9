#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invsem/finite_set.hpp"
#include "invsem/ground.hpp"
#include "invsem/rational.hpp"

namespace invsem {

/// Nonnegative exact-rational measure: either atom values over a finite
/// universe, or values on a finite list of sets (a fragment of a Boolean
/// algebra). Mass is tracked and defaults to 1.
struct RationalMeasure {
  enum class Mode { Atomic, Fragment };
  Mode mode = Mode::Atomic;

  // Atomic
  std::vector<Rat> atoms;
  Rat mass = 1;

  // Fragment
  std::vector<std::pair<XSet, Rat>> fragment;

  static RationalMeasure atomic(std::vector<Rat> values);
  static RationalMeasure uniform(std::size_t n);
  static RationalMeasure point_mass(std::size_t n, std::size_t at);
  static RationalMeasure on_fragment(std::vector<std::pair<XSet, Rat>> values);

  /// Atomic only: the measure of a subset of the universe.
  Rat of(const FiniteSet& a) const;
  Rat of_point(std::uint64_t x) const { return atoms.at(x); }
  bool nonnegative() const;
  Rat total() const;
};

struct DualTerm {
  std::string constraint_id;
  Rat coefficient;
};

/// Outcome of an exact feasibility question: a measure that re-verifies
/// against every constraint, or a rational combination of constraints that
/// re-verifies to a contradiction.
struct FeasibilityResult {
  bool feasible = false;
  RationalMeasure measure;
  std::vector<DualTerm> dual;
};

}  // namespace invsem
