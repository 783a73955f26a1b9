#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invsem/ground.hpp"

namespace invsem {

/// Bounded subset of X x N: finitely many levels, one set per level. Levels
/// with empty sets are dropped, so equality is structural.
class LeveledSet {
 public:
  LeveledSet() = default;
  explicit LeveledSet(std::vector<std::pair<std::uint32_t, XSet>> levels);
  /// The set placed at level 0.
  static LeveledSet single(XSet set, std::uint32_t level = 0);

  const std::vector<std::pair<std::uint32_t, XSet>>& levels() const { return levels_; }
  bool empty() const { return levels_.empty(); }
  XSet at_level(std::uint32_t level, const Universe& u) const;
  bool has_level(std::uint32_t level) const;
  std::uint32_t max_level() const;

  LeveledSet unite(const LeveledSet& o) const;
  LeveledSet intersect(const LeveledSet& o) const;
  LeveledSet difference(const LeveledSet& o) const;
  bool is_disjoint(const LeveledSet& o) const;
  bool is_subset_of(const LeveledSet& o) const;
  LeveledSet shifted(std::uint32_t level_shift) const;
  bool operator==(const LeveledSet& o) const = default;

  /// Total cardinality; nullopt when some level is infinite.
  std::optional<std::uint64_t> cardinality() const;

  std::string to_string() const;

 private:
  std::vector<std::pair<std::uint32_t, XSet>> levels_;  // sorted by level
};

/// Disjointification for [a] + [b]: b is shifted to fresh levels above a.
LeveledSet add_witnessed(const LeveledSet& a, const LeveledSet& b);

}  // namespace invsem
