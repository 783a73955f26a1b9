#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invsem/rational.hpp"

namespace invsem {

/// Ultimately periodic subset of N: membership below the threshold is listed
/// explicitly, membership at or above it is decided by residue mod the period.
/// Values are kept in canonical form (minimal period, then minimal threshold),
/// so two UPSets are equal exactly when their fields coincide.
class UPSet {
 public:
  UPSet() : threshold_(0), period_(1), residues_{false} {}

  /// membership(n) = n < threshold ? n in prefix : residues[n mod period].
  static UPSet make(std::uint64_t threshold, std::uint64_t period, std::vector<bool> residues,
                    std::vector<std::uint64_t> prefix_members);

  static UPSet empty_set() { return UPSet(); }
  static UPSet naturals();
  static UPSet from_points(const std::vector<std::uint64_t>& pts);
  /// Residue classes {r mod p} from the start, no prefix corrections.
  static UPSet residue_classes(std::uint64_t period, const std::vector<std::uint64_t>& residues);
  /// The ray {n : n >= lo}.
  static UPSet from_threshold(std::uint64_t lo);
  /// The interval [lo, hi).
  static UPSet interval(std::uint64_t lo, std::uint64_t hi);

  bool contains(std::uint64_t n) const;
  bool empty() const;
  /// Number of elements, nullopt when infinite.
  std::optional<std::uint64_t> cardinality() const;
  /// |R|/p: the density of the eventual periodic part; finite corrections are
  /// invisible to it.
  Rat natural_density() const;

  UPSet unite(const UPSet& o) const;
  UPSet intersect(const UPSet& o) const;
  UPSet difference(const UPSet& o) const;
  UPSet complement() const;
  bool is_subset_of(const UPSet& o) const;
  bool operator==(const UPSet& o) const = default;

  std::uint64_t threshold() const { return threshold_; }
  std::uint64_t period() const { return period_; }
  const std::vector<bool>& residues() const { return residues_; }
  /// Members below the threshold, sorted.
  const std::vector<std::uint64_t>& prefix() const { return prefix_; }

  /// Members below bound, sorted. Used by brute-force oracles and windows.
  std::vector<std::uint64_t> members_below(std::uint64_t bound) const;
  std::optional<std::uint64_t> min_element() const;

  /// Literal syntax "{r1,r2 mod p | n >= T; +{a,b}; -{c}}"; see parse_upset.
  std::string to_string() const;

 private:
  void canonicalize();
  std::uint64_t threshold_;
  std::uint64_t period_;
  std::vector<bool> residues_;            // size == period_
  std::vector<std::uint64_t> prefix_;     // sorted members < threshold_
};

/// Parses the literal syntax produced by UPSet::to_string. Accepted forms:
///   "{}"                          empty set
///   "{0 mod 1}"                   all of N
///   "{1 mod 2}"                   odds
///   "{0,2 mod 5 | n >= 10; +{3}; -{12}}"  with prefix corrections
std::optional<UPSet> parse_upset(const std::string& text);

}  // namespace invsem
