#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "invsem/affine_map.hpp"
#include "invsem/finite_set.hpp"
#include "invsem/partial_bijection.hpp"
#include "invsem/rational.hpp"
#include "invsem/upset.hpp"

namespace invsem {

/// The point universe a representation acts on: a finite set of points or N.
struct Universe {
  static Universe finite(std::size_t n) { return Universe{n, false}; }
  static Universe naturals() { return Universe{0, true}; }
  std::size_t size = 0;  // meaningful only when !is_naturals
  bool is_naturals = false;
  bool operator==(const Universe&) const = default;
};

/// Subset of a Universe: FiniteSet over a finite universe, UPSet over N.
class XSet {
 public:
  XSet() = default;
  XSet(FiniteSet s) : impl_(std::move(s)) {}
  XSet(UPSet s) : impl_(std::move(s)) {}

  static XSet empty(const Universe& u);
  static XSet full(const Universe& u);
  static XSet from_points(const Universe& u, const std::vector<std::uint64_t>& pts);

  Universe universe() const;
  bool contains(std::uint64_t x) const;
  bool empty() const;
  std::optional<std::uint64_t> cardinality() const;
  Rat natural_density() const;

  XSet unite(const XSet& o) const;
  XSet intersect(const XSet& o) const;
  XSet difference(const XSet& o) const;
  XSet complement() const;
  bool is_subset_of(const XSet& o) const;
  bool operator==(const XSet& o) const = default;

  std::vector<std::uint64_t> members_below(std::uint64_t bound) const;
  /// All points for finite sets; throws for infinite UPSets.
  std::vector<std::uint64_t> points() const;

  const FiniteSet& as_finite() const { return std::get<FiniteSet>(impl_); }
  const UPSet& as_upset() const { return std::get<UPSet>(impl_); }
  bool is_upset() const { return std::holds_alternative<UPSet>(impl_); }

  std::string to_string() const;

 private:
  std::variant<FiniteSet, UPSet> impl_;
};

/// Partial bijection of a Universe: PartialBijection or AffinePartialMap.
class XMap {
 public:
  XMap() = default;
  XMap(PartialBijection m) : impl_(std::move(m)) {}
  XMap(AffinePartialMap m) : impl_(std::move(m)) {}

  static XMap identity(const Universe& u);

  Universe universe() const;
  std::optional<std::uint64_t> apply(std::uint64_t x) const;
  XSet domain() const;
  XSet range() const;
  XSet image(const XSet& a) const;
  XSet preimage(const XSet& a) const;
  XMap compose(const XMap& inner) const;
  XMap inverse() const;

  bool operator==(const XMap& o) const = default;

  const PartialBijection& as_partial_bijection() const { return std::get<PartialBijection>(impl_); }
  bool is_affine() const { return std::holds_alternative<AffinePartialMap>(impl_); }
  const AffinePartialMap& as_affine() const { return std::get<AffinePartialMap>(impl_); }

  std::string to_string() const;

 private:
  std::variant<PartialBijection, AffinePartialMap> impl_;
};

/// Parses either a finite point list "{0,1,4}" (finite universe) or an UPSet
/// literal (naturals universe).
std::optional<XSet> parse_xset(const Universe& u, const std::string& text);

}  // namespace invsem
