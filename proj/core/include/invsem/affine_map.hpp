#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "invsem/upset.hpp"

namespace invsem {

/// Injective partial map on N of the form n -> (a*n + b)/c restricted to an
/// ultimately periodic domain on which the division is exact. Images and
/// preimages of UPSets are again UPSets.
class AffinePartialMap {
 public:
  /// Validates the specification: negative images are clipped out of the
  /// domain, and NonIntegralComposition is thrown if some domain point has
  /// c not dividing a*n+b.
  AffinePartialMap(std::int64_t a, std::int64_t b, std::int64_t c, UPSet domain);

  AffinePartialMap() : AffinePartialMap(1, 0, 1, UPSet::empty_set()) {}

  static AffinePartialMap identity() { return AffinePartialMap(1, 0, 1, UPSet::naturals()); }

  std::int64_t slope_num() const { return a_; }
  std::int64_t offset() const { return b_; }
  std::int64_t slope_den() const { return c_; }
  const UPSet& domain() const { return domain_; }
  UPSet range() const;

  std::optional<std::uint64_t> apply(std::uint64_t n) const;
  UPSet image(const UPSet& set) const;
  UPSet preimage(const UPSet& set) const;

  /// this after inner: n -> this(inner(n)) on the exact composable domain.
  AffinePartialMap compose(const AffinePartialMap& inner) const;
  AffinePartialMap inverse() const;

  bool operator==(const AffinePartialMap& o) const = default;

  /// "(a*n+b)/c on <upset>"
  std::string to_string() const;

 private:
  std::int64_t a_, b_, c_;
  UPSet domain_;
};

std::optional<AffinePartialMap> parse_affine_map(const std::string& text);

}  // namespace invsem
