#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invsem/finite_set.hpp"

namespace invsem {

/// Injective partial map on {0, ..., universe_size-1}, stored as the sorted
/// list of (source, target) pairs. The sorted graph is the canonical form, so
/// equality and ordering are exact.
class PartialBijection {
 public:
  PartialBijection() = default;
  PartialBijection(std::size_t universe_size, std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs);

  static PartialBijection identity(std::size_t universe_size);
  static PartialBijection empty_map(std::size_t universe_size);

  std::size_t universe_size() const { return n_; }
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs() const { return pairs_; }

  std::optional<std::uint64_t> apply(std::uint64_t x) const;
  FiniteSet domain() const;
  FiniteSet range() const;
  FiniteSet image(const FiniteSet& a) const;
  FiniteSet preimage(const FiniteSet& a) const;

  /// this after inner.
  PartialBijection compose(const PartialBijection& inner) const;
  PartialBijection inverse() const;
  bool is_identity() const;

  bool operator==(const PartialBijection& o) const = default;
  auto operator<=>(const PartialBijection& o) const = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs_;
};

}  // namespace invsem
