#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace invsem {

/// Subset of {0, ..., universe_size-1} stored as a bit vector.
class FiniteSet {
 public:
  FiniteSet() = default;
  explicit FiniteSet(std::size_t universe_size) : n_(universe_size), bits_(universe_size, false) {}
  FiniteSet(std::size_t universe_size, const std::vector<std::uint64_t>& points);

  static FiniteSet full(std::size_t universe_size);

  std::size_t universe_size() const { return n_; }
  bool contains(std::uint64_t x) const { return x < n_ && bits_[x]; }
  void insert(std::uint64_t x);
  void erase(std::uint64_t x);
  std::size_t count() const;
  bool empty() const { return count() == 0; }

  FiniteSet unite(const FiniteSet& o) const;
  FiniteSet intersect(const FiniteSet& o) const;
  FiniteSet difference(const FiniteSet& o) const;
  FiniteSet complement() const;
  bool is_subset_of(const FiniteSet& o) const;
  bool operator==(const FiniteSet& o) const = default;

  std::vector<std::uint64_t> points() const;
  std::string to_string() const;

 private:
  void check_same_universe(const FiniteSet& o) const;
  std::size_t n_ = 0;
  std::vector<bool> bits_;
};

}  // namespace invsem
