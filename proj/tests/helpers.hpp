#pragma once

#include <cstdint>
#include <vector>

#include "invsem/upset.hpp"

namespace invsem::test {

/// Deterministic xorshift generator so failures reproduce exactly.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  bool coin() { return next() & 1; }
};

inline UPSet random_upset(Rng& rng, std::uint64_t max_period = 12,
                          std::uint64_t max_threshold = 16) {
  std::uint64_t p = 1 + rng.below(max_period);
  std::uint64_t t = rng.below(max_threshold + 1);
  std::vector<bool> residues(p);
  for (std::uint64_t i = 0; i < p; ++i) residues[i] = rng.coin();
  std::vector<std::uint64_t> prefix;
  for (std::uint64_t n = 0; n < t; ++n)
    if (rng.coin()) prefix.push_back(n);
  return UPSet::make(t, p, residues, prefix);
}

}  // namespace invsem::test
