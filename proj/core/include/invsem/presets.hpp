#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invsem/representation.hpp"
#include "invsem/semigroup.hpp"

namespace invsem {

/// A named example: a finite semigroup (with tables), a representation by
/// partial bijections, or the counter-example ring carrier. Every preset
/// self-validates on construction.
struct Preset {
  std::string name;
  std::optional<Semigroup> semigroup;        // present for all tabulated presets
  std::optional<InverseSemigroup> inverse;   // when the semigroup is inverse
  std::optional<Representation> rep;
  std::vector<PartialBijection> embedding;   // element -> partial bijection, when tabulated from maps
  bool ring_preset = false;                  // f2plus_semidirect
};

/// day2, symmetric_inverse_n, brandt5, cyclic_n, bicyclic_on_N, cuntz2_on_N,
/// f2plus_semidirect. Accepts "symmetric_inverse(3)" as well as
/// "symmetric_inverse_3". Throws InvalidInput for unknown names.
Preset load_preset(const std::string& name);

std::vector<std::string> preset_names();

/// All partial injections on n points (the full symmetric inverse monoid).
std::vector<PartialBijection> all_partial_injections(std::size_t n);

}  // namespace invsem
