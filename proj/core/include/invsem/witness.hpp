#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invsem/leveled_set.hpp"
#include "invsem/representation.hpp"
#include "invsem/word.hpp"

namespace invsem {

struct EquiPiece {
  XSet set;                 // subset of the source at level_from
  std::uint32_t level_from = 0;
  Word word;                // semigroup element moving the piece
  std::uint32_t level_to = 0;
};

/// Piece system certifying source ~ target: the piece sets partition the
/// source, each lies inside the domain of its word, and the piece images
/// partition the target.
struct EquiWitness {
  LeveledSet source;
  LeveledSet target;
  std::vector<EquiPiece> pieces;
};

struct ParadoxPiece {
  XSet set;
  Word word;
};

/// A = s1 A1 ⊔ ... ⊔ sn An = t1 B1 ⊔ ... ⊔ tm Bm with all Ai, Bj pairwise
/// disjoint subsets of A and Ai ⊆ D_{si* si}, Bj ⊆ D_{tj* tj}.
struct ParadoxWitness {
  XSet target;
  std::vector<ParadoxPiece> pieces_a;
  std::vector<ParadoxPiece> pieces_b;
};

struct WitnessReport {
  bool valid = true;
  std::vector<std::string> violations;
};

WitnessReport verify_witness(const Representation& rep, const EquiWitness& w);
WitnessReport verify_witness(const Representation& rep, const ParadoxWitness& w);

/// source ~ source via unit words.
EquiWitness identity_witness(const Representation& rep, const LeveledSet& set);
/// target ~ source with starred words.
EquiWitness reverse_witness(const Representation& rep, const EquiWitness& w);
/// Restriction to a subset of the source; the target shrinks to the image.
EquiWitness restrict_witness(const Representation& rep, const EquiWitness& w,
                             const LeveledSet& subset);
/// Piecewise union of witnesses with disjoint sources and disjoint targets.
EquiWitness union_witness(const Representation& rep, const EquiWitness& a, const EquiWitness& b);
/// Image of a subset of the source under the induced bijection.
LeveledSet witness_image(const Representation& rep, const EquiWitness& w, const LeveledSet& sub);
/// The piece word moving a given source point, with its destination.
struct TracedPoint {
  Word word;
  std::uint32_t level = 0;
  std::uint64_t point = 0;
};
std::optional<TracedPoint> trace_point(const Representation& rep, const EquiWitness& w,
                                       std::uint32_t level, std::uint64_t point);

}  // namespace invsem
