#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invsem/decide.hpp"
#include "invsem/witness.hpp"

namespace invsem {

/// w1: A ~ B composed with w2: B ~ C. Pieces are the double intersections
/// with concatenated words; both inputs are verified first.
EquiWitness compose_witnesses(const Representation& rep, const EquiWitness& w1,
                              const EquiWitness& w2);

/// Constructive Schroeder-Bernstein. w1: a ⊔ a0 ~ b and w2: b ⊔ b0 ~ a with
/// a = w1.source minus a0 etc.; a and b are passed explicitly. The chain
/// C0 = a0, C_{n+1} = psi(phi(C_n)) is iterated until it stabilizes; on
/// symbolic universes a cap guards non-stabilizing chains
/// (IterationCapExceeded).
EquiWitness schroeder_bernstein(const Representation& rep, const EquiWitness& w1,
                                const EquiWitness& w2, const LeveledSet& a, const LeveledSet& b,
                                std::size_t iteration_cap = 64);

/// Input for cancellation of n[A] = n[B]: disjoint copies with witnesses
/// A ~ A_i, B ~ B_j, and chi : ⊔A_i ~ ⊔B_j.
struct KoenigInstance {
  LeveledSet a, b;
  std::vector<LeveledSet> copies_a, copies_b;
  std::vector<EquiWitness> wit_a, wit_b;  // wit_a[i] : a ~ copies_a[i]
  EquiWitness chi;
};

/// Perfect-matching cancellation: builds the n-regular bipartite class
/// multigraph, finds a perfect matching by augmenting paths, and emits a
/// verified witness A ~ B. Finite universes only.
EquiWitness koenig_cancel(const Representation& rep, const KoenigInstance& inst);

/// From w: (n+1)[A] <= n[A]  (an equidecomposition of the n+1 leveled copies
/// of A onto a subset of the n copies) produces a verified witness
/// A ~ A ⊔ A', i.e. [A] = 2[A].
EquiWitness absorb(const Representation& rep, std::size_t n, const EquiWitness& w,
                   const XSet& a, std::size_t iteration_cap = 64);

/// Converts a witness A ~ (A at level 0) ⊔ (A at level 1) into the paradox
/// piece form of the definition; output verifies.
ParadoxWitness to_paradox(const Representation& rep, const EquiWitness& w, const XSet& a);

struct ParadoxSearchBounds {
  std::size_t word_len = 2;
  std::uint64_t period = 2;   // canonical period bound for candidate sets
  std::size_t pieces = 2;     // total piece count n + m
};

struct ParadoxSearchOutcome {
  std::optional<ParadoxWitness> witness;
  std::string exhausted_description;
};

/// Deterministic enumeration of candidate piece systems within the bounds;
/// the first verified witness wins. Finite universes return Exhausted by the
/// cardinality obstruction without enumerating.
ParadoxSearchOutcome paradox_search(const Representation& rep, const ParadoxSearchBounds& bounds);

struct InducedFragment {
  std::vector<XSet> sets;
  std::vector<FragmentRelation> relations;
};

/// The fragment and witnessed relations a paradox witness generates; feeding
/// it to fragment_feasibility yields Infeasible for any valid witness.
InducedFragment induced_fragment(const Representation& rep, const ParadoxWitness& w);

}  // namespace invsem
