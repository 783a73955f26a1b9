#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invsem/measure.hpp"
#include "invsem/representation.hpp"
#include "invsem/semigroup.hpp"
#include "invsem/simplex.hpp"
#include "invsem/word.hpp"

namespace invsem {

/// Existence of mu >= 0, total 1, with mu(s^{-1}{x}) = mu({x}) for all s, x.
/// Finite additivity over disjoint fibers lifts the singleton constraints to
/// all subsets; check_measure_properties re-verifies that reduction on small
/// semigroups.
FeasibilityResult day_invariance_feasible(const Semigroup& s);

/// Existence of a probability measure satisfying localization
/// mu(A) = mu(A ∩ s*sA) and domain measurability mu(s*sA) = mu(sA), reduced
/// to atoms: ex != x forces mu(x) = 0, and mu(s*s x) = mu(s x).
FeasibilityResult measure_conditions_feasible(const Semigroup& s,
                                              const std::vector<std::uint32_t>& star);
FeasibilityResult measure_conditions_feasible(const InverseSemigroup& s);

/// Closure of the generator maps of a finite-universe representation under
/// composition and inversion, unit included. Throws ClosureRequired when the
/// universe is N (the closure need not be finite) or when cap is hit.
std::vector<XMap> rep_closure_maps(const Representation& rep, std::size_t cap = 50000);

/// mu(sx) = mu(x) on domains, over a finite universe.
FeasibilityResult domain_measure_feasible(const Representation& rep,
                                          const std::vector<XMap>& elements);
/// mu supported inside every domain: x outside D_{s*s} forces mu(x) = 0.
FeasibilityResult localization_feasible(const Representation& rep,
                                        const std::vector<XMap>& elements);
/// Conjunction of both constraint families.
FeasibilityResult amenable_feasible(const Representation& rep,
                                    const std::vector<XMap>& elements);

struct MeasurePropertiesReport {
  bool day_invariance = true;
  bool localization = true;          // (2.a)
  bool domain_measurability = true;  // (2.b)
  bool corollary = true;             // mu(A) = mu(s(A ∩ s*sA))
  bool exhaustive = false;           // all subsets checked (|S| <= 16)
  std::string first_violation;
};

/// Evaluates the three measure conditions on all subsets when |S| <= 16,
/// otherwise on seeded random subsets.
MeasurePropertiesReport check_measure_properties(const RationalMeasure& mu, const Semigroup& s,
                                                 const std::vector<std::uint32_t>& star,
                                                 std::size_t sample_count = 4096);

/// Witnessed relation inside a set fragment.
struct FragmentRelation {
  enum class Kind { DisjointUnion, ActionEquality };
  Kind kind = Kind::DisjointUnion;
  // DisjointUnion: whole = part_a ⊔ part_b (verified exactly).
  // ActionEquality: image = act(word, source) with source ⊆ D_{w*w}.
  std::size_t whole = 0, part_a = 0, part_b = 0;  // fragment indices
  std::size_t source = 0, image = 0;
  Word word;
};

/// Existence of nu >= 0 on the fragment, normalized to 1 on the full set,
/// additive across witnessed disjoint unions and equal across witnessed
/// actions. Relations are re-verified against the set algebra first; a
/// failure throws InvalidWitness.
FeasibilityResult fragment_feasibility(const Representation& rep,
                                       const std::vector<XSet>& fragment,
                                       const std::vector<FragmentRelation>& relations);

/// Exact check that an assignment satisfies every fragment constraint.
bool fragment_assignment_satisfies(const Representation& rep, const std::vector<XSet>& fragment,
                                   const std::vector<FragmentRelation>& relations,
                                   const std::vector<Rat>& values, std::string* first_violation = nullptr);

struct FolnerDefect {
  Word word;
  std::uint64_t leak = 0;
  std::uint64_t size = 0;
  Rat defect() const { return size == 0 ? Rat(0) : Rat(Int(leak), Int(size)); }
};

struct FolnerCertificate {
  std::vector<std::uint64_t> set;
  Rat eps;
  bool strict = false;
  std::vector<FolnerDefect> defects;
};

struct FolnerSearchOptions {
  bool exhaustive = false;      // enumerate all subsets by (size, lex)
  std::size_t max_size = 0;     // exhaustive mode: largest subset size
  bool strict = false;          // defect < eps instead of <=
  bool amenable_mode = false;   // require F ⊆ D_{s*s} for every tested s
};

struct FolnerOutcome {
  std::optional<FolnerCertificate> certificate;
  std::string exhausted_description;  // set when no certificate was found
};

/// Searches the window for an (eps, gens)-domain-Folner set. Default strategy
/// sweeps window prefixes of doubling size; the exhaustive flag enumerates all
/// subsets up to max_size in (size, lexicographic) order. Deterministic.
FolnerOutcome folner_search(const Representation& rep, const Rat& eps,
                            const std::vector<Word>& gens,
                            const std::vector<std::uint64_t>& window,
                            const FolnerSearchOptions& options = {});

/// Recomputes the defects of a claimed certificate.
std::vector<FolnerDefect> folner_defects(const Representation& rep,
                                         const std::vector<Word>& gens,
                                         const std::vector<std::uint64_t>& set);

/// Splits F into orbit components (single-generator steps staying inside F)
/// and returns the first component that is itself (eps, gens)-domain-Folner.
/// Requires sum of defect counts < eps * |F|; throws PigeonholeFailed if no
/// component qualifies.
FolnerCertificate transitive_refine(const Representation& rep, const FolnerCertificate& cert,
                                    const std::vector<Word>& gens, std::size_t word_bound = 8);

struct NamiokaResult {
  std::vector<std::uint64_t> set;
  std::vector<FolnerDefect> defects;
  std::size_t level_index = 0;   // which level set was extracted
  std::size_t level_count = 0;
};

/// Folner extraction from an almost-invariant density h: level-set
/// decomposition, per-generator index sets, and a nonempty intersection.
/// Requires ||s*h - s*s h||_1 < eps/|gens| for every s in the symmetric
/// generator list; violations throw PreconditionViolated.
NamiokaResult namioka_extract(const Representation& rep,
                              const std::map<std::uint64_t, Rat>& h, const Rat& eps,
                              const std::vector<Word>& gens);

/// Exact ratios |B ∩ F_n| / |F_n|, no limit claim.
std::vector<Rat> empirical_density_report(const XSet& b,
                                          const std::vector<std::vector<std::uint64_t>>& f_seq);

}  // namespace invsem
