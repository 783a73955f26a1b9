#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invsem/matrix.hpp"
#include "invsem/representation.hpp"
#include "invsem/witness.hpp"

namespace invsem {

/// Finite truncation window: a sorted list of universe points; matrices are
/// indexed by position in the window.
struct RoeWindow {
  std::vector<std::uint64_t> points;
  explicit RoeWindow(std::vector<std::uint64_t> pts);
  std::size_t size() const { return points.size(); }
  std::optional<std::size_t> index_of(std::uint64_t p) const;
};

struct VMatrix {
  RationalMatrix matrix;
  std::vector<std::uint64_t> boundary_columns;  // window points whose image left
};

/// 0/1 matrix of the evaluated word on the window; columns whose image leaves
/// the window are zeroed and reported.
VMatrix build_V(const Representation& rep, const Word& w, const RoeWindow& window);
/// Diagonal 0/1 matrix of the set on the window.
RationalMatrix build_P(const XSet& a, const RoeWindow& window);

struct RelationsReport {
  bool pass = true;
  std::size_t interior_size = 0;
  std::vector<std::string> failures;
};

/// Verifies V_s f = (s f) V_s and P_A V_s = V_s P_{s*(A ∩ D_{ss*})} as exact
/// matrix identities on the interior compression (columns and rows unaffected
/// by the window truncation).
RelationsReport check_relations(const Representation& rep, const RoeWindow& window,
                                const std::vector<Word>& words,
                                const std::vector<XSet>& sets);

/// Diagonal compression: E(T) keeps the diagonal of T.
RationalMatrix conditional_expectation(const RationalMatrix& m);

struct TraceColoring {
  Word word;
  std::size_t fixed_points = 0;
  std::array<std::size_t, 3> color_sizes{0, 0, 0};
};

struct TraceSpaceResult {
  /// Matrix-unit coordinates: entry k is tau(E_{pair[k].first, pair[k].second}).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (row, col) window indices
  std::vector<Rat> particular;
  std::vector<std::vector<Rat>> homogeneous;
  std::vector<TraceColoring> colorings;
  std::size_t span_words = 0;

  Rat evaluate(const std::vector<Rat>& coords, const RationalMatrix& m) const;
};

/// Solves tau(ab - ba) = 0 over the monomial span (words up to length L times
/// point projections), tau(1) = 1. Throws BoundaryContamination unless the
/// window is invariant under every sampled word.
TraceSpaceResult trace_functional_space(const Representation& rep, const RoeWindow& window,
                                        std::size_t word_bound);

struct TraceFactorizationReport {
  bool factor_through_diagonal = true;  // tau = tau ∘ E on the span
  bool tracial = true;                  // tau(ab) = tau(ba) on all spanning pairs
  bool positive_particular = true;      // diagonal weights of the particular solution
  std::string first_failure;
};

TraceFactorizationReport trace_factorization_check(const TraceSpaceResult& space);

struct CornerDimension {
  std::size_t rank = 0;
  std::size_t expected = 0;  // |F1| * |F2|
  std::uint32_t class_count = 0;
  bool class_condition_met = false;
};

/// Rank of span{P_{F2} M P_{F1}} over monomials up to length L, with the
/// single-class condition reported (ClassConditionUnmet is a report field,
/// not an exception; the achieved rank is always returned).
CornerDimension corner_dimension(const Representation& rep,
                                 const std::vector<std::uint64_t>& f1,
                                 const std::vector<std::uint64_t>& f2, std::size_t word_bound);

struct HsDefect {
  Rat defect;  // ||V_w P_A P_F - P_F V_w P_A||_2^2 / |F|
  Rat bound;   // (|w(F ∩ D)\F| + |w*(F ∩ D')\F|) / |F|
};

/// Exact squared Hilbert-Schmidt commutator defect of the Folner projection,
/// with the two-sided leak bound; the inequality defect <= bound is checked
/// on every call.
HsDefect folner_projection_defect(const Representation& rep,
                                  const std::vector<std::uint64_t>& f, const Word& w,
                                  const XSet& a);

struct IsometryReport {
  RationalMatrix w1, w2;
  std::vector<std::uint64_t> interior;          // window points with surviving columns
  std::vector<std::uint64_t> boundary_columns;  // truncated columns
  bool isometry_w1 = false;                     // W1*W1 = 1 on the interior
  bool isometry_w2 = false;
  bool ranges_orthogonal = false;               // W1W1* W2W2* = 0
};

/// W1 = sum_i V_{s_i*} P_{s_i A_i}, W2 likewise from the B side. Each side
/// must tile the target (InvalidWitness otherwise); cross-side disjointness is
/// only reported through the orthogonality check, so near-witnesses can be
/// inspected.
IsometryReport isometries_from_paradox(const Representation& rep, const ParadoxWitness& pw,
                                       const RoeWindow& window);

}  // namespace invsem
