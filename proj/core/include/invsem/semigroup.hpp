#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invsem/finite_set.hpp"
#include "invsem/partial_bijection.hpp"

namespace invsem {

/// Finite semigroup given by a total multiplication table. Associativity is
/// verified eagerly (up to a size limit) for table input; closure-built
/// semigroups are associative by construction.
class Semigroup {
 public:
  Semigroup() = default;

  /// table[i][j] = index of elements[i]*elements[j].
  static Semigroup from_table(std::vector<std::vector<std::uint32_t>> table,
                              std::vector<std::string> names = {}, bool verify = true);

  std::size_t size() const { return n_; }
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const { return table_[i * n_ + j]; }
  const std::string& name(std::uint32_t i) const { return names_[i]; }
  std::optional<std::uint32_t> unit() const { return unit_; }
  std::optional<std::uint32_t> zero() const { return zero_; }

  /// Adjoins a formal unit unless one is already present.
  Semigroup unitized() const;

  /// {s*t : t in A}
  FiniteSet act(std::uint32_t s, const FiniteSet& a) const;
  /// s^{-1}A = {t : s*t in A}
  FiniteSet preimage(std::uint32_t s, const FiniteSet& a) const;

  bool is_associative(std::string* counterexample = nullptr) const;

 protected:
  void finish_init();
  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::string> names_;
  std::optional<std::uint32_t> unit_;
  std::optional<std::uint32_t> zero_;
};

/// Finite inverse semigroup: the unique generalized inverse of every element
/// is tabulated and the idempotents are checked to commute.
class InverseSemigroup : public Semigroup {
 public:
  InverseSemigroup() = default;

  /// Throws InvalidInput if some element lacks a unique generalized inverse
  /// or idempotents fail to commute.
  static InverseSemigroup from_semigroup(const Semigroup& s);
  static InverseSemigroup from_table(std::vector<std::vector<std::uint32_t>> table,
                                     std::vector<std::string> names = {});

  std::uint32_t star(std::uint32_t i) const { return star_[i]; }
  bool is_idempotent(std::uint32_t i) const { return mul(i, i) == i; }

  /// E(S) = {s* s}.
  std::vector<std::uint32_t> idempotents() const;
  /// e <= f iff ef = e (meet-semilattice order on idempotents).
  bool natural_order(std::uint32_t e, std::uint32_t f) const;
  std::vector<std::uint32_t> minimal_projections() const;
  std::optional<std::uint32_t> has_zero() const { return zero(); }

 private:
  std::vector<std::uint32_t> star_;
};

struct ClosureResult {
  InverseSemigroup semigroup;
  std::vector<PartialBijection> embedding;  // element index -> partial bijection
};

/// Breadth-first closure of partial bijections under composition and
/// inversion, with the identity map adjoined as unit. Throws CapExceeded when
/// the closure grows past cap.
ClosureResult generate_closure(const std::vector<PartialBijection>& generators,
                               std::size_t cap = 50000,
                               const std::vector<std::string>& names = {});

struct LemmaSetsReport {
  bool pass = true;
  std::string first_violation;  // empty when pass
};

/// Checks the set identities
///   (i)   s(s^{-1}A ∩ s*s s^{-1}A) = A ∩ ss*A = s s^{-1}A ⊆ A ⊆ s^{-1}sA
///   (ii)  ss*(A ∩ ss*B) = A ∩ ss*B
///   (iii) s^{-1}(A \ ss*A) = ∅
LemmaSetsReport lemma_sets_check(const InverseSemigroup& s, std::uint32_t elem,
                                 const FiniteSet& a, const FiniteSet& b);

struct GroupImage {
  InverseSemigroup group;
  std::vector<std::uint32_t> quotient_map;  // element index -> class index
};

/// Maximal group homomorphic image S/~ with s ~ t iff es = et for some
/// idempotent e. The result is verified to have a single idempotent.
GroupImage max_group_image(const InverseSemigroup& s);

/// Whether sx = sy always implies xt = yt for some t.
bool klawe_check(const Semigroup& s);

/// e_n = f1 f2 ... fn over the enumerated idempotents; decreasing, and the
/// last term lies below every idempotent.
std::vector<std::uint32_t> eventually_minimal_chain(const InverseSemigroup& s);

std::size_t principal_left_ideal_size(const Semigroup& s, std::uint32_t a);

/// e = s1*s1 ... sk*sk aa* over representatives of Sa = {s1 a, ..., sk a};
/// verified to be a minimal projection commuting with every element.
/// Throws NotMinimal if the verification fails.
std::uint32_t min_projection_from_finite_ideal(const InverseSemigroup& s, std::uint32_t a);

}  // namespace invsem
