#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "invsem/rational.hpp"
#include "invsem/semigroup.hpp"

namespace invsem {

/// Element (n, w) of the counter-example semigroup: a natural paired with a
/// nonempty word over {a, b}. Words act on naturals by truncated decrements,
/// one per letter, which gives the associative product
///   (n, u) (m, v) = (max(n, m - |u| clamped at 0), u v).
struct CounterElem {
  std::uint64_t shift = 0;
  std::string word;  // nonempty, letters 'a'/'b'
  auto operator<=>(const CounterElem&) const = default;
};

CounterElem counter_mul(const CounterElem& x, const CounterElem& y);
/// All (n, w) with n <= max_shift and 1 <= |w| <= max_len, deterministic order.
std::vector<CounterElem> counter_ball(std::uint64_t max_shift, std::size_t max_len);

/// Basis key of a semigroup ring term: an element index for tabulated
/// semigroups, or a counter-example pair.
using TermKey = std::variant<std::uint32_t, CounterElem>;

/// Finitely supported rational combination of semigroup elements. Terms are
/// kept sorted with nonzero coefficients.
class RingElement {
 public:
  RingElement() = default;
  static RingElement basis(TermKey k) { return RingElement({{std::move(k), Rat(1)}}); }
  explicit RingElement(std::map<TermKey, Rat> terms);

  const std::map<TermKey, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RingElement add(const RingElement& o) const;
  RingElement scale(const Rat& c) const;

  bool operator==(const RingElement&) const = default;

 private:
  std::map<TermKey, Rat> terms_;
};

/// Multiplication context: either a finite multiplication table or the
/// counter-example preset rule.
class SemigroupRing {
 public:
  explicit SemigroupRing(const Semigroup* table) : table_(table) {}
  static SemigroupRing counter_preset() { return SemigroupRing(nullptr); }

  bool is_preset() const { return table_ == nullptr; }
  RingElement mul(const RingElement& x, const RingElement& y) const;

 private:
  TermKey mul_keys(const TermKey& a, const TermKey& b) const;
  const Semigroup* table_;
};

struct AnnihilatorReport {
  bool all_zero = true;
  std::uint64_t checked = 0;
  std::string first_failure;
};

/// Verifies (n, w) * ((0,a) - (1,a)) = 0 over the ball n <= max_shift,
/// |w| <= max_len, exactly.
AnnihilatorReport annihilator_check(std::uint64_t max_shift, std::size_t max_len);

/// Finite-dimensional subspace of the ring in reduced echelon form over the
/// union support of its generators.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(const std::vector<RingElement>& gens);
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<RingElement>& basis() const { return basis_; }

 private:
  std::vector<RingElement> basis_;
};

/// dim(aW + W) / dim(W) as an exact rational; ZeroSubspace when dim W = 0.
Rat folner_subspace_defect(const SemigroupRing& ring, const Subspace& w, const RingElement& a);

/// The span of the indicator elements of F.
Subspace folner_to_subspace(const Semigroup& s, const std::vector<std::uint32_t>& f);

std::string term_key_to_string(const TermKey& k, const Semigroup* table);
std::string ring_element_to_string(const RingElement& e, const Semigroup* table);

}  // namespace invsem
