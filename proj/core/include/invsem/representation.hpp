#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invsem/ground.hpp"
#include "invsem/word.hpp"

namespace invsem {

/// Representation by partial bijections: named generator maps over a common
/// universe, with the unit included implicitly. Words in generators and stars
/// evaluate to partial bijections.
class Representation {
 public:
  Representation() = default;
  Representation(Universe universe, std::vector<std::string> gen_names,
                 std::vector<XMap> gen_maps);

  const Universe& universe() const { return universe_; }
  std::size_t generator_count() const { return gen_maps_.size(); }
  const std::vector<std::string>& generator_names() const { return gen_names_; }
  const XMap& generator(std::size_t i) const { return gen_maps_[i]; }

  XMap eval(const Word& w) const;
  /// Domain D_{w*w} of the evaluated map.
  XSet domain_of(const Word& w) const;
  /// act(w, A) = eval(w) image of A ∩ D_{w*w}.
  XSet act(const Word& w, const XSet& a) const;
  /// alpha_{w*}(A ∩ D_{ww*}) = {x in D_{w*w} : wx in A}.
  XSet preimage_act(const Word& w, const XSet& a) const;

  std::string word_string(const Word& w) const { return word_to_string(w, gen_names_); }

  /// All words of length <= max_len (unit included), deduplicated by their
  /// evaluated map; deterministic order.
  std::vector<Word> words_up_to(std::size_t max_len) const;

  /// Single partial-map application steps from x: each generator and each
  /// generator star. Used for reachability searches.
  std::vector<std::uint64_t> step_targets(std::uint64_t x) const;

 private:
  Universe universe_;
  std::vector<std::string> gen_names_;
  std::vector<XMap> gen_maps_;
};

struct ApproxClasses {
  /// class id per window point (same order as the window argument).
  std::vector<std::uint32_t> class_of;
  std::uint32_t class_count = 0;
  std::size_t word_bound = 0;
};

/// Partition of the window under the bounded reachability relation: u, v end
/// in one class when some chain of window points links them through words of
/// length <= word_bound each. The partition refines the true orbit relation;
/// growing the bound can only merge classes.
ApproxClasses approx_classes(const Representation& rep,
                             const std::vector<std::uint64_t>& window, std::size_t word_bound);

}  // namespace invsem
