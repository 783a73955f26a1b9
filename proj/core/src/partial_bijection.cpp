#include "invsem/partial_bijection.hpp"

#include <algorithm>

#include "invsem/errors.hpp"

namespace invsem {

PartialBijection::PartialBijection(std::size_t universe_size,
                                   std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs)
    : n_(universe_size), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    auto [src, tgt] = pairs_[i];
    if (src >= n_ || tgt >= n_)
      throw UniverseMismatch("partial bijection pair outside universe");
    if (i > 0 && pairs_[i - 1].first == src)
      throw InvalidInput("repeated source in partial bijection");
  }
  std::vector<bool> seen(n_, false);
  for (auto [src, tgt] : pairs_) {
    if (seen[tgt]) throw InvalidInput("repeated target in partial bijection");
    seen[tgt] = true;
  }
}

PartialBijection PartialBijection::identity(std::size_t universe_size) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> p;
  for (std::uint64_t i = 0; i < universe_size; ++i) p.emplace_back(i, i);
  return PartialBijection(universe_size, std::move(p));
}

PartialBijection PartialBijection::empty_map(std::size_t universe_size) {
  return PartialBijection(universe_size, {});
}

std::optional<std::uint64_t> PartialBijection::apply(std::uint64_t x) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::make_pair(x, std::uint64_t{0}));
  if (it != pairs_.end() && it->first == x) return it->second;
  return std::nullopt;
}

FiniteSet PartialBijection::domain() const {
  FiniteSet s(n_);
  for (auto [src, tgt] : pairs_) s.insert(src);
  return s;
}

FiniteSet PartialBijection::range() const {
  FiniteSet s(n_);
  for (auto [src, tgt] : pairs_) s.insert(tgt);
  return s;
}

FiniteSet PartialBijection::image(const FiniteSet& a) const {
  FiniteSet s(n_);
  for (auto [src, tgt] : pairs_)
    if (a.contains(src)) s.insert(tgt);
  return s;
}

FiniteSet PartialBijection::preimage(const FiniteSet& a) const {
  FiniteSet s(n_);
  for (auto [src, tgt] : pairs_)
    if (a.contains(tgt)) s.insert(src);
  return s;
}

PartialBijection PartialBijection::compose(const PartialBijection& inner) const {
  if (n_ != inner.n_) throw UniverseMismatch("composing maps over different universes");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> p;
  for (auto [src, mid] : inner.pairs_) {
    if (auto tgt = apply(mid)) p.emplace_back(src, *tgt);
  }
  return PartialBijection(n_, std::move(p));
}

PartialBijection PartialBijection::inverse() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> p;
  for (auto [src, tgt] : pairs_) p.emplace_back(tgt, src);
  return PartialBijection(n_, std::move(p));
}

bool PartialBijection::is_identity() const {
  if (pairs_.size() != n_) return false;
  for (auto [src, tgt] : pairs_)
    if (src != tgt) return false;
  return true;
}

std::string PartialBijection::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(pairs_[i].first) + ">" + std::to_string(pairs_[i].second);
  }
  return s + "]";
}

}  // namespace invsem
