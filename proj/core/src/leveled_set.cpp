#include "invsem/leveled_set.hpp"

#include <algorithm>

#include "invsem/errors.hpp"

namespace invsem {

LeveledSet::LeveledSet(std::vector<std::pair<std::uint32_t, XSet>> levels)
    : levels_(std::move(levels)) {
  std::sort(levels_.begin(), levels_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < levels_.size(); ++i)
    if (levels_[i].first == levels_[i - 1].first)
      throw InvalidInput("leveled set has a repeated level");
  std::erase_if(levels_, [](const auto& l) { return l.second.empty(); });
}

LeveledSet LeveledSet::single(XSet set, std::uint32_t level) {
  return LeveledSet({{level, std::move(set)}});
}

XSet LeveledSet::at_level(std::uint32_t level, const Universe& u) const {
  for (const auto& [l, s] : levels_)
    if (l == level) return s;
  return XSet::empty(u);
}

bool LeveledSet::has_level(std::uint32_t level) const {
  return std::any_of(levels_.begin(), levels_.end(),
                     [&](const auto& l) { return l.first == level; });
}

std::uint32_t LeveledSet::max_level() const {
  return levels_.empty() ? 0 : levels_.back().first;
}

LeveledSet LeveledSet::unite(const LeveledSet& o) const {
  std::vector<std::pair<std::uint32_t, XSet>> out;
  std::size_t i = 0, j = 0;
  while (i < levels_.size() || j < o.levels_.size()) {
    if (j == o.levels_.size() || (i < levels_.size() && levels_[i].first < o.levels_[j].first)) {
      out.push_back(levels_[i++]);
    } else if (i == levels_.size() || o.levels_[j].first < levels_[i].first) {
      out.push_back(o.levels_[j++]);
    } else {
      out.emplace_back(levels_[i].first, levels_[i].second.unite(o.levels_[j].second));
      ++i;
      ++j;
    }
  }
  return LeveledSet(std::move(out));
}

LeveledSet LeveledSet::intersect(const LeveledSet& o) const {
  std::vector<std::pair<std::uint32_t, XSet>> out;
  for (const auto& [l, s] : levels_)
    for (const auto& [lo, so] : o.levels_)
      if (l == lo) out.emplace_back(l, s.intersect(so));
  return LeveledSet(std::move(out));
}

LeveledSet LeveledSet::difference(const LeveledSet& o) const {
  std::vector<std::pair<std::uint32_t, XSet>> out;
  for (const auto& [l, s] : levels_) {
    XSet d = s;
    for (const auto& [lo, so] : o.levels_)
      if (l == lo) d = d.difference(so);
    out.emplace_back(l, d);
  }
  return LeveledSet(std::move(out));
}

bool LeveledSet::is_disjoint(const LeveledSet& o) const { return intersect(o).empty(); }

bool LeveledSet::is_subset_of(const LeveledSet& o) const { return difference(o).empty(); }

LeveledSet LeveledSet::shifted(std::uint32_t level_shift) const {
  std::vector<std::pair<std::uint32_t, XSet>> out;
  for (const auto& [l, s] : levels_) out.emplace_back(l + level_shift, s);
  return LeveledSet(std::move(out));
}

std::optional<std::uint64_t> LeveledSet::cardinality() const {
  std::uint64_t total = 0;
  for (const auto& [l, s] : levels_) {
    auto c = s.cardinality();
    if (!c) return std::nullopt;
    total += *c;
  }
  return total;
}

std::string LeveledSet::to_string() const {
  if (levels_.empty()) return "(empty)";
  std::string out;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (i) out += " ⊔ ";
    out += levels_[i].second.to_string() + "@" + std::to_string(levels_[i].first);
  }
  return out;
}

LeveledSet add_witnessed(const LeveledSet& a, const LeveledSet& b) {
  if (b.empty()) return a;
  if (a.empty()) return b;
  std::uint32_t shift = a.max_level() + 1;
  std::uint32_t b_min = b.levels().front().first;
  return a.unite(b.shifted(shift > b_min ? shift - b_min : 0));
}

}  // namespace invsem
