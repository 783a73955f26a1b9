#include "invsem/finite_set.hpp"

#include <algorithm>

#include "invsem/errors.hpp"

namespace invsem {

FiniteSet::FiniteSet(std::size_t universe_size, const std::vector<std::uint64_t>& points)
    : FiniteSet(universe_size) {
  for (auto p : points) insert(p);
}

FiniteSet FiniteSet::full(std::size_t universe_size) {
  FiniteSet s(universe_size);
  s.bits_.assign(universe_size, true);
  return s;
}

void FiniteSet::insert(std::uint64_t x) {
  if (x >= n_) throw UniverseMismatch("point " + std::to_string(x) + " outside universe");
  bits_[x] = true;
}

void FiniteSet::erase(std::uint64_t x) {
  if (x < n_) bits_[x] = false;
}

std::size_t FiniteSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

void FiniteSet::check_same_universe(const FiniteSet& o) const {
  if (n_ != o.n_) throw UniverseMismatch("finite sets over different universes");
}

FiniteSet FiniteSet::unite(const FiniteSet& o) const {
  check_same_universe(o);
  FiniteSet r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.bits_[i] = bits_[i] || o.bits_[i];
  return r;
}

FiniteSet FiniteSet::intersect(const FiniteSet& o) const {
  check_same_universe(o);
  FiniteSet r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.bits_[i] = bits_[i] && o.bits_[i];
  return r;
}

FiniteSet FiniteSet::difference(const FiniteSet& o) const {
  check_same_universe(o);
  FiniteSet r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.bits_[i] = bits_[i] && !o.bits_[i];
  return r;
}

FiniteSet FiniteSet::complement() const {
  FiniteSet r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.bits_[i] = !bits_[i];
  return r;
}

bool FiniteSet::is_subset_of(const FiniteSet& o) const {
  check_same_universe(o);
  for (std::size_t i = 0; i < n_; ++i)
    if (bits_[i] && !o.bits_[i]) return false;
  return true;
}

std::vector<std::uint64_t> FiniteSet::points() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

std::string FiniteSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto p : points()) {
    if (!first) s += ",";
    s += std::to_string(p);
    first = false;
  }
  return s + "}";
}

}  // namespace invsem
