#include "invsem/ground.hpp"

#include "invsem/errors.hpp"

namespace invsem {

XSet XSet::empty(const Universe& u) {
  if (u.is_naturals) return XSet(UPSet::empty_set());
  return XSet(FiniteSet(u.size));
}

XSet XSet::full(const Universe& u) {
  if (u.is_naturals) return XSet(UPSet::naturals());
  return XSet(FiniteSet::full(u.size));
}

XSet XSet::from_points(const Universe& u, const std::vector<std::uint64_t>& pts) {
  if (u.is_naturals) return XSet(UPSet::from_points(pts));
  return XSet(FiniteSet(u.size, pts));
}

Universe XSet::universe() const {
  if (is_upset()) return Universe::naturals();
  return Universe::finite(as_finite().universe_size());
}

bool XSet::contains(std::uint64_t x) const {
  return std::visit([&](const auto& s) { return s.contains(x); }, impl_);
}

bool XSet::empty() const {
  return std::visit([](const auto& s) { return s.empty(); }, impl_);
}

std::optional<std::uint64_t> XSet::cardinality() const {
  if (is_upset()) return as_upset().cardinality();
  return as_finite().count();
}

Rat XSet::natural_density() const {
  if (is_upset()) return as_upset().natural_density();
  // Finite universe: normalized counting measure.
  if (as_finite().universe_size() == 0) return Rat(0);
  return Rat(Int(as_finite().count()), Int(as_finite().universe_size()));
}

#define INVSEM_XSET_BINOP(name)                                                     \
  XSet XSet::name(const XSet& o) const {                                            \
    if (impl_.index() != o.impl_.index()) throw UniverseMismatch("mixed set kinds"); \
    if (is_upset()) return XSet(as_upset().name(o.as_upset()));                     \
    return XSet(as_finite().name(o.as_finite()));                                   \
  }

INVSEM_XSET_BINOP(unite)
INVSEM_XSET_BINOP(intersect)
INVSEM_XSET_BINOP(difference)
#undef INVSEM_XSET_BINOP

XSet XSet::complement() const {
  return std::visit([](const auto& s) { return XSet(s.complement()); }, impl_);
}

bool XSet::is_subset_of(const XSet& o) const {
  if (impl_.index() != o.impl_.index()) throw UniverseMismatch("mixed set kinds");
  if (is_upset()) return as_upset().is_subset_of(o.as_upset());
  return as_finite().is_subset_of(o.as_finite());
}

std::vector<std::uint64_t> XSet::members_below(std::uint64_t bound) const {
  if (is_upset()) return as_upset().members_below(bound);
  std::vector<std::uint64_t> out;
  for (auto p : as_finite().points())
    if (p < bound) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> XSet::points() const {
  if (!is_upset()) return as_finite().points();
  if (!as_upset().cardinality().has_value())
    throw InvsemError("cannot enumerate an infinite set");
  return as_upset().members_below(as_upset().threshold());
}

std::string XSet::to_string() const {
  return std::visit([](const auto& s) { return s.to_string(); }, impl_);
}

XMap XMap::identity(const Universe& u) {
  if (u.is_naturals) return XMap(AffinePartialMap::identity());
  return XMap(PartialBijection::identity(u.size));
}

Universe XMap::universe() const {
  if (is_affine()) return Universe::naturals();
  return Universe::finite(as_partial_bijection().universe_size());
}

std::optional<std::uint64_t> XMap::apply(std::uint64_t x) const {
  return std::visit([&](const auto& m) { return m.apply(x); }, impl_);
}

XSet XMap::domain() const {
  return std::visit([](const auto& m) { return XSet(m.domain()); }, impl_);
}

XSet XMap::range() const {
  return std::visit([](const auto& m) { return XSet(m.range()); }, impl_);
}

XSet XMap::image(const XSet& a) const {
  if (is_affine()) return XSet(as_affine().image(a.as_upset()));
  return XSet(as_partial_bijection().image(a.as_finite()));
}

XSet XMap::preimage(const XSet& a) const {
  if (is_affine()) return XSet(as_affine().preimage(a.as_upset()));
  return XSet(as_partial_bijection().preimage(a.as_finite()));
}

XMap XMap::compose(const XMap& inner) const {
  if (impl_.index() != inner.impl_.index()) throw UniverseMismatch("mixed map kinds");
  if (is_affine()) return XMap(as_affine().compose(inner.as_affine()));
  return XMap(as_partial_bijection().compose(inner.as_partial_bijection()));
}

XMap XMap::inverse() const {
  return std::visit([](const auto& m) { return XMap(m.inverse()); }, impl_);
}

std::string XMap::to_string() const {
  return std::visit([](const auto& m) { return m.to_string(); }, impl_);
}

std::optional<XSet> parse_xset(const Universe& u, const std::string& text) {
  auto up = parse_upset(text);
  if (!up) return std::nullopt;
  if (u.is_naturals) return XSet(*up);
  auto card = up->cardinality();
  if (!card) return std::nullopt;
  try {
    return XSet::from_points(u, up->members_below(up->threshold()));
  } catch (const InvsemError&) {
    return std::nullopt;
  }
}

}  // namespace invsem
