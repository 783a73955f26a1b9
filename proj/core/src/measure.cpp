#include "invsem/measure.hpp"

namespace invsem {

RationalMeasure RationalMeasure::atomic(std::vector<Rat> values) {
  RationalMeasure m;
  m.mode = Mode::Atomic;
  m.atoms = std::move(values);
  m.mass = m.total();
  return m;
}

RationalMeasure RationalMeasure::uniform(std::size_t n) {
  std::vector<Rat> v(n, n == 0 ? Rat(0) : Rat(Int(1), Int(n)));
  return atomic(std::move(v));
}

RationalMeasure RationalMeasure::point_mass(std::size_t n, std::size_t at) {
  std::vector<Rat> v(n, Rat(0));
  v.at(at) = 1;
  return atomic(std::move(v));
}

RationalMeasure RationalMeasure::on_fragment(std::vector<std::pair<XSet, Rat>> values) {
  RationalMeasure m;
  m.mode = Mode::Fragment;
  m.fragment = std::move(values);
  Rat mass = 0;
  m.mass = 1;
  return m;
}

Rat RationalMeasure::of(const FiniteSet& a) const {
  Rat acc = 0;
  for (auto p : a.points()) acc += atoms.at(p);
  return acc;
}

bool RationalMeasure::nonnegative() const {
  if (mode == Mode::Atomic) {
    for (const auto& v : atoms)
      if (v < 0) return false;
    return true;
  }
  for (const auto& [s, v] : fragment)
    if (v < 0) return false;
  return true;
}

Rat RationalMeasure::total() const {
  Rat acc = 0;
  for (const auto& v : atoms) acc += v;
  return acc;
}

}  // namespace invsem
