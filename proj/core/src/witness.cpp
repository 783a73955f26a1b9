#include "invsem/witness.hpp"

#include <algorithm>

#include "invsem/errors.hpp"

namespace invsem {

namespace {

LeveledSet piece_source(const Representation& rep, const EquiPiece& p) {
  return LeveledSet::single(p.set, p.level_from);
}

LeveledSet piece_image(const Representation& rep, const EquiPiece& p) {
  return LeveledSet::single(rep.act(p.word, p.set), p.level_to);
}

}  // namespace

WitnessReport verify_witness(const Representation& rep, const EquiWitness& w) {
  WitnessReport rep_out;
  auto fail = [&](const std::string& v) {
    rep_out.valid = false;
    rep_out.violations.push_back(v);
  };
  LeveledSet src_acc, tgt_acc;
  for (std::size_t i = 0; i < w.pieces.size(); ++i) {
    const auto& p = w.pieces[i];
    if (!p.set.is_subset_of(rep.domain_of(p.word)))
      fail("piece #" + std::to_string(i) + " leaves the domain of its word");
    LeveledSet ps = piece_source(rep, p);
    if (!src_acc.is_disjoint(ps)) fail("piece #" + std::to_string(i) + " overlaps earlier sources");
    src_acc = src_acc.unite(ps);
    LeveledSet pi = piece_image(rep, p);
    if (!tgt_acc.is_disjoint(pi)) fail("piece #" + std::to_string(i) + " image overlaps earlier images");
    tgt_acc = tgt_acc.unite(pi);
  }
  if (!(src_acc == w.source)) fail("piece sources do not partition the source");
  if (!(tgt_acc == w.target)) fail("piece images do not partition the target");
  return rep_out;
}

WitnessReport verify_witness(const Representation& rep, const ParadoxWitness& w) {
  WitnessReport out;
  auto fail = [&](const std::string& v) {
    out.valid = false;
    out.violations.push_back(v);
  };
  const Universe& u = rep.universe();
  XSet pieces_union = XSet::empty(u);
  auto check_side = [&](const std::vector<ParadoxPiece>& side, const std::string& tag) {
    XSet tiled = XSet::empty(u);
    for (std::size_t i = 0; i < side.size(); ++i) {
      const auto& p = side[i];
      if (!p.set.is_subset_of(rep.domain_of(p.word)))
        fail(tag + " piece #" + std::to_string(i) + " leaves the domain of its word");
      if (!p.set.is_subset_of(w.target))
        fail(tag + " piece #" + std::to_string(i) + " is not inside the target set");
      if (!pieces_union.intersect(p.set).empty())
        fail(tag + " piece #" + std::to_string(i) + " overlaps another piece");
      pieces_union = pieces_union.unite(p.set);
      XSet img = rep.act(p.word, p.set);
      if (!tiled.intersect(img).empty())
        fail(tag + " piece #" + std::to_string(i) + " image overlaps the tiling");
      tiled = tiled.unite(img);
    }
    if (!(tiled == w.target)) fail(tag + " images do not tile the target");
  };
  check_side(w.pieces_a, "A");
  check_side(w.pieces_b, "B");
  return out;
}

EquiWitness identity_witness(const Representation& rep, const LeveledSet& set) {
  EquiWitness w;
  w.source = set;
  w.target = set;
  for (const auto& [l, s] : set.levels()) w.pieces.push_back({s, l, Word::unit(), l});
  return w;
}

EquiWitness reverse_witness(const Representation& rep, const EquiWitness& w) {
  EquiWitness out;
  out.source = w.target;
  out.target = w.source;
  for (const auto& p : w.pieces)
    out.pieces.push_back({rep.act(p.word, p.set), p.level_to, p.word.starred(), p.level_from});
  return out;
}

EquiWitness restrict_witness(const Representation& rep, const EquiWitness& w,
                             const LeveledSet& subset) {
  if (!subset.is_subset_of(w.source))
    throw InvalidInput("restriction set is not inside the witness source");
  EquiWitness out;
  out.source = subset;
  LeveledSet tgt;
  for (const auto& p : w.pieces) {
    XSet cut = p.set.intersect(subset.at_level(p.level_from, rep.universe()));
    if (cut.empty()) continue;
    EquiPiece np{cut, p.level_from, p.word, p.level_to};
    tgt = tgt.unite(LeveledSet::single(rep.act(np.word, np.set), np.level_to));
    out.pieces.push_back(std::move(np));
  }
  out.target = tgt;
  return out;
}

EquiWitness union_witness(const Representation& rep, const EquiWitness& a, const EquiWitness& b) {
  if (!a.source.is_disjoint(b.source) || !a.target.is_disjoint(b.target))
    throw InvalidInput("witness union requires disjoint sources and targets");
  EquiWitness out;
  out.source = a.source.unite(b.source);
  out.target = a.target.unite(b.target);
  out.pieces = a.pieces;
  out.pieces.insert(out.pieces.end(), b.pieces.begin(), b.pieces.end());
  return out;
}

LeveledSet witness_image(const Representation& rep, const EquiWitness& w, const LeveledSet& sub) {
  LeveledSet out;
  for (const auto& p : w.pieces) {
    XSet cut = p.set.intersect(sub.at_level(p.level_from, rep.universe()));
    if (cut.empty()) continue;
    out = out.unite(LeveledSet::single(rep.act(p.word, cut), p.level_to));
  }
  return out;
}

std::optional<TracedPoint> trace_point(const Representation& rep, const EquiWitness& w,
                                       std::uint32_t level, std::uint64_t point) {
  for (const auto& p : w.pieces) {
    if (p.level_from != level || !p.set.contains(point)) continue;
    auto y = rep.eval(p.word).apply(point);
    if (!y) return std::nullopt;
    return TracedPoint{p.word, p.level_to, *y};
  }
  return std::nullopt;
}

}  // namespace invsem
