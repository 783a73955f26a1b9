#include "invsem/typesem.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "invsem/errors.hpp"

namespace invsem {

EquiWitness compose_witnesses(const Representation& rep, const EquiWitness& w1,
                              const EquiWitness& w2) {
  auto r1 = verify_witness(rep, w1);
  if (!r1.valid) throw InvalidInput("left witness fails verification: " + r1.violations.front());
  auto r2 = verify_witness(rep, w2);
  if (!r2.valid) throw InvalidInput("right witness fails verification: " + r2.violations.front());
  if (!(w1.target == w2.source))
    throw InvalidInput("witness composition needs matching middle term");

  EquiWitness out;
  out.source = w1.source;
  out.target = w2.target;
  for (const auto& p : w1.pieces) {
    XSet mid = rep.act(p.word, p.set);
    for (const auto& q : w2.pieces) {
      if (q.level_from != p.level_to) continue;
      XSet overlap = mid.intersect(q.set);
      if (overlap.empty()) continue;
      // Pull the overlap back through p: A_ij = alpha_{s_i}^{-1}(s_i A_i ∩ B_j),
      // moved by the product q.word * p.word (p applies first).
      XSet back = rep.preimage_act(p.word, overlap);
      out.pieces.push_back({back, p.level_from, q.word.concat(p.word), q.level_to});
    }
  }
  auto check = verify_witness(rep, out);
  if (!check.valid)
    throw InvsemError("composed witness fails verification: " + check.violations.front());
  return out;
}

EquiWitness schroeder_bernstein(const Representation& rep, const EquiWitness& w1,
                                const EquiWitness& w2, const LeveledSet& a, const LeveledSet& b,
                                std::size_t iteration_cap) {
  auto r1 = verify_witness(rep, w1);
  if (!r1.valid) throw InvalidInput("w1 fails verification: " + r1.violations.front());
  auto r2 = verify_witness(rep, w2);
  if (!r2.valid) throw InvalidInput("w2 fails verification: " + r2.violations.front());
  if (!a.is_subset_of(w1.source) || !(w1.target == b))
    throw InvalidInput("w1 must witness a ⊔ a0 ~ b");
  if (!b.is_subset_of(w2.source) || !(w2.target == a))
    throw InvalidInput("w2 must witness b ⊔ b0 ~ a");

  LeveledSet a0 = w1.source.difference(a);
  LeveledSet b0 = w2.source.difference(b);
  if (a0.empty()) {
    // w1 already witnesses a ~ b.
    return w1;
  }
  if (b0.empty()) {
    return reverse_witness(rep, w2);
  }

  // C0 = a0, C_{n+1} = psi(phi(C_n)), C = union.
  LeveledSet c = a0;
  LeveledSet frontier = a0;
  for (std::size_t it = 0;; ++it) {
    if (it >= iteration_cap)
      throw IterationCapExceeded("chain did not stabilize within " +
                                 std::to_string(iteration_cap) + " iterations; |C| so far " +
                                 (c.cardinality() ? std::to_string(*c.cardinality()) : "inf"));
    LeveledSet next = witness_image(rep, w2, witness_image(rep, w1, frontier));
    LeveledSet fresh = next.difference(c);
    if (fresh.empty()) break;
    c = c.unite(fresh);
    frontier = fresh;
  }

  // theta : a ⊔ a0 ~ b ⊔ b0 as phi on C and psi^{-1} off C.
  EquiWitness theta = union_witness(rep, restrict_witness(rep, w1, c),
                                    restrict_witness(rep, reverse_witness(rep, w2),
                                                     w1.source.difference(c)));
  if (!(theta.source == w1.source) || !(theta.target == w2.source))
    throw InvsemError("Schroeder-Bernstein bijection has wrong endpoints");

  // a ~(rev w2) b ⊔ b0 ~(rev theta) a ⊔ a0 ~(w1) b
  EquiWitness left = restrict_witness(rep, reverse_witness(rep, w2), a);
  // rev w2 restricted to a is exactly b ⊔ b0 ~ a reversed: a ~ b ⊔ b0.
  EquiWitness result =
      compose_witnesses(rep, compose_witnesses(rep, left, reverse_witness(rep, theta)), w1);
  if (!(result.source == a) || !(result.target == b))
    throw InvsemError("Schroeder-Bernstein output has wrong endpoints");
  return result;
}

namespace {

struct LeveledPoint {
  std::uint32_t level;
  std::uint64_t point;
  auto operator<=>(const LeveledPoint&) const = default;
};

std::vector<LeveledPoint> leveled_points(const LeveledSet& s) {
  std::vector<LeveledPoint> out;
  for (const auto& [l, set] : s.levels())
    for (auto p : set.points()) out.push_back({l, p});
  return out;
}

struct Trace {
  Word word;
  LeveledPoint at;
};

Trace trace_through(const Representation& rep, const EquiWitness& w, LeveledPoint x) {
  auto t = trace_point(rep, w, x.level, x.point);
  if (!t) throw InvsemError("point escapes the witness piece system");
  return {t->word, {t->level, t->point}};
}

}  // namespace

EquiWitness koenig_cancel(const Representation& rep, const KoenigInstance& inst) {
  std::size_t n = inst.copies_a.size();
  if (n == 0 || inst.copies_b.size() != n)
    throw NotRegular("need the same positive number of copies on both sides");
  if (inst.wit_a.size() != n || inst.wit_b.size() != n)
    throw InvalidInput("one witness per copy required");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!inst.copies_a[i].is_disjoint(inst.copies_a[j]) ||
          !inst.copies_b[i].is_disjoint(inst.copies_b[j]))
        throw InvalidInput("copies must be pairwise disjoint");
    }
    if (!(inst.wit_a[i].source == inst.a) || !(inst.wit_a[i].target == inst.copies_a[i]))
      throw InvalidInput("wit_a[" + std::to_string(i) + "] has wrong endpoints");
    if (!(inst.wit_b[i].source == inst.b) || !(inst.wit_b[i].target == inst.copies_b[i]))
      throw InvalidInput("wit_b[" + std::to_string(i) + "] has wrong endpoints");
  }

  LeveledSet all_a, all_b;
  for (const auto& c : inst.copies_a) all_a = all_a.unite(c);
  for (const auto& c : inst.copies_b) all_b = all_b.unite(c);
  if (!(inst.chi.source == all_a) || !(inst.chi.target == all_b))
    throw InvalidInput("chi must map the A copies onto the B copies");

  if (n == 1) {
    EquiWitness mid = compose_witnesses(rep, inst.wit_a[0], inst.chi);
    return compose_witnesses(rep, mid, reverse_witness(rep, inst.wit_b[0]));
  }
  if (rep.universe().is_naturals)
    throw InvalidInput("cancellation with n >= 2 needs a finite universe");

  // phi_j : A_1 -> A_j and psi_k : B_1 -> B_k through the common term.
  std::vector<EquiWitness> phi(n), psi(n);
  for (std::size_t j = 0; j < n; ++j) {
    phi[j] = compose_witnesses(rep, reverse_witness(rep, inst.wit_a[0]), inst.wit_a[j]);
    psi[j] = compose_witnesses(rep, reverse_witness(rep, inst.wit_b[0]), inst.wit_b[j]);
  }

  auto averts = leveled_points(inst.copies_a[0]);
  auto bverts = leveled_points(inst.copies_b[0]);
  if (averts.size() != bverts.size())
    throw NotRegular("class counts differ; the input witnesses are inconsistent");
  std::map<LeveledPoint, std::size_t> bindex;
  for (std::size_t i = 0; i < bverts.size(); ++i) bindex[bverts[i]] = i;

  auto locate_b_copy = [&](LeveledPoint y) -> std::size_t {
    for (std::size_t k = 0; k < n; ++k)
      if (inst.copies_b[k].at_level(y.level, rep.universe()).contains(y.point)) return k;
    throw NotRegular("chi image misses every B copy");
  };

  // Edge (a, b) with label (j, k): chi(phi_j(a)) = psi_k(b).
  struct EdgeLabel {
    std::size_t j, k;
  };
  std::vector<std::vector<std::pair<std::size_t, EdgeLabel>>> adj(averts.size());
  for (std::size_t ai = 0; ai < averts.size(); ++ai) {
    for (std::size_t j = 0; j < n; ++j) {
      Trace tj = trace_through(rep, phi[j], averts[ai]);
      Trace tc = trace_through(rep, inst.chi, tj.at);
      std::size_t k = locate_b_copy(tc.at);
      Trace tb = trace_through(rep, reverse_witness(rep, psi[k]), tc.at);
      auto it = bindex.find(tb.at);
      if (it == bindex.end()) throw NotRegular("matched point leaves B_1");
      adj[ai].push_back({it->second, {j, k}});
    }
  }

  // Perfect matching by augmenting paths on the n-regular multigraph.
  std::vector<std::size_t> match_a(averts.size(), SIZE_MAX), match_b(bverts.size(), SIZE_MAX);
  std::vector<bool> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t ai) -> bool {
    for (const auto& [bi, label] : adj[ai]) {
      if (visited[bi]) continue;
      visited[bi] = true;
      if (match_b[bi] == SIZE_MAX || augment(match_b[bi])) {
        match_b[bi] = ai;
        match_a[ai] = bi;
        return true;
      }
    }
    return false;
  };
  for (std::size_t ai = 0; ai < averts.size(); ++ai) {
    visited.assign(bverts.size(), false);
    if (!augment(ai)) throw NotRegular("no perfect matching; input is not n-regular");
  }

  // Emit singleton pieces a -> psi_k^{-1}(chi(phi_j(a))).
  EquiWitness a1b1;
  a1b1.source = inst.copies_a[0];
  a1b1.target = inst.copies_b[0];
  for (std::size_t ai = 0; ai < averts.size(); ++ai) {
    std::size_t bi = match_a[ai];
    // Deterministic label choice: smallest (j, k) that realizes the match.
    std::optional<EdgeLabel> chosen;
    for (const auto& [cand_bi, label] : adj[ai]) {
      if (cand_bi != bi) continue;
      if (!chosen || label.j < chosen->j || (label.j == chosen->j && label.k < chosen->k))
        chosen = label;
    }
    if (!chosen) throw InvsemError("matching lost its edge");
    Trace t1 = trace_through(rep, phi[chosen->j], averts[ai]);
    Trace t2 = trace_through(rep, inst.chi, t1.at);
    Trace t3 = trace_through(rep, reverse_witness(rep, psi[chosen->k]), t2.at);
    Word word = t3.word.concat(t2.word).concat(t1.word);
    XSet single = XSet::from_points(rep.universe(), {averts[ai].point});
    a1b1.pieces.push_back({single, averts[ai].level, word, t3.at.level});
  }
  auto check = verify_witness(rep, a1b1);
  if (!check.valid)
    throw InvsemError("matching witness fails verification: " + check.violations.front());

  EquiWitness left = compose_witnesses(rep, inst.wit_a[0], a1b1);
  return compose_witnesses(rep, left, reverse_witness(rep, inst.wit_b[0]));
}

namespace {

LeveledSet copies_of(const XSet& a, std::size_t count, std::uint32_t first_level = 0) {
  std::vector<std::pair<std::uint32_t, XSet>> levels;
  for (std::size_t i = 0; i < count; ++i)
    levels.emplace_back(first_level + static_cast<std::uint32_t>(i), a);
  return LeveledSet(levels);
}

}  // namespace

EquiWitness absorb(const Representation& rep, std::size_t n, const EquiWitness& w, const XSet& a,
                   std::size_t iteration_cap) {
  if (n == 0) throw InvalidInput("n must be positive");
  LeveledSet nplus1 = copies_of(a, n + 1);
  LeveledSet ncopies = copies_of(a, n);
  auto check = verify_witness(rep, w);
  if (!check.valid) throw InvalidInput("input witness fails verification: " + check.violations.front());
  if (!(w.source == nplus1) || !w.target.is_subset_of(ncopies))
    throw InvalidInput("witness must map the n+1 copies of A into the n copies");

  // u_k : (n+k) copies ~ subset of n copies; grow k up to n.
  EquiWitness u = w;  // k = 1
  for (std::size_t k = 1; k < n; ++k) {
    std::uint32_t fresh = static_cast<std::uint32_t>(n + k);
    LeveledSet extra = LeveledSet::single(a, fresh);
    EquiWitness widened = union_witness(rep, u, identity_witness(rep, extra));
    // Target sits inside (n copies) ⊔ A@fresh ⊆ (n+1 copies) after relabeling
    // the fresh level down to n.
    EquiWitness relabel;
    relabel.source = widened.target;
    for (const auto& [lvl, st] : widened.target.levels()) {
      std::uint32_t to = lvl == fresh ? static_cast<std::uint32_t>(n) : lvl;
      relabel.pieces.push_back({st, lvl, Word::unit(), to});
      relabel.target = relabel.target.unite(LeveledSet::single(st, to));
    }
    EquiWitness shifted = compose_witnesses(rep, widened, relabel);
    u = compose_witnesses(rep, shifted, restrict_witness(rep, w, shifted.target));
  }

  // Schroeder-Bernstein between n copies and 2n copies.
  LeveledSet two_n = copies_of(a, 2 * n);
  EquiWitness w1 = identity_witness(rep, two_n);  // (n copies) ⊔ (rest) ~ 2n copies
  EquiWitness w2 = u;
  LeveledSet b0 = ncopies.difference(u.target);
  if (!b0.empty()) {
    // Park the missing part of the n copies at fresh levels and relabel down,
    // so w2.source = (2n copies) ⊔ b0' is literally disjoint.
    EquiWitness down;
    for (const auto& [lvl, st] : b0.levels()) {
      std::uint32_t parked = lvl + static_cast<std::uint32_t>(2 * n);
      down.source = down.source.unite(LeveledSet::single(st, parked));
      down.target = down.target.unite(LeveledSet::single(st, lvl));
      down.pieces.push_back({st, parked, Word::unit(), lvl});
    }
    w2 = union_witness(rep, u, down);
  }
  EquiWitness nc_2nc = schroeder_bernstein(rep, w1, w2, ncopies, two_n, iteration_cap);

  // Cancel n: copies_a[i] = A@i ~ A, copies_b[i] = (A@2i ⊔ A@2i+1) ~ A ⊔ A.
  KoenigInstance inst;
  inst.a = LeveledSet::single(a, 0);
  inst.b = LeveledSet({{0, a}, {1, a}});
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t li = static_cast<std::uint32_t>(i);
    inst.copies_a.push_back(LeveledSet::single(a, li));
    EquiWitness wa;
    wa.source = inst.a;
    wa.target = inst.copies_a.back();
    wa.pieces.push_back({a, 0, Word::unit(), li});
    inst.wit_a.push_back(wa);

    LeveledSet bcopy({{2 * li, a}, {2 * li + 1, a}});
    inst.copies_b.push_back(bcopy);
    EquiWitness wb;
    wb.source = inst.b;
    wb.target = bcopy;
    wb.pieces.push_back({a, 0, Word::unit(), 2 * li});
    wb.pieces.push_back({a, 1, Word::unit(), 2 * li + 1});
    inst.wit_b.push_back(wb);
  }
  inst.chi = nc_2nc;
  return koenig_cancel(rep, inst);
}

ParadoxWitness to_paradox(const Representation& rep, const EquiWitness& w, const XSet& a) {
  if (!(w.source == LeveledSet::single(a, 0)))
    throw InvalidInput("witness source must be the plain set at level 0");
  if (!(w.target == LeveledSet({{0, a}, {1, a}})))
    throw InvalidInput("witness target must be two copies of the set");
  ParadoxWitness pw;
  pw.target = a;
  for (const auto& p : w.pieces) {
    if (p.level_to == 0)
      pw.pieces_a.push_back({p.set, p.word});
    else
      pw.pieces_b.push_back({p.set, p.word});
  }
  auto check = verify_witness(rep, pw);
  if (!check.valid)
    throw InvsemError("paradox conversion fails verification: " + check.violations.front());
  return pw;
}

ParadoxSearchOutcome paradox_search(const Representation& rep,
                                    const ParadoxSearchBounds& bounds) {
  ParadoxSearchOutcome out;
  XSet full = XSet::full(rep.universe());
  if (!rep.universe().is_naturals) {
    auto card = full.cardinality();
    out.exhausted_description =
        "finite universe of size " + std::to_string(card ? *card : 0) +
        ": injective partial maps preserve cardinality, no piece system can tile twice";
    return out;
  }

  auto words = rep.words_up_to(bounds.word_len);
  // Candidate sets: canonical UPSets with period <= bound and threshold 0.
  std::vector<XSet> family;
  for (std::uint64_t p = 1; p <= bounds.period; ++p) {
    for (std::uint64_t mask = 0; mask < (1ull << p); ++mask) {
      std::vector<bool> residues(p);
      for (std::uint64_t i = 0; i < p; ++i) residues[i] = mask & (1ull << i);
      UPSet s = UPSet::make(0, p, residues, {});
      if (s.period() != p) continue;  // canonical period smaller; already seen
      family.push_back(XSet(s));
    }
  }

  // Both sides use tilings X = w_1 S_1 ⊔ ... ⊔ w_c S_c. For one piece the set
  // is forced: S = D_{w*w} and the word must be onto X.
  auto one_piece_candidates = [&]() {
    std::vector<std::pair<Word, XSet>> cands;
    for (const auto& w : words) {
      XMap m = rep.eval(w);
      if (!(m.range() == full)) continue;
      XSet dom = m.domain();
      if (dom.is_upset() && dom.as_upset().period() > bounds.period) continue;
      cands.emplace_back(w, dom);
    }
    return cands;
  };

  if (bounds.pieces >= 2) {
    auto cands = one_piece_candidates();
    for (const auto& [w1, a1] : cands) {
      for (const auto& [w2, b1] : cands) {
        if (!a1.intersect(b1).empty()) continue;
        ParadoxWitness pw;
        pw.target = full;
        pw.pieces_a.push_back({a1, w1});
        pw.pieces_b.push_back({b1, w2});
        if (verify_witness(rep, pw).valid) {
          out.witness = std::move(pw);
          return out;
        }
      }
    }
  }

  // Multi-piece systems: one side tiles X with pieces drawn from the family.
  std::function<bool(std::vector<ParadoxPiece>&, const XSet&, std::size_t, const XSet&)>
      build_side = [&](std::vector<ParadoxPiece>& acc, const XSet& covered,
                       std::size_t budget, const XSet& forbidden) -> bool {
    if (covered == full) return true;
    if (budget == 0) return false;
    for (const auto& w : words) {
      XMap m = rep.eval(w);
      for (const auto& s : family) {
        if (!s.is_subset_of(m.domain())) continue;
        if (!s.intersect(forbidden).empty()) continue;
        XSet img = m.image(s);
        if (!img.intersect(covered).empty()) continue;
        bool overlaps_pieces = false;
        for (const auto& p : acc)
          if (!p.set.intersect(s).empty()) {
            overlaps_pieces = true;
            break;
          }
        if (overlaps_pieces || s.empty()) continue;
        acc.push_back({s, w});
        if (build_side(acc, covered.unite(img), budget - 1, forbidden)) return true;
        acc.pop_back();
      }
    }
    return false;
  };

  for (std::size_t na = 1; na + 1 <= bounds.pieces && !out.witness; ++na) {
    std::size_t nb_max = bounds.pieces - na;
    std::vector<ParadoxPiece> side_a;
    // Enumerate A-side tilings with exactly <= na pieces via the recursion,
    // then try to finish the B side avoiding the A-side piece sets.
    std::function<void(std::vector<ParadoxPiece>&, const XSet&, std::size_t)> rec =
        [&](std::vector<ParadoxPiece>& acc, const XSet& covered, std::size_t budget) {
          if (out.witness) return;
          if (covered == full) {
            XSet used = XSet::empty(rep.universe());
            for (const auto& p : acc) used = used.unite(p.set);
            std::vector<ParadoxPiece> side_b;
            if (build_side(side_b, XSet::empty(rep.universe()), nb_max, used)) {
              ParadoxWitness pw;
              pw.target = full;
              pw.pieces_a = acc;
              pw.pieces_b = side_b;
              bool disjoint_ok = true;
              XSet all = used;
              for (const auto& p : side_b) {
                if (!all.intersect(p.set).empty()) disjoint_ok = false;
                all = all.unite(p.set);
              }
              if (disjoint_ok && verify_witness(rep, pw).valid) out.witness = std::move(pw);
            }
            return;
          }
          if (budget == 0) return;
          for (const auto& w : words) {
            XMap m = rep.eval(w);
            for (const auto& s : family) {
              if (s.empty() || !s.is_subset_of(m.domain())) continue;
              XSet img = m.image(s);
              if (!img.intersect(covered).empty()) continue;
              bool dup = false;
              for (const auto& p : acc)
                if (!p.set.intersect(s).empty()) {
                  dup = true;
                  break;
                }
              if (dup) continue;
              acc.push_back({s, w});
              rec(acc, covered.unite(img), budget - 1);
              acc.pop_back();
              if (out.witness) return;
            }
          }
        };
    if (na >= 2) {
      std::vector<ParadoxPiece> acc;
      rec(acc, XSet::empty(rep.universe()), na);
    }
  }
  if (out.witness) return out;

  out.exhausted_description =
      "words up to length " + std::to_string(bounds.word_len) +
      ", canonical UPSets of period <= " + std::to_string(bounds.period) +
      " with threshold 0, total pieces <= " + std::to_string(bounds.pieces);
  return out;
}

InducedFragment induced_fragment(const Representation& rep, const ParadoxWitness& w) {
  auto check = verify_witness(rep, w);
  if (!check.valid) throw InvalidWitness("paradox witness fails verification");
  InducedFragment out;
  std::map<std::string, std::size_t> index;
  auto intern = [&](const XSet& s) {
    auto key = s.to_string();
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    out.sets.push_back(s);
    index.emplace(key, out.sets.size() - 1);
    return out.sets.size() - 1;
  };
  std::size_t target = intern(w.target);
  intern(XSet::full(rep.universe()));

  auto add_side = [&](const std::vector<ParadoxPiece>& side) {
    // Action relations and the image-tiling chain.
    std::size_t chain = SIZE_MAX;
    XSet chain_set = XSet::empty(rep.universe());
    for (const auto& p : side) {
      std::size_t src = intern(p.set);
      XSet img = rep.act(p.word, p.set);
      std::size_t img_i = intern(img);
      FragmentRelation act;
      act.kind = FragmentRelation::Kind::ActionEquality;
      act.source = src;
      act.image = img_i;
      act.word = p.word;
      out.relations.push_back(act);
      if (chain == SIZE_MAX) {
        chain = img_i;
        chain_set = img;
      } else {
        XSet next = chain_set.unite(img);
        std::size_t next_i = intern(next);
        FragmentRelation du;
        du.kind = FragmentRelation::Kind::DisjointUnion;
        du.whole = next_i;
        du.part_a = chain;
        du.part_b = img_i;
        out.relations.push_back(du);
        chain = next_i;
        chain_set = next;
      }
    }
    return chain;  // index of the full tiling union (= target)
  };
  add_side(w.pieces_a);
  add_side(w.pieces_b);

  // Piece-union chain and the remainder: target = (⊔ pieces) ⊔ R.
  std::size_t chain = SIZE_MAX;
  XSet chain_set = XSet::empty(rep.universe());
  auto extend = [&](const XSet& s) {
    std::size_t si = intern(s);
    if (chain == SIZE_MAX) {
      chain = si;
      chain_set = s;
      return;
    }
    XSet next = chain_set.unite(s);
    std::size_t next_i = intern(next);
    FragmentRelation du;
    du.kind = FragmentRelation::Kind::DisjointUnion;
    du.whole = next_i;
    du.part_a = chain;
    du.part_b = si;
    out.relations.push_back(du);
    chain = next_i;
    chain_set = next;
  };
  for (const auto& p : w.pieces_a) extend(p.set);
  for (const auto& p : w.pieces_b) extend(p.set);
  if (chain != SIZE_MAX) {
    XSet rem = w.target.difference(chain_set);
    std::size_t rem_i = intern(rem);
    FragmentRelation du;
    du.kind = FragmentRelation::Kind::DisjointUnion;
    du.whole = target;
    du.part_a = chain;
    du.part_b = rem_i;
    out.relations.push_back(du);
  }
  return out;
}

}  // namespace invsem
