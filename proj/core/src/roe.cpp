#include "invsem/roe.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "invsem/errors.hpp"

namespace invsem {

RoeWindow::RoeWindow(std::vector<std::uint64_t> pts) : points(std::move(pts)) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

std::optional<std::size_t> RoeWindow::index_of(std::uint64_t p) const {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - points.begin());
}

VMatrix build_V(const Representation& rep, const Word& w, const RoeWindow& window) {
  XMap m = rep.eval(w);
  VMatrix out;
  out.matrix = RationalMatrix(window.size(), window.size());
  for (std::size_t j = 0; j < window.size(); ++j) {
    auto y = m.apply(window.points[j]);
    if (!y) continue;
    if (auto i = window.index_of(*y))
      out.matrix.at(*i, j) = 1;
    else
      out.boundary_columns.push_back(window.points[j]);
  }
  return out;
}

RationalMatrix build_P(const XSet& a, const RoeWindow& window) {
  RationalMatrix p(window.size(), window.size());
  for (std::size_t i = 0; i < window.size(); ++i)
    if (a.contains(window.points[i])) p.at(i, i) = 1;
  return p;
}

namespace {

/// Window indices whose forward and backward images under the word stay in
/// the window (or are undefined).
std::vector<std::size_t> interior_indices(const Representation& rep, const Word& w,
                                          const RoeWindow& window) {
  XMap m = rep.eval(w);
  XMap inv = m.inverse();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < window.size(); ++i) {
    std::uint64_t x = window.points[i];
    auto fwd = m.apply(x);
    if (fwd && !window.index_of(*fwd)) continue;
    auto bck = inv.apply(x);
    if (bck && !window.index_of(*bck)) continue;
    keep.push_back(i);
  }
  return keep;
}

}  // namespace

RelationsReport check_relations(const Representation& rep, const RoeWindow& window,
                                const std::vector<Word>& words, const std::vector<XSet>& sets) {
  RelationsReport report;
  report.interior_size = window.size();
  for (const auto& w : words) {
    auto keep = interior_indices(rep, w, window);
    report.interior_size = std::min(report.interior_size, keep.size());
    RationalMatrix v = build_V(rep, w, window).matrix;
    XMap m = rep.eval(w);
    XMap inv = m.inverse();
    for (const auto& a : sets) {
      // V_s f = (s f) V_s with f the indicator of A: (sf)(x) = f(s* x) on D_{ss*}.
      RationalMatrix f = build_P(a, window);
      RationalMatrix sf(window.size(), window.size());
      for (std::size_t i = 0; i < window.size(); ++i) {
        auto back = inv.apply(window.points[i]);
        if (back && a.contains(*back)) sf.at(i, i) = 1;
      }
      RationalMatrix lhs = v.mul(f);
      RationalMatrix rhs = sf.mul(v);
      if (!lhs.sub(rhs).compress(keep).is_zero()) {
        report.pass = false;
        report.failures.push_back("V_s f = (s f) V_s fails for word " + rep.word_string(w) +
                                  ", set " + a.to_string());
      }
      // P_A V_s = V_s P_{s*(A ∩ D_{ss*})}, the localized set computed exactly.
      XSet pulled = rep.act(w.starred(), a);
      RationalMatrix lhs2 = f.mul(v);
      RationalMatrix rhs2 = v.mul(build_P(pulled, window));
      if (!lhs2.sub(rhs2).compress(keep).is_zero()) {
        report.pass = false;
        report.failures.push_back("P_A V_s = V_s P_{s*(A ∩ D)} fails for word " +
                                  rep.word_string(w) + ", set " + a.to_string());
      }
    }
  }
  return report;
}

RationalMatrix conditional_expectation(const RationalMatrix& m) { return m.diagonal_part(); }

namespace {

struct PairIndex {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::size_t intern(std::pair<std::size_t, std::size_t> p) {
    auto it = index.find(p);
    if (it != index.end()) return it->second;
    pairs.push_back(p);
    index.emplace(p, pairs.size() - 1);
    return pairs.size() - 1;
  }
};

}  // namespace

Rat TraceSpaceResult::evaluate(const std::vector<Rat>& coords, const RationalMatrix& m) const {
  Rat acc = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    acc += coords[k] * m.at(pairs[k].first, pairs[k].second);
  return acc;
}

TraceSpaceResult trace_functional_space(const Representation& rep, const RoeWindow& window,
                                        std::size_t word_bound) {
  auto words = rep.words_up_to(word_bound);
  TraceSpaceResult out;
  out.span_words = words.size();

  // The window must be invariant: every sampled word maps window points into
  // the window.
  for (const auto& w : words) {
    XMap m = rep.eval(w);
    for (auto x : window.points) {
      auto y = m.apply(x);
      if (y && !window.index_of(*y))
        throw BoundaryContamination("word " + rep.word_string(w) +
                                    " maps window point " + std::to_string(x) + " outside");
    }
  }

  // Spanning matrix units E_{w(x), x} and their pairwise products.
  PairIndex idx;
  std::set<std::pair<std::size_t, std::size_t>> span_pairs;
  for (const auto& w : words) {
    XMap m = rep.eval(w);
    for (std::size_t j = 0; j < window.size(); ++j) {
      auto y = m.apply(window.points[j]);
      if (!y) continue;
      auto i = window.index_of(*y);
      span_pairs.insert({*i, j});
    }
  }
  for (const auto& p : span_pairs) idx.intern(p);
  for (const auto& a : span_pairs)
    for (const auto& b : span_pairs) {
      if (a.second == b.first) idx.intern({a.first, b.second});
      if (b.second == a.first) idx.intern({b.first, a.second});
    }

  // Constraints: tau(ab - ba) = 0 for spanning a, b; tau(1) = 1.
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  std::size_t n_unknowns = idx.pairs.size();
  for (const auto& a : span_pairs)
    for (const auto& b : span_pairs) {
      std::vector<Rat> row(n_unknowns, Rat(0));
      bool nontrivial = false;
      if (a.second == b.first) {
        row[idx.intern({a.first, b.second})] += 1;
        nontrivial = true;
      }
      if (b.second == a.first) {
        row[idx.intern({b.first, a.second})] -= 1;
        nontrivial = true;
      }
      if (nontrivial && std::any_of(row.begin(), row.end(), [](const Rat& v) { return v != 0; })) {
        rows.push_back(std::move(row));
        rhs.push_back(Rat(0));
      }
    }
  {
    std::vector<Rat> unit_row(n_unknowns, Rat(0));
    for (std::size_t i = 0; i < window.size(); ++i) {
      auto it = idx.index.find({i, i});
      if (it != idx.index.end()) unit_row[it->second] = 1;
    }
    rows.push_back(std::move(unit_row));
    rhs.push_back(Rat(1));
  }

  auto solved = solve_linear(rows, rhs);
  if (!solved.consistent)
    throw InvsemError("trace system inconsistent; the unit is not in the span");
  out.pairs = idx.pairs;
  out.particular = std::move(solved.particular);
  out.homogeneous = std::move(solved.nullspace);

  // Fixed-point / 3-coloring split per word, as used to kill off-diagonal
  // monomials: each color class C has w(C) ∩ C = ∅.
  for (const auto& w : words) {
    if (w.is_unit()) continue;
    XMap m = rep.eval(w);
    TraceColoring col;
    col.word = w;
    std::map<std::uint64_t, int> color;
    for (auto x : window.points) {
      auto y = m.apply(x);
      if (!y) continue;
      if (*y == x) {
        ++col.fixed_points;
        continue;
      }
      color[x] = -1;
    }
    for (auto& [x, c] : color) {
      std::array<bool, 3> used{false, false, false};
      auto y = m.apply(x);
      if (y) {
        auto it = color.find(*y);
        if (it != color.end() && it->second >= 0) used[it->second] = true;
      }
      auto back = m.inverse().apply(x);
      if (back) {
        auto it = color.find(*back);
        if (it != color.end() && it->second >= 0) used[it->second] = true;
      }
      for (int k = 0; k < 3; ++k)
        if (!used[k]) {
          c = k;
          break;
        }
    }
    for (const auto& [x, c] : color) ++col.color_sizes[static_cast<std::size_t>(c)];
    out.colorings.push_back(col);
  }
  return out;
}

TraceFactorizationReport trace_factorization_check(const TraceSpaceResult& space) {
  TraceFactorizationReport rep;
  auto check_functional = [&](const std::vector<Rat>& coords, bool homogeneous) {
    for (std::size_t k = 0; k < space.pairs.size(); ++k) {
      if (space.pairs[k].first != space.pairs[k].second && coords[k] != 0) {
        rep.factor_through_diagonal = false;
        if (rep.first_failure.empty())
          rep.first_failure = "off-diagonal coordinate (" +
                              std::to_string(space.pairs[k].first) + "," +
                              std::to_string(space.pairs[k].second) + ") is nonzero";
      }
      if (!homogeneous && space.pairs[k].first == space.pairs[k].second && coords[k] < 0) {
        rep.positive_particular = false;
        if (rep.first_failure.empty())
          rep.first_failure = "negative diagonal weight at index " +
                              std::to_string(space.pairs[k].first);
      }
    }
  };
  check_functional(space.particular, false);
  for (const auto& h : space.homogeneous) check_functional(h, true);
  return rep;
}

CornerDimension corner_dimension(const Representation& rep,
                                 const std::vector<std::uint64_t>& f1,
                                 const std::vector<std::uint64_t>& f2, std::size_t word_bound) {
  CornerDimension out;
  out.expected = f1.size() * f2.size();

  std::vector<std::uint64_t> joint = f1;
  joint.insert(joint.end(), f2.begin(), f2.end());
  std::sort(joint.begin(), joint.end());
  joint.erase(std::unique(joint.begin(), joint.end()), joint.end());
  auto classes = approx_classes(rep, joint, word_bound);
  out.class_count = classes.class_count;
  out.class_condition_met = classes.class_count <= 1;

  // Pairs (y in F2, x in F1) reachable by words of length <= bound: collect
  // them by BFS from each x, then confirm the count as an exact matrix rank.
  std::set<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::vector<std::uint64_t> f2sorted = f2;
  std::sort(f2sorted.begin(), f2sorted.end());
  for (auto x : f1) {
    std::set<std::uint64_t> visited{x};
    std::vector<std::uint64_t> frontier{x};
    if (std::binary_search(f2sorted.begin(), f2sorted.end(), x)) pairs.insert({x, x});
    for (std::size_t depth = 0; depth < word_bound && !frontier.empty(); ++depth) {
      std::vector<std::uint64_t> next;
      for (auto p : frontier)
        for (auto y : rep.step_targets(p))
          if (visited.insert(y).second) {
            next.push_back(y);
            if (std::binary_search(f2sorted.begin(), f2sorted.end(), y)) pairs.insert({y, x});
          }
      frontier = std::move(next);
    }
  }

  // Rank route: each pair is a matrix unit supported at a distinct entry.
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> entry_index;
  for (const auto& p : pairs) entry_index.emplace(p, entry_index.size());
  std::vector<std::vector<Rat>> rows;
  for (const auto& p : pairs) {
    std::vector<Rat> row(entry_index.size(), Rat(0));
    row[entry_index[p]] = 1;
    rows.push_back(std::move(row));
  }
  out.rank = matrix_rank(std::move(rows));
  return out;
}

HsDefect folner_projection_defect(const Representation& rep,
                                  const std::vector<std::uint64_t>& f, const Word& w,
                                  const XSet& a) {
  XMap m = rep.eval(w);
  XMap inv = m.inverse();
  // Window covering F and everything one step away, so nothing truncates.
  std::vector<std::uint64_t> pts = f;
  for (auto x : f) {
    if (auto y = m.apply(x)) pts.push_back(*y);
    if (auto y = inv.apply(x)) pts.push_back(*y);
  }
  RoeWindow window(std::move(pts));

  RationalMatrix v = build_V(rep, w, window).matrix;
  RationalMatrix pa = build_P(a, window);
  RationalMatrix pf = build_P(XSet::from_points(rep.universe(), f), window);
  RationalMatrix va = v.mul(pa);
  RationalMatrix comm = va.mul(pf).sub(pf.mul(va));

  std::uint64_t leak_fwd = 0, leak_bck = 0;
  std::vector<std::uint64_t> fsorted = f;
  std::sort(fsorted.begin(), fsorted.end());
  auto in_f = [&](std::uint64_t x) {
    return std::binary_search(fsorted.begin(), fsorted.end(), x);
  };
  for (auto x : fsorted) {
    if (auto y = m.apply(x); y && !in_f(*y)) ++leak_fwd;
    if (auto y = inv.apply(x); y && !in_f(*y)) ++leak_bck;
  }

  HsDefect out;
  Rat size(Int(fsorted.size()), 1);
  out.defect = comm.hs_norm_sq() / size;
  out.bound = Rat(Int(leak_fwd + leak_bck), Int(fsorted.size()));
  if (!(out.defect <= out.bound))
    throw InvsemError("Hilbert-Schmidt defect exceeds the leak bound");
  return out;
}

IsometryReport isometries_from_paradox(const Representation& rep, const ParadoxWitness& pw,
                                       const RoeWindow& window) {
  // Each side must tile the target; cross-side overlap is reported, not fatal.
  auto check_side = [&](const std::vector<ParadoxPiece>& side) {
    XSet tiled = XSet::empty(rep.universe());
    for (const auto& p : side) {
      if (!p.set.is_subset_of(rep.domain_of(p.word)))
        throw InvalidWitness("piece leaves the domain of its word");
      XSet img = rep.act(p.word, p.set);
      if (!tiled.intersect(img).empty()) throw InvalidWitness("side images overlap");
      tiled = tiled.unite(img);
    }
    if (!(tiled == pw.target)) throw InvalidWitness("side images do not tile the target");
  };
  check_side(pw.pieces_a);
  check_side(pw.pieces_b);

  auto build_w = [&](const std::vector<ParadoxPiece>& side, std::vector<std::uint64_t>& boundary) {
    RationalMatrix acc(window.size(), window.size());
    for (const auto& p : side) {
      XSet img = rep.act(p.word, p.set);  // s_i A_i
      XMap back = rep.eval(p.word).inverse();
      for (std::size_t j = 0; j < window.size(); ++j) {
        std::uint64_t x = window.points[j];
        if (!img.contains(x)) continue;
        auto y = back.apply(x);
        if (!y) continue;
        if (auto i = window.index_of(*y))
          acc.at(*i, j) = 1;
        else
          boundary.push_back(x);
      }
    }
    return acc;
  };

  IsometryReport out;
  std::vector<std::uint64_t> boundary1, boundary2;
  out.w1 = build_w(pw.pieces_a, boundary1);
  out.w2 = build_w(pw.pieces_b, boundary2);
  out.boundary_columns = boundary1;
  out.boundary_columns.insert(out.boundary_columns.end(), boundary2.begin(), boundary2.end());
  std::sort(out.boundary_columns.begin(), out.boundary_columns.end());
  out.boundary_columns.erase(
      std::unique(out.boundary_columns.begin(), out.boundary_columns.end()),
      out.boundary_columns.end());

  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < window.size(); ++j) {
    std::uint64_t x = window.points[j];
    if (!std::binary_search(out.boundary_columns.begin(), out.boundary_columns.end(), x)) {
      keep.push_back(j);
      out.interior.push_back(x);
    }
  }

  RationalMatrix id = RationalMatrix::identity(window.size());
  out.isometry_w1 = out.w1.transpose().mul(out.w1).sub(id).compress(keep).is_zero();
  out.isometry_w2 = out.w2.transpose().mul(out.w2).sub(id).compress(keep).is_zero();
  out.ranges_orthogonal =
      out.w1.mul(out.w1.transpose()).mul(out.w2.mul(out.w2.transpose())).is_zero();
  return out;
}

}  // namespace invsem
