#include "invsem/decide.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "invsem/errors.hpp"

namespace invsem {

namespace {

FeasibilityResult from_lp(const LinearSystem& sys, const LpFeasibility& lp) {
  FeasibilityResult res;
  res.feasible = lp.feasible;
  if (lp.feasible) {
    res.measure = RationalMeasure::atomic(lp.solution);
  } else {
    for (const auto& [row, y] : lp.dual) res.dual.push_back({sys.rows[row].id, y});
  }
  return res;
}

/// Adds a row unless it is trivially 0 = 0 or a duplicate of an earlier row.
struct RowDeduper {
  LinearSystem& sys;
  std::set<std::string> seen;
  void add(std::vector<std::pair<std::uint32_t, Rat>> coeffs, Rat rhs, std::string id) {
    LinearSystem probe;
    probe.num_vars = sys.num_vars;
    probe.add_row(coeffs, rhs, id);
    const auto& row = probe.rows[0];
    if (row.coeffs.empty() && row.rhs == 0) return;
    std::string sig;
    for (const auto& [v, c] : row.coeffs) sig += std::to_string(v) + ":" + rat_to_string(c) + ",";
    sig += "=" + rat_to_string(row.rhs);
    if (!seen.insert(sig).second) return;
    sys.add_row(std::move(coeffs), std::move(rhs), std::move(id));
  }
};

std::vector<std::uint64_t> map_image_points(const XMap& m,
                                            const std::vector<std::uint64_t>& pts) {
  std::vector<std::uint64_t> out;
  for (auto x : pts)
    if (auto y = m.apply(x)) out.push_back(*y);
  return out;
}

}  // namespace

FeasibilityResult day_invariance_feasible(const Semigroup& sgp) {
  std::size_t n = sgp.size();
  LinearSystem sys;
  sys.num_vars = n;
  RowDeduper rows{sys};
  for (std::uint32_t s = 0; s < n; ++s) {
    std::vector<std::vector<std::uint32_t>> fiber(n);
    for (std::uint32_t t = 0; t < n; ++t) fiber[sgp.mul(s, t)].push_back(t);
    for (std::uint32_t x = 0; x < n; ++x) {
      std::vector<std::pair<std::uint32_t, Rat>> coeffs;
      for (auto t : fiber[x]) coeffs.emplace_back(t, Rat(1));
      coeffs.emplace_back(x, Rat(-1));
      rows.add(std::move(coeffs), Rat(0), "inv s=" + sgp.name(s) + " x=" + sgp.name(x));
    }
  }
  std::vector<std::pair<std::uint32_t, Rat>> mass;
  for (std::uint32_t x = 0; x < n; ++x) mass.emplace_back(x, Rat(1));
  rows.add(std::move(mass), Rat(1), "mass");
  return from_lp(sys, solve_feasibility(sys));
}

FeasibilityResult measure_conditions_feasible(const Semigroup& sgp,
                                              const std::vector<std::uint32_t>& star) {
  std::size_t n = sgp.size();
  if (star.size() != n) throw InvalidInput("star table has wrong length");
  LinearSystem sys;
  sys.num_vars = n;
  RowDeduper rows{sys};
  for (std::uint32_t s = 0; s < n; ++s) {
    std::uint32_t e = sgp.mul(star[s], s);  // s*s
    for (std::uint32_t x = 0; x < n; ++x) {
      if (sgp.mul(e, x) != x)
        rows.add({{x, Rat(1)}}, Rat(0), "loc s=" + sgp.name(s) + " x=" + sgp.name(x));
      rows.add({{sgp.mul(e, x), Rat(1)}, {sgp.mul(s, x), Rat(-1)}}, Rat(0),
               "dommeas s=" + sgp.name(s) + " x=" + sgp.name(x));
    }
  }
  std::vector<std::pair<std::uint32_t, Rat>> mass;
  for (std::uint32_t x = 0; x < n; ++x) mass.emplace_back(x, Rat(1));
  rows.add(std::move(mass), Rat(1), "mass");
  return from_lp(sys, solve_feasibility(sys));
}

FeasibilityResult measure_conditions_feasible(const InverseSemigroup& s) {
  std::vector<std::uint32_t> star(s.size());
  for (std::uint32_t i = 0; i < s.size(); ++i) star[i] = s.star(i);
  return measure_conditions_feasible(static_cast<const Semigroup&>(s), star);
}

std::vector<XMap> rep_closure_maps(const Representation& rep, std::size_t cap) {
  std::vector<XMap> elems;
  std::map<std::string, std::uint32_t> index;
  auto add = [&](const XMap& m) {
    auto key = m.to_string();
    if (index.count(key)) return;
    if (elems.size() >= cap)
      throw ClosureRequired("map closure exceeded cap " + std::to_string(cap));
    index.emplace(key, static_cast<std::uint32_t>(elems.size()));
    elems.push_back(m);
  };
  add(XMap::identity(rep.universe()));
  for (std::size_t i = 0; i < rep.generator_count(); ++i) add(rep.generator(i));
  for (std::size_t head = 0; head < elems.size(); ++head) {
    XMap cur = elems[head];
    add(cur.inverse());
    for (std::size_t j = 0; j <= head; ++j) {
      add(cur.compose(elems[j]));
      add(elems[j].compose(cur));
    }
  }
  return elems;
}

namespace {

FeasibilityResult rep_measure_lp(const Representation& rep, const std::vector<XMap>& elements,
                                 bool domain_rows, bool localization_rows) {
  if (rep.universe().is_naturals)
    throw ClosureRequired("measure LP needs a finite universe");
  std::size_t n = rep.universe().size;
  LinearSystem sys;
  sys.num_vars = n;
  RowDeduper rows{sys};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const XMap& m = elements[k];
    XSet dom = m.domain();
    for (std::uint64_t x = 0; x < n; ++x) {
      if (dom.contains(x)) {
        if (domain_rows) {
          std::uint64_t y = *m.apply(x);
          rows.add({{static_cast<std::uint32_t>(y), Rat(1)}, {static_cast<std::uint32_t>(x), Rat(-1)}},
                   Rat(0), "dom elem#" + std::to_string(k) + " x=" + std::to_string(x));
        }
      } else if (localization_rows) {
        rows.add({{static_cast<std::uint32_t>(x), Rat(1)}}, Rat(0),
                 "loc elem#" + std::to_string(k) + " x=" + std::to_string(x));
      }
    }
  }
  std::vector<std::pair<std::uint32_t, Rat>> mass;
  for (std::uint32_t x = 0; x < n; ++x) mass.emplace_back(x, Rat(1));
  rows.add(std::move(mass), Rat(1), "mass");
  return from_lp(sys, solve_feasibility_presolved(sys));
}

}  // namespace

FeasibilityResult domain_measure_feasible(const Representation& rep,
                                          const std::vector<XMap>& elements) {
  return rep_measure_lp(rep, elements, true, false);
}

FeasibilityResult localization_feasible(const Representation& rep,
                                        const std::vector<XMap>& elements) {
  return rep_measure_lp(rep, elements, false, true);
}

FeasibilityResult amenable_feasible(const Representation& rep,
                                    const std::vector<XMap>& elements) {
  return rep_measure_lp(rep, elements, true, true);
}

MeasurePropertiesReport check_measure_properties(const RationalMeasure& mu, const Semigroup& sgp,
                                                 const std::vector<std::uint32_t>& star,
                                                 std::size_t sample_count) {
  std::size_t n = sgp.size();
  if (mu.mode != RationalMeasure::Mode::Atomic || mu.atoms.size() != n)
    throw InvalidInput("atomic measure over S required");
  MeasurePropertiesReport rep;
  rep.exhaustive = n <= 16;

  auto subset_from_mask = [&](std::uint64_t mask) {
    FiniteSet a(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) a.insert(i);
    return a;
  };
  std::uint64_t lcg = 0x243f6a8885a308d3ull;
  auto next_mask = [&]() {
    lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
    return lcg >> (64 - n);
  };

  std::uint64_t total = rep.exhaustive ? (1ull << n) : sample_count;
  for (std::uint64_t it = 0; it < total; ++it) {
    FiniteSet a = subset_from_mask(rep.exhaustive ? it : next_mask());
    for (std::uint32_t s = 0; s < n; ++s) {
      std::uint32_t e = sgp.mul(star[s], s);
      FiniteSet ea = sgp.act(e, a);
      if (rep.day_invariance && mu.of(sgp.preimage(s, a)) != mu.of(a)) {
        rep.day_invariance = false;
        if (rep.first_violation.empty())
          rep.first_violation = "day: s=" + sgp.name(s) + " A=" + a.to_string();
      }
      if (rep.localization && mu.of(a) != mu.of(a.intersect(ea))) {
        rep.localization = false;
        if (rep.first_violation.empty())
          rep.first_violation = "localization: s=" + sgp.name(s) + " A=" + a.to_string();
      }
      if (rep.domain_measurability && mu.of(ea) != mu.of(sgp.act(s, a))) {
        rep.domain_measurability = false;
        if (rep.first_violation.empty())
          rep.first_violation = "domain-measurability: s=" + sgp.name(s) + " A=" + a.to_string();
      }
      if (rep.corollary && mu.of(a) != mu.of(sgp.act(s, a.intersect(ea)))) {
        rep.corollary = false;
        if (rep.first_violation.empty())
          rep.first_violation = "corollary: s=" + sgp.name(s) + " A=" + a.to_string();
      }
    }
  }
  return rep;
}

FeasibilityResult fragment_feasibility(const Representation& rep,
                                       const std::vector<XSet>& fragment,
                                       const std::vector<FragmentRelation>& relations) {
  // Locate the normalized full set.
  XSet full = XSet::full(rep.universe());
  std::size_t full_index = fragment.size();
  for (std::size_t i = 0; i < fragment.size(); ++i)
    if (fragment[i] == full) {
      full_index = i;
      break;
    }
  if (full_index == fragment.size())
    throw InvalidInput("fragment must contain the full universe set");

  // Re-verify every witnessed relation before building the LP.
  for (std::size_t k = 0; k < relations.size(); ++k) {
    const auto& rel = relations[k];
    if (rel.kind == FragmentRelation::Kind::DisjointUnion) {
      const XSet& a = fragment.at(rel.part_a);
      const XSet& b = fragment.at(rel.part_b);
      const XSet& w = fragment.at(rel.whole);
      if (!a.intersect(b).empty())
        throw InvalidWitness("relation #" + std::to_string(k) + ": parts are not disjoint");
      if (!(a.unite(b) == w))
        throw InvalidWitness("relation #" + std::to_string(k) + ": parts do not tile the whole");
    } else {
      const XSet& src = fragment.at(rel.source);
      const XSet& img = fragment.at(rel.image);
      if (!src.is_subset_of(rep.domain_of(rel.word)))
        throw InvalidWitness("relation #" + std::to_string(k) + ": source leaves the word domain");
      if (!(rep.act(rel.word, src) == img))
        throw InvalidWitness("relation #" + std::to_string(k) + ": word image mismatch");
    }
  }

  LinearSystem sys;
  sys.num_vars = fragment.size();
  RowDeduper rows{sys};
  for (std::size_t i = 0; i < fragment.size(); ++i)
    if (fragment[i].empty())
      rows.add({{static_cast<std::uint32_t>(i), Rat(1)}}, Rat(0), "empty#" + std::to_string(i));
  for (std::size_t k = 0; k < relations.size(); ++k) {
    const auto& rel = relations[k];
    if (rel.kind == FragmentRelation::Kind::DisjointUnion) {
      rows.add({{static_cast<std::uint32_t>(rel.whole), Rat(1)},
                {static_cast<std::uint32_t>(rel.part_a), Rat(-1)},
                {static_cast<std::uint32_t>(rel.part_b), Rat(-1)}},
               Rat(0), "du#" + std::to_string(k));
    } else {
      rows.add({{static_cast<std::uint32_t>(rel.source), Rat(1)},
                {static_cast<std::uint32_t>(rel.image), Rat(-1)}},
               Rat(0), "act#" + std::to_string(k));
    }
  }
  rows.add({{static_cast<std::uint32_t>(full_index), Rat(1)}}, Rat(1), "norm");

  LpFeasibility lp = solve_feasibility_presolved(sys);
  FeasibilityResult res;
  res.feasible = lp.feasible;
  if (lp.feasible) {
    std::vector<std::pair<XSet, Rat>> values;
    for (std::size_t i = 0; i < fragment.size(); ++i)
      values.emplace_back(fragment[i], lp.solution[i]);
    res.measure = RationalMeasure::on_fragment(std::move(values));
  } else {
    for (const auto& [row, y] : lp.dual) res.dual.push_back({sys.rows[row].id, y});
  }
  return res;
}

bool fragment_assignment_satisfies(const Representation& rep, const std::vector<XSet>& fragment,
                                   const std::vector<FragmentRelation>& relations,
                                   const std::vector<Rat>& values, std::string* first_violation) {
  auto fail = [&](const std::string& why) {
    if (first_violation) *first_violation = why;
    return false;
  };
  if (values.size() != fragment.size()) return fail("value count mismatch");
  XSet full = XSet::full(rep.universe());
  bool saw_full = false;
  for (std::size_t i = 0; i < fragment.size(); ++i) {
    if (values[i] < 0) return fail("negative value at #" + std::to_string(i));
    if (fragment[i].empty() && values[i] != 0) return fail("empty set with nonzero value");
    if (fragment[i] == full) {
      saw_full = true;
      if (values[i] != 1) return fail("full set not normalized to 1");
    }
  }
  if (!saw_full) return fail("fragment lacks the full set");
  for (std::size_t k = 0; k < relations.size(); ++k) {
    const auto& rel = relations[k];
    if (rel.kind == FragmentRelation::Kind::DisjointUnion) {
      if (values[rel.whole] != values[rel.part_a] + values[rel.part_b])
        return fail("additivity fails at relation #" + std::to_string(k));
    } else {
      if (values[rel.source] != values[rel.image])
        return fail("action equality fails at relation #" + std::to_string(k));
    }
  }
  return true;
}

std::vector<FolnerDefect> folner_defects(const Representation& rep,
                                         const std::vector<Word>& gens,
                                         const std::vector<std::uint64_t>& set) {
  std::vector<std::uint64_t> sorted = set;
  std::sort(sorted.begin(), sorted.end());
  std::vector<FolnerDefect> out;
  for (const auto& w : gens) {
    XMap m = rep.eval(w);
    std::uint64_t leak = 0;
    for (auto x : sorted) {
      auto y = m.apply(x);
      if (y && !std::binary_search(sorted.begin(), sorted.end(), *y)) ++leak;
    }
    out.push_back({w, leak, sorted.size()});
  }
  return out;
}

namespace {

bool folner_candidate_ok(const Representation& rep, const std::vector<XMap>& maps,
                         const std::vector<std::uint64_t>& f_sorted, const Rat& eps,
                         bool strict, bool amenable_mode) {
  Rat size(Int(f_sorted.size()), 1);
  for (const auto& m : maps) {
    std::uint64_t leak = 0;
    for (auto x : f_sorted) {
      auto y = m.apply(x);
      if (!y) {
        if (amenable_mode) return false;
        continue;
      }
      if (!std::binary_search(f_sorted.begin(), f_sorted.end(), *y)) ++leak;
    }
    Rat defect(Int(leak), Int(f_sorted.size()));
    if (strict ? !(defect < eps) : !(defect <= eps)) return false;
  }
  return true;
}

}  // namespace

FolnerOutcome folner_search(const Representation& rep, const Rat& eps,
                            const std::vector<Word>& gens,
                            const std::vector<std::uint64_t>& window,
                            const FolnerSearchOptions& options) {
  std::vector<std::uint64_t> win = window;
  std::sort(win.begin(), win.end());
  win.erase(std::unique(win.begin(), win.end()), win.end());
  std::vector<XMap> maps;
  for (const auto& w : gens) maps.push_back(rep.eval(w));

  FolnerOutcome out;
  auto accept = [&](const std::vector<std::uint64_t>& f) {
    FolnerCertificate cert;
    cert.set = f;
    cert.eps = eps;
    cert.strict = options.strict;
    cert.defects = folner_defects(rep, gens, f);
    out.certificate = std::move(cert);
  };

  if (!options.exhaustive) {
    // Doubling prefix sweep: the first qualifying prefix of size 1,2,4,...
    std::vector<std::size_t> sizes;
    for (std::size_t k = 1; k < win.size(); k *= 2) sizes.push_back(k);
    if (!win.empty()) sizes.push_back(win.size());
    for (auto k : sizes) {
      std::vector<std::uint64_t> f(win.begin(), win.begin() + k);
      if (folner_candidate_ok(rep, maps, f, eps, options.strict, options.amenable_mode)) {
        accept(f);
        return out;
      }
    }
    out.exhausted_description =
        "doubling prefixes of window size " + std::to_string(win.size()) + ", eps " +
        rat_to_string(eps) + (options.strict ? " (strict)" : " (non-strict)");
    return out;
  }

  std::size_t max_size = std::min(options.max_size, win.size());
  for (std::size_t k = 1; k <= max_size; ++k) {
    // Lexicographic combinations of indices into the sorted window.
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<std::uint64_t> f(k);
      for (std::size_t i = 0; i < k; ++i) f[i] = win[idx[i]];
      if (folner_candidate_ok(rep, maps, f, eps, options.strict, options.amenable_mode)) {
        accept(f);
        return out;
      }
      // next combination
      std::size_t i = k;
      while (i > 0) {
        --i;
        if (idx[i] != i + win.size() - k) {
          ++idx[i];
          for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) {
          i = SIZE_MAX;
          break;
        }
      }
      if (i == SIZE_MAX) break;
    }
  }
  out.exhausted_description = "all subsets of the " + std::to_string(win.size()) +
                              "-point window up to size " + std::to_string(max_size) +
                              ", eps " + rat_to_string(eps) +
                              (options.strict ? " (strict)" : " (non-strict)");
  return out;
}

FolnerCertificate transitive_refine(const Representation& rep, const FolnerCertificate& cert,
                                    const std::vector<Word>& gens, std::size_t word_bound) {
  const auto& f = cert.set;
  std::vector<std::uint64_t> sorted = f;
  std::sort(sorted.begin(), sorted.end());

  auto defects = folner_defects(rep, gens, sorted);
  Rat total_leak = 0;
  for (const auto& d : defects) total_leak += Rat(Int(d.leak), 1);
  Rat bound = cert.eps * Rat(Int(sorted.size()), 1);
  if (!(total_leak < bound))
    throw PreconditionViolated("sum of defects is not below eps * |F|");

  // Orbit components inside F under generator steps that stay in F.
  std::size_t n = sorted.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto pos_of = [&](std::uint64_t v) -> std::size_t {
    return static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
  };
  std::vector<XMap> maps;
  for (const auto& w : gens) {
    maps.push_back(rep.eval(w));
    maps.push_back(rep.eval(w.starred()));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& m : maps) {
      auto y = m.apply(sorted[i]);
      if (y && std::binary_search(sorted.begin(), sorted.end(), *y)) {
        std::size_t a = find(i), b = find(pos_of(*y));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  std::map<std::size_t, std::vector<std::uint64_t>> comps;
  for (std::size_t i = 0; i < n; ++i) comps[find(i)].push_back(sorted[i]);

  for (const auto& [root, comp] : comps) {
    auto comp_defects = folner_defects(rep, gens, comp);
    bool ok = true;
    for (const auto& d : comp_defects)
      if (!(d.defect() < cert.eps)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    // The component is transitive by construction; the word bound only feeds
    // the reported approximation metadata.
    auto classes = approx_classes(rep, comp, word_bound);
    (void)classes;
    FolnerCertificate out;
    out.set = comp;
    out.eps = cert.eps;
    out.strict = true;
    out.defects = std::move(comp_defects);
    return out;
  }
  throw PigeonholeFailed("no orbit component satisfies the defect bound");
}

NamiokaResult namioka_extract(const Representation& rep,
                              const std::map<std::uint64_t, Rat>& h, const Rat& eps,
                              const std::vector<Word>& gens) {
  if (gens.empty()) throw InvalidInput("generator list must be nonempty");
  if (eps <= 0) throw InvalidInput("eps must be positive");
  Rat total = 0;
  for (const auto& [x, v] : h) {
    if (v < 0) throw InvalidInput("h must be nonnegative");
    total += v;
  }
  if (total != 1) throw InvalidInput("h must have total mass 1");

  // Symmetry: the evaluated maps must be closed under inversion.
  std::vector<XMap> maps;
  for (const auto& w : gens) maps.push_back(rep.eval(w));
  for (const auto& m : maps) {
    XMap inv = m.inverse();
    if (std::find(maps.begin(), maps.end(), inv) == maps.end())
      throw PreconditionViolated("generator list is not symmetric");
  }

  auto h_at = [&](std::uint64_t x) -> Rat {
    auto it = h.find(x);
    return it == h.end() ? Rat(0) : it->second;
  };

  // Precondition: ||s*h - s*s h||_1 < eps / |gens| for every s.
  Rat limit = eps / Rat(Int(gens.size()), 1);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const XMap& m = maps[gi];
    XMap minv = m.inverse();
    std::set<std::uint64_t> candidates;
    for (const auto& [p, v] : h) {
      if (v == 0) continue;
      if (m.apply(p)) candidates.insert(p);      // x = p in D with h(x) != 0
      if (auto x = minv.apply(p)) candidates.insert(*x);  // h(sx) != 0
    }
    Rat norm = 0;
    for (auto x : candidates) {
      auto sx = m.apply(x);
      if (!sx) continue;
      norm += rat_abs(h_at(*sx) - h_at(x));
    }
    if (!(norm < limit))
      throw PreconditionViolated("||s*h - s*s h||_1 = " + rat_to_string(norm) +
                                 " for generator " + rep.word_string(gens[gi]) +
                                 " is not below eps/|gens| = " + rat_to_string(limit));
  }

  // Level-set decomposition: distinct positive values ascending.
  std::vector<Rat> values;
  for (const auto& [x, v] : h)
    if (v > 0) values.push_back(v);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::size_t n_levels = values.size();
  if (n_levels == 0) throw InvalidInput("h has empty support");

  std::vector<std::vector<std::uint64_t>> levels(n_levels);
  for (std::size_t i = 0; i < n_levels; ++i)
    for (const auto& [x, v] : h)
      if (v >= values[i]) levels[i].push_back(x);

  // K_s = {i : |s(A_i ∩ D) \ A_i| < eps |A_i|}; take the smallest common index.
  std::vector<bool> in_all(n_levels, true);
  for (const auto& m : maps) {
    for (std::size_t i = 0; i < n_levels; ++i) {
      if (!in_all[i]) continue;
      const auto& a = levels[i];
      std::uint64_t leak = 0;
      for (auto x : a) {
        auto y = m.apply(x);
        if (y && !std::binary_search(a.begin(), a.end(), *y)) ++leak;
      }
      if (!(Rat(Int(leak), 1) < eps * Rat(Int(a.size()), 1))) in_all[i] = false;
    }
  }
  std::size_t pick = n_levels;
  for (std::size_t i = 0; i < n_levels; ++i)
    if (in_all[i]) {
      pick = i;
      break;
    }
  if (pick == n_levels)
    throw PreconditionViolated("no level set qualifies for every generator");

  NamiokaResult res;
  res.set = levels[pick];
  res.level_index = pick;
  res.level_count = n_levels;
  res.defects = folner_defects(rep, gens, res.set);
  for (const auto& d : res.defects)
    if (!(d.defect() < eps))
      throw InvsemError("extracted level set misses the defect bound");
  return res;
}

std::vector<Rat> empirical_density_report(const XSet& b,
                                          const std::vector<std::vector<std::uint64_t>>& f_seq) {
  std::vector<Rat> out;
  for (const auto& f : f_seq) {
    if (f.empty()) throw InvalidInput("empirical density needs nonempty sets");
    std::uint64_t hits = 0;
    for (auto x : f)
      if (b.contains(x)) ++hits;
    out.push_back(Rat(Int(hits), Int(f.size())));
  }
  return out;
}

}  // namespace invsem
