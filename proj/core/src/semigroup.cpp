#include "invsem/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "invsem/errors.hpp"

namespace invsem {

namespace {
constexpr std::size_t kAssocVerifyLimit = 512;
}

Semigroup Semigroup::from_table(std::vector<std::vector<std::uint32_t>> table,
                                std::vector<std::string> names, bool verify) {
  Semigroup s;
  s.n_ = table.size();
  s.table_.resize(s.n_ * s.n_);
  for (std::size_t i = 0; i < s.n_; ++i) {
    if (table[i].size() != s.n_) throw InvalidInput("multiplication table is not square");
    for (std::size_t j = 0; j < s.n_; ++j) {
      if (table[i][j] >= s.n_) throw InvalidInput("table entry out of range");
      s.table_[i * s.n_ + j] = table[i][j];
    }
  }
  s.names_ = std::move(names);
  s.finish_init();
  if (verify && s.n_ <= kAssocVerifyLimit) {
    std::string ce;
    if (!s.is_associative(&ce)) throw InvalidInput("table is not associative: " + ce);
  }
  return s;
}

void Semigroup::finish_init() {
  if (names_.size() != n_) {
    names_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      if (names_[i].empty()) names_[i] = "#" + std::to_string(i);
  }
  unit_.reset();
  zero_.reset();
  for (std::uint32_t e = 0; e < n_; ++e) {
    bool is_unit = true, is_zero = true;
    for (std::uint32_t x = 0; x < n_; ++x) {
      if (mul(e, x) != x || mul(x, e) != x) is_unit = false;
      if (mul(e, x) != e || mul(x, e) != e) is_zero = false;
    }
    if (is_unit && !unit_) unit_ = e;
    if (is_zero && !zero_) zero_ = e;
  }
}

bool Semigroup::is_associative(std::string* counterexample) const {
  for (std::uint32_t a = 0; a < n_; ++a)
    for (std::uint32_t b = 0; b < n_; ++b)
      for (std::uint32_t c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          if (counterexample)
            *counterexample = "(" + names_[a] + "," + names_[b] + "," + names_[c] + ")";
          return false;
        }
  return true;
}

Semigroup Semigroup::unitized() const {
  if (unit_) return *this;
  Semigroup s;
  s.n_ = n_ + 1;
  s.table_.resize(s.n_ * s.n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) s.table_[i * s.n_ + j] = table_[i * n_ + j];
  std::uint32_t one = static_cast<std::uint32_t>(n_);
  for (std::uint32_t x = 0; x < s.n_; ++x) {
    s.table_[one * s.n_ + x] = x;
    s.table_[x * s.n_ + one] = x;
  }
  s.names_ = names_;
  s.names_.push_back("1");
  s.finish_init();
  return s;
}

FiniteSet Semigroup::act(std::uint32_t s, const FiniteSet& a) const {
  FiniteSet out(n_);
  for (auto t : a.points()) out.insert(mul(s, static_cast<std::uint32_t>(t)));
  return out;
}

FiniteSet Semigroup::preimage(std::uint32_t s, const FiniteSet& a) const {
  FiniteSet out(n_);
  for (std::uint32_t t = 0; t < n_; ++t)
    if (a.contains(mul(s, t))) out.insert(t);
  return out;
}

InverseSemigroup InverseSemigroup::from_semigroup(const Semigroup& s) {
  InverseSemigroup inv;
  static_cast<Semigroup&>(inv) = s;
  std::size_t n = s.size();
  inv.star_.assign(n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::optional<std::uint32_t> found;
    for (std::uint32_t t = 0; t < n; ++t) {
      if (s.mul(s.mul(x, t), x) == x && s.mul(s.mul(t, x), t) == t) {
        if (found) throw InvalidInput("element " + s.name(x) + " has two generalized inverses");
        found = t;
      }
    }
    if (!found) throw InvalidInput("element " + s.name(x) + " has no generalized inverse");
    inv.star_[x] = *found;
  }
  // Idempotents must commute pairwise and be self-star.
  for (std::uint32_t e = 0; e < n; ++e) {
    if (!inv.is_idempotent(e)) continue;
    if (inv.star_[e] != e) throw InvalidInput("idempotent " + s.name(e) + " is not self-star");
    for (std::uint32_t f = 0; f < n; ++f)
      if (inv.is_idempotent(f) && s.mul(e, f) != s.mul(f, e))
        throw InvalidInput("idempotents " + s.name(e) + ", " + s.name(f) + " do not commute");
  }
  return inv;
}

InverseSemigroup InverseSemigroup::from_table(std::vector<std::vector<std::uint32_t>> table,
                                              std::vector<std::string> names) {
  return from_semigroup(Semigroup::from_table(std::move(table), std::move(names)));
}

std::vector<std::uint32_t> InverseSemigroup::idempotents() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t e = 0; e < n_; ++e)
    if (is_idempotent(e)) out.push_back(e);
  return out;
}

bool InverseSemigroup::natural_order(std::uint32_t e, std::uint32_t f) const {
  return mul(e, f) == e;
}

std::vector<std::uint32_t> InverseSemigroup::minimal_projections() const {
  auto es = idempotents();
  std::vector<std::uint32_t> out;
  for (auto e : es) {
    bool minimal = true;
    for (auto f : es)
      if (f != e && natural_order(f, e)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(e);
  }
  return out;
}

ClosureResult generate_closure(const std::vector<PartialBijection>& generators, std::size_t cap,
                               const std::vector<std::string>& names) {
  if (generators.empty()) throw InvalidInput("closure needs at least one generator");
  if (cap < 1) throw InvalidInput("cap must be at least 1");
  std::size_t universe = generators[0].universe_size();
  for (const auto& g : generators)
    if (g.universe_size() != universe)
      throw UniverseMismatch("generators act on different universes");

  std::vector<PartialBijection> elems;
  std::map<PartialBijection, std::uint32_t> index;
  std::vector<std::string> elem_names;
  auto add = [&](const PartialBijection& m, const std::string& name) -> std::uint32_t {
    auto it = index.find(m);
    if (it != index.end()) return it->second;
    if (elems.size() >= cap) throw CapExceeded(elems.size(), cap);
    std::uint32_t id = static_cast<std::uint32_t>(elems.size());
    elems.push_back(m);
    index.emplace(m, id);
    elem_names.push_back(name.empty() ? "#" + std::to_string(id) : name);
    return id;
  };

  add(PartialBijection::identity(universe), "1");
  for (std::size_t i = 0; i < generators.size(); ++i)
    add(generators[i], i < names.size() ? names[i] : "g" + std::to_string(i));

  // Breadth-first closure under star and two-sided products.
  for (std::size_t head = 0; head < elems.size(); ++head) {
    PartialBijection cur = elems[head];
    add(cur.inverse(), "");
    for (std::size_t j = 0; j <= head && j < elems.size(); ++j) {
      PartialBijection other = elems[j];
      add(cur.compose(other), "");
      add(other.compose(cur), "");
    }
  }

  std::size_t n = elems.size();
  std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(elems[i].compose(elems[j]));
      if (it == index.end()) throw InvsemError("closure not closed under products");
      table[i][j] = it->second;
    }
  ClosureResult res;
  // Map composition is associative, so skip the table re-verification.
  res.semigroup =
      InverseSemigroup::from_semigroup(Semigroup::from_table(std::move(table), elem_names, false));
  res.embedding = std::move(elems);
  return res;
}

LemmaSetsReport lemma_sets_check(const InverseSemigroup& sgp, std::uint32_t s,
                                 const FiniteSet& a, const FiniteSet& b) {
  LemmaSetsReport rep;
  auto fail = [&](const std::string& what) {
    if (rep.pass) {
      rep.pass = false;
      rep.first_violation = what;
    }
  };
  std::uint32_t st = sgp.star(s);
  std::uint32_t ss_star = sgp.mul(s, st);   // ss*
  std::uint32_t star_ss = sgp.mul(st, s);   // s*s

  FiniteSet pre = sgp.preimage(s, a);                       // s^{-1}A
  FiniteSet lhs1 = sgp.act(s, pre.intersect(sgp.act(star_ss, pre)));
  FiniteSet mid1 = a.intersect(sgp.act(ss_star, a));
  FiniteSet rhs1 = sgp.act(s, pre);                         // s s^{-1} A
  if (!(lhs1 == mid1)) fail("(i) s(s^-1A ∩ s*s s^-1A) != A ∩ ss*A");
  if (!(mid1 == rhs1)) fail("(i) A ∩ ss*A != s s^-1 A");
  if (!rhs1.is_subset_of(a)) fail("(i) s s^-1 A not within A");
  if (!a.is_subset_of(sgp.preimage(s, sgp.act(s, a)))) fail("(i) A not within s^-1 s A");

  FiniteSet mid2 = a.intersect(sgp.act(ss_star, b));
  if (!(sgp.act(ss_star, mid2) == mid2)) fail("(ii) ss*(A ∩ ss*B) != A ∩ ss*B");

  FiniteSet diff = a.difference(sgp.act(ss_star, a));
  if (!sgp.preimage(s, diff).empty()) fail("(iii) s^-1(A \\ ss*A) not empty");
  return rep;
}

GroupImage max_group_image(const InverseSemigroup& s) {
  std::size_t n = s.size();
  // Union-find over s ~ t iff es = et for some idempotent e.
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  auto es = s.idempotents();
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = x + 1; y < n; ++y)
      for (auto e : es)
        if (s.mul(e, x) == s.mul(e, y)) {
          unite(x, y);
          break;
        }

  std::vector<std::uint32_t> class_of(n);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t r = find(x);
    if (r == x) {
      class_of[x] = static_cast<std::uint32_t>(reps.size());
      reps.push_back(x);
    }
  }
  for (std::uint32_t x = 0; x < n; ++x) class_of[x] = class_of[find(x)];

  std::size_t m = reps.size();
  std::vector<std::vector<std::uint32_t>> table(m, std::vector<std::uint32_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i][j] = class_of[s.mul(reps[i], reps[j])];
  // The quotient map must be a homomorphism on all pairs, not only on reps.
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if (class_of[s.mul(x, y)] != table[class_of[x]][class_of[y]])
        throw InvsemError("quotient relation is not a congruence");

  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i) names[i] = "[" + s.name(reps[i]) + "]";
  GroupImage img;
  img.group = InverseSemigroup::from_table(std::move(table), std::move(names));
  if (img.group.idempotents().size() != 1)
    throw InvsemError("maximal group image has more than one idempotent");
  img.quotient_map = std::move(class_of);
  return img;
}

bool klawe_check(const Semigroup& sgp) {
  std::size_t n = sgp.size();
  for (std::uint32_t s = 0; s < n; ++s)
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y) {
        if (sgp.mul(s, x) != sgp.mul(s, y)) continue;
        bool ok = false;
        for (std::uint32_t t = 0; t < n && !ok; ++t) ok = sgp.mul(x, t) == sgp.mul(y, t);
        if (!ok) return false;
      }
  return true;
}

std::vector<std::uint32_t> eventually_minimal_chain(const InverseSemigroup& s) {
  auto es = s.idempotents();
  std::vector<std::uint32_t> chain;
  std::uint32_t cur = 0;
  for (std::size_t i = 0; i < es.size(); ++i) {
    cur = i == 0 ? es[0] : s.mul(cur, es[i]);
    chain.push_back(cur);
  }
  if (!chain.empty()) {
    for (std::size_t i = 1; i < chain.size(); ++i)
      if (!s.natural_order(chain[i], chain[i - 1]))
        throw InvsemError("projection chain is not decreasing");
    for (auto f : es)
      if (!s.natural_order(chain.back(), f))
        throw InvsemError("projection chain did not reach the minimum");
  }
  return chain;
}

std::size_t principal_left_ideal_size(const Semigroup& s, std::uint32_t a) {
  std::vector<bool> seen(s.size(), false);
  for (std::uint32_t x = 0; x < s.size(); ++x) seen[s.mul(x, a)] = true;
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

std::uint32_t min_projection_from_finite_ideal(const InverseSemigroup& s, std::uint32_t a) {
  std::size_t n = s.size();
  // One representative s_i per element of Sa.
  std::vector<std::optional<std::uint32_t>> rep(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t v = s.mul(x, a);
    if (!rep[v]) rep[v] = x;
  }
  std::optional<std::uint32_t> e;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!rep[v]) continue;
    std::uint32_t si = *rep[v];
    std::uint32_t proj = s.mul(s.star(si), si);
    e = e ? s.mul(*e, proj) : proj;
  }
  std::uint32_t result = s.mul(*e, s.mul(a, s.star(a)));
  if (!s.is_idempotent(result)) throw NotMinimal("constructed element is not idempotent");
  for (auto f : s.idempotents())
    if (!s.natural_order(result, f)) throw NotMinimal("constructed projection is not minimal");
  for (std::uint32_t x = 0; x < n; ++x)
    if (s.mul(result, x) != s.mul(x, result))
      throw NotMinimal("minimal projection fails to commute");
  return result;
}

}  // namespace invsem
