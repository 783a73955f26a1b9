#include "invsem/representation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "invsem/errors.hpp"

namespace invsem {

Representation::Representation(Universe universe, std::vector<std::string> gen_names,
                               std::vector<XMap> gen_maps)
    : universe_(universe), gen_names_(std::move(gen_names)), gen_maps_(std::move(gen_maps)) {
  if (gen_names_.size() != gen_maps_.size())
    throw InvalidInput("generator names and maps differ in length");
  for (const auto& m : gen_maps_)
    if (!(m.universe() == universe_)) throw UniverseMismatch("generator over wrong universe");
}

XMap Representation::eval(const Word& w) const {
  XMap acc = XMap::identity(universe_);
  // Rightmost letter is applied first; fold right-to-left keeps the domain
  // bookkeeping exact under partial-map composition.
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (it->gen >= gen_maps_.size()) throw InvalidInput("word uses unknown generator");
    XMap g = gen_maps_[it->gen];
    if (it->starred) g = g.inverse();
    acc = g.compose(acc);
  }
  return acc;
}

XSet Representation::domain_of(const Word& w) const { return eval(w).domain(); }

XSet Representation::act(const Word& w, const XSet& a) const {
  XMap m = eval(w);
  return m.image(a.intersect(m.domain()));
}

XSet Representation::preimage_act(const Word& w, const XSet& a) const {
  XMap m = eval(w);
  return m.preimage(a.intersect(m.range()));
}

std::vector<Word> Representation::words_up_to(std::size_t max_len) const {
  std::vector<Word> out;
  std::map<std::string, bool> seen;  // canonical map key
  auto key = [&](const XMap& m) { return m.to_string(); };
  std::vector<Word> frontier{Word::unit()};
  out.push_back(Word::unit());
  seen[key(XMap::identity(universe_))] = true;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (std::uint32_t g = 0; g < gen_maps_.size(); ++g) {
        for (bool st : {false, true}) {
          Word cand = w.concat(Word::gen(g, st));
          auto k = key(eval(cand));
          next.push_back(cand);
          if (!seen[k]) {
            seen[k] = true;
            out.push_back(cand);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<std::uint64_t> Representation::step_targets(std::uint64_t x) const {
  std::vector<std::uint64_t> out;
  for (const auto& g : gen_maps_) {
    if (auto y = g.apply(x)) out.push_back(*y);
    if (auto y = g.inverse().apply(x)) out.push_back(*y);
  }
  return out;
}

ApproxClasses approx_classes(const Representation& rep,
                             const std::vector<std::uint64_t>& window,
                             std::size_t word_bound) {
  std::size_t n = window.size();
  std::map<std::uint64_t, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[window[i]] = i;

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  // BFS ball of radius word_bound from each window point; every reached
  // window point is joined, which closes the bounded relation transitively.
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::uint64_t> visited{window[i]};
    std::vector<std::uint64_t> frontier{window[i]};
    for (std::size_t depth = 0; depth < word_bound && !frontier.empty(); ++depth) {
      std::vector<std::uint64_t> next;
      for (auto x : frontier) {
        for (auto y : rep.step_targets(x)) {
          if (visited.insert(y).second) {
            next.push_back(y);
            auto it = pos.find(y);
            if (it != pos.end()) unite(i, it->second);
          }
        }
      }
      frontier = std::move(next);
    }
  }

  ApproxClasses res;
  res.word_bound = word_bound;
  res.class_of.resize(n);
  std::map<std::size_t, std::uint32_t> relabel;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    auto [it, fresh] = relabel.emplace(r, static_cast<std::uint32_t>(relabel.size()));
    res.class_of[i] = it->second;
  }
  res.class_count = static_cast<std::uint32_t>(relabel.size());
  return res;
}

}  // namespace invsem
