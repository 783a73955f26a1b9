#include "invsem/presets.hpp"

#include <algorithm>

#include "invsem/errors.hpp"

namespace invsem {

std::vector<PartialBijection> all_partial_injections(std::size_t n) {
  std::vector<PartialBijection> out;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t src) {
    if (src == n) {
      out.emplace_back(n, pairs);
      return;
    }
    rec(src + 1);  // src not in the domain
    for (std::uint64_t tgt = 0; tgt < n; ++tgt) {
      if (used[tgt]) continue;
      used[tgt] = true;
      pairs.emplace_back(src, tgt);
      rec(src + 1);
      pairs.pop_back();
      used[tgt] = false;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Preset make_day2() {
  // {1, a, b} with ab = aa = a and ba = bb = b; not inverse.
  Preset p;
  p.name = "day2";
  std::vector<std::vector<std::uint32_t>> t{{0, 0}, {1, 1}};
  p.semigroup = Semigroup::from_table(t, {"a", "b"}).unitized();
  return p;
}

Preset from_generators(std::string name, const std::vector<PartialBijection>& gens,
                       const std::vector<std::string>& gen_names) {
  Preset p;
  p.name = std::move(name);
  ClosureResult closure = generate_closure(gens, 100000, gen_names);
  p.inverse = closure.semigroup;
  p.semigroup = closure.semigroup;
  p.embedding = closure.embedding;
  std::size_t universe = gens[0].universe_size();
  std::vector<XMap> maps;
  for (const auto& g : gens) maps.emplace_back(g);
  p.rep = Representation(Universe::finite(universe), gen_names, maps);
  return p;
}

Preset make_symmetric_inverse(std::size_t n) {
  if (n < 1 || n > 4) throw InvalidInput("symmetric_inverse supports 1 <= n <= 4");
  // Generators: single-point maps, the basic transposition and cycle, and a
  // corank-one partial identity; together they generate every partial
  // injection, which the element count verifies.
  std::vector<PartialBijection> gens;
  std::vector<std::string> names;
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j) {
      gens.emplace_back(n, std::vector<std::pair<std::uint64_t, std::uint64_t>>{{i, j}});
      names.push_back("p" + std::to_string(i) + std::to_string(j));
    }
  if (n >= 2) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> swap{{0, 1}, {1, 0}};
    for (std::uint64_t k = 2; k < n; ++k) swap.emplace_back(k, k);
    gens.emplace_back(n, swap);
    names.push_back("t01");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> cyc;
    for (std::uint64_t k = 0; k < n; ++k) cyc.emplace_back(k, (k + 1) % n);
    gens.emplace_back(n, cyc);
    names.push_back("c");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> part;
    for (std::uint64_t k = 1; k < n; ++k) part.emplace_back(k, k);
    gens.emplace_back(n, part);
    names.push_back("e0");
  }
  Preset p = from_generators("symmetric_inverse_" + std::to_string(n), gens, names);
  std::size_t expected = all_partial_injections(n).size();
  if (p.inverse->size() != expected)
    throw InvsemError("symmetric inverse monoid closure has wrong size");
  return p;
}

Preset make_brandt5() {
  // Closure of a single point map 0 -> 1 on {0, 1}: the Brandt semigroup
  // B2 = {a, a*, a*a, aa*, 0} with the identity adjoined.
  PartialBijection a(2, {{0, 1}});
  Preset p = from_generators("brandt5", {a}, {"a"});
  if (p.inverse->size() != 6) throw InvsemError("brandt5 closure has wrong size");
  return p;
}

Preset make_cyclic(std::size_t n) {
  if (n < 1 || n > 12) throw InvalidInput("cyclic supports 1 <= n <= 12");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> shift;
  for (std::uint64_t k = 0; k < n; ++k) shift.emplace_back(k, (k + 1) % n);
  Preset p = from_generators("cyclic_" + std::to_string(n),
                             {PartialBijection(n, shift)}, {"c"});
  if (p.inverse->size() != n) throw InvsemError("cyclic group closure has wrong size");
  return p;
}

Preset make_bicyclic() {
  Preset p;
  p.name = "bicyclic_on_N";
  AffinePartialMap up(1, 1, 1, UPSet::naturals());
  p.rep = Representation(Universe::naturals(), {"a"}, {XMap(up)});
  return p;
}

Preset make_cuntz2() {
  Preset p;
  p.name = "cuntz2_on_N";
  AffinePartialMap d0(2, 0, 1, UPSet::naturals());
  AffinePartialMap d1(2, 1, 1, UPSet::naturals());
  p.rep = Representation(Universe::naturals(), {"d0", "d1"}, {XMap(d0), XMap(d1)});
  return p;
}

Preset make_f2plus() {
  Preset p;
  p.name = "f2plus_semidirect";
  p.ring_preset = true;
  return p;
}

}  // namespace

Preset load_preset(const std::string& raw) {
  std::string name = raw;
  // Accept foo(3) as foo_3.
  auto open = name.find('(');
  if (open != std::string::npos && name.back() == ')') {
    name = name.substr(0, open) + "_" + name.substr(open + 1, name.size() - open - 2);
  }
  if (name == "day2") return make_day2();
  if (name == "brandt5") return make_brandt5();
  if (name == "bicyclic_on_N") return make_bicyclic();
  if (name == "cuntz2_on_N") return make_cuntz2();
  if (name == "f2plus_semidirect") return make_f2plus();
  auto starts_with = [&](const std::string& prefix) {
    return name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0;
  };
  if (starts_with("symmetric_inverse_"))
    return make_symmetric_inverse(std::stoul(name.substr(18)));
  if (starts_with("cyclic_")) return make_cyclic(std::stoul(name.substr(7)));
  throw InvalidInput("unknown preset: " + raw);
}

std::vector<std::string> preset_names() {
  return {"day2",          "symmetric_inverse_2", "symmetric_inverse_3",
          "brandt5",       "cyclic_2",            "cyclic_3",
          "cyclic_4",      "cyclic_5",            "bicyclic_on_N",
          "cuntz2_on_N",   "f2plus_semidirect"};
}

}  // namespace invsem
