#include "invsem/json_io.hpp"

#include "invsem/errors.hpp"

namespace invsem {

json xset_to_json(const XSet& s) { return s.to_string(); }

XSet xset_from_json(const Universe& u, const json& j) {
  if (!j.is_string()) throw InvalidInput("set literal must be a string");
  auto parsed = parse_xset(u, j.get<std::string>());
  if (!parsed) throw InvalidInput("malformed set literal: " + j.get<std::string>());
  return *parsed;
}

json measure_to_json(const RationalMeasure& m) {
  json j;
  if (m.mode == RationalMeasure::Mode::Atomic) {
    j["mode"] = "atomic";
    json atoms = json::array();
    for (const auto& v : m.atoms) atoms.push_back(rat_to_string(v));
    j["atoms"] = atoms;
    j["mass"] = rat_to_string(m.mass);
  } else {
    j["mode"] = "fragment";
    json entries = json::array();
    for (const auto& [s, v] : m.fragment)
      entries.push_back({{"set", s.to_string()}, {"value", rat_to_string(v)}});
    j["fragment"] = entries;
    j["mass"] = rat_to_string(m.mass);
  }
  return j;
}

json feasibility_to_json(const FeasibilityResult& r) {
  json j;
  if (r.feasible) {
    j["status"] = "feasible";
    j["measure"] = measure_to_json(r.measure);
  } else {
    j["status"] = "infeasible";
    json dual = json::array();
    for (const auto& t : r.dual)
      dual.push_back({{"constraint_id", t.constraint_id},
                      {"coefficient", rat_to_string(t.coefficient)}});
    j["dual"] = {{"combination", dual}};
  }
  return j;
}

json folner_to_json(const Representation& rep, const FolnerCertificate& c) {
  json j;
  j["set"] = c.set;
  j["eps"] = rat_to_string(c.eps);
  j["strict"] = c.strict;
  json defects = json::array();
  for (const auto& d : c.defects)
    defects.push_back({{"word", rep.word_string(d.word)},
                       {"leak", d.leak},
                       {"size", d.size}});
  j["defects"] = defects;
  return j;
}

FolnerCertificate folner_from_json(const Representation& rep, const json& j) {
  FolnerCertificate c;
  c.set = j.at("set").get<std::vector<std::uint64_t>>();
  auto eps = parse_rat(j.at("eps").get<std::string>());
  if (!eps) throw InvalidInput("malformed eps");
  c.eps = *eps;
  c.strict = j.value("strict", false);
  for (const auto& d : j.at("defects")) {
    auto w = parse_word(d.at("word").get<std::string>(), rep.generator_names());
    if (!w) throw InvalidInput("unknown word in certificate");
    c.defects.push_back({*w, d.at("leak").get<std::uint64_t>(), d.at("size").get<std::uint64_t>()});
  }
  return c;
}

json leveled_set_to_json(const LeveledSet& s) {
  json levels = json::array();
  for (const auto& [l, set] : s.levels())
    levels.push_back({{"level", l}, {"set", set.to_string()}});
  return levels;
}

LeveledSet leveled_set_from_json(const Universe& u, const json& j) {
  std::vector<std::pair<std::uint32_t, XSet>> levels;
  for (const auto& e : j)
    levels.emplace_back(e.at("level").get<std::uint32_t>(), xset_from_json(u, e.at("set")));
  return LeveledSet(std::move(levels));
}

json equi_witness_to_json(const Representation& rep, const EquiWitness& w) {
  json j;
  j["source"] = leveled_set_to_json(w.source);
  j["target"] = leveled_set_to_json(w.target);
  json pieces = json::array();
  for (const auto& p : w.pieces)
    pieces.push_back({{"set", p.set.to_string()},
                      {"level_from", p.level_from},
                      {"word", rep.word_string(p.word)},
                      {"level_to", p.level_to}});
  j["pieces"] = pieces;
  return j;
}

EquiWitness equi_witness_from_json(const Representation& rep, const json& j) {
  EquiWitness w;
  w.source = leveled_set_from_json(rep.universe(), j.at("source"));
  w.target = leveled_set_from_json(rep.universe(), j.at("target"));
  for (const auto& p : j.at("pieces")) {
    auto word = parse_word(p.at("word").get<std::string>(), rep.generator_names());
    if (!word) throw InvalidInput("unknown generator in witness word");
    w.pieces.push_back({xset_from_json(rep.universe(), p.at("set")),
                        p.at("level_from").get<std::uint32_t>(), *word,
                        p.at("level_to").get<std::uint32_t>()});
  }
  return w;
}

json paradox_witness_to_json(const Representation& rep, const ParadoxWitness& w) {
  json j;
  j["target"] = w.target.to_string();
  auto side = [&](const std::vector<ParadoxPiece>& pieces) {
    json arr = json::array();
    for (const auto& p : pieces)
      arr.push_back({{"set", p.set.to_string()}, {"word", rep.word_string(p.word)}});
    return arr;
  };
  j["pieces_a"] = side(w.pieces_a);
  j["pieces_b"] = side(w.pieces_b);
  return j;
}

ParadoxWitness paradox_witness_from_json(const Representation& rep, const json& j) {
  ParadoxWitness w;
  w.target = xset_from_json(rep.universe(), j.at("target"));
  auto side = [&](const json& arr) {
    std::vector<ParadoxPiece> pieces;
    for (const auto& p : arr) {
      auto word = parse_word(p.at("word").get<std::string>(), rep.generator_names());
      if (!word) throw InvalidInput("unknown generator in witness word");
      pieces.push_back({xset_from_json(rep.universe(), p.at("set")), *word});
    }
    return pieces;
  };
  w.pieces_a = side(j.at("pieces_a"));
  w.pieces_b = side(j.at("pieces_b"));
  return w;
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

}  // namespace invsem
