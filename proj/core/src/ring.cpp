#include "invsem/ring.hpp"

#include <algorithm>

#include "invsem/errors.hpp"

namespace invsem {

CounterElem counter_mul(const CounterElem& x, const CounterElem& y) {
  std::uint64_t len = x.word.size();
  std::uint64_t dropped = y.shift > len ? y.shift - len : 0;
  return {std::max(x.shift, dropped), x.word + y.word};
}

std::vector<CounterElem> counter_ball(std::uint64_t max_shift, std::size_t max_len) {
  std::vector<std::string> words{""};
  std::vector<CounterElem> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : words)
      for (char c : {'a', 'b'}) next.push_back(w + c);
    for (std::uint64_t n = 0; n <= max_shift; ++n)
      for (const auto& w : next) out.push_back({n, w});
    words = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RingElement::RingElement(std::map<TermKey, Rat> terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

RingElement RingElement::add(const RingElement& o) const {
  std::map<TermKey, Rat> out = terms_;
  for (const auto& [k, c] : o.terms_) out[k] += c;
  return RingElement(std::move(out));
}

RingElement RingElement::scale(const Rat& c) const {
  std::map<TermKey, Rat> out;
  if (c != 0)
    for (const auto& [k, v] : terms_) out[k] = v * c;
  return RingElement(std::move(out));
}

TermKey SemigroupRing::mul_keys(const TermKey& a, const TermKey& b) const {
  if (is_preset()) {
    if (!std::holds_alternative<CounterElem>(a) || !std::holds_alternative<CounterElem>(b))
      throw UniverseMismatch("preset ring multiplies counter-example pairs");
    return counter_mul(std::get<CounterElem>(a), std::get<CounterElem>(b));
  }
  if (!std::holds_alternative<std::uint32_t>(a) || !std::holds_alternative<std::uint32_t>(b))
    throw UniverseMismatch("tabulated ring multiplies element indices");
  return table_->mul(std::get<std::uint32_t>(a), std::get<std::uint32_t>(b));
}

RingElement SemigroupRing::mul(const RingElement& x, const RingElement& y) const {
  std::map<TermKey, Rat> out;
  for (const auto& [ka, ca] : x.terms())
    for (const auto& [kb, cb] : y.terms()) out[mul_keys(ka, kb)] += ca * cb;
  return RingElement(std::move(out));
}

AnnihilatorReport annihilator_check(std::uint64_t max_shift, std::size_t max_len) {
  SemigroupRing ring = SemigroupRing::counter_preset();
  RingElement s = RingElement::basis(CounterElem{0, "a"})
                      .add(RingElement::basis(CounterElem{1, "a"}).scale(Rat(-1)));
  AnnihilatorReport rep;
  for (const auto& e : counter_ball(max_shift, max_len)) {
    RingElement prod = ring.mul(RingElement::basis(e), s);
    ++rep.checked;
    if (!prod.is_zero()) {
      rep.all_zero = false;
      if (rep.first_failure.empty())
        rep.first_failure = "(" + std::to_string(e.shift) + "," + e.word + ")";
    }
  }
  return rep;
}

namespace {

/// Reduced row echelon over the union support; returns the reduced rows.
std::vector<std::vector<Rat>> rref(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return rows;
  std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Rat inv = rows[rank][col];
    for (auto& v : rows[rank]) v /= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      Rat f = rows[r][col];
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::pair<std::vector<TermKey>, std::vector<std::vector<Rat>>> to_rows(
    const std::vector<RingElement>& elems) {
  std::vector<TermKey> support;
  for (const auto& e : elems)
    for (const auto& [k, c] : e.terms()) support.push_back(k);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::vector<std::vector<Rat>> rows;
  for (const auto& e : elems) {
    std::vector<Rat> row(support.size(), Rat(0));
    for (const auto& [k, c] : e.terms()) {
      auto it = std::lower_bound(support.begin(), support.end(), k);
      row[static_cast<std::size_t>(it - support.begin())] = c;
    }
    rows.push_back(std::move(row));
  }
  return {std::move(support), std::move(rows)};
}

}  // namespace

Subspace Subspace::span(const std::vector<RingElement>& gens) {
  auto [support, rows] = to_rows(gens);
  auto reduced = rref(std::move(rows));
  Subspace s;
  for (const auto& row : reduced) {
    std::map<TermKey, Rat> terms;
    for (std::size_t c = 0; c < support.size(); ++c)
      if (row[c] != 0) terms[support[c]] = row[c];
    s.basis_.push_back(RingElement(std::move(terms)));
  }
  return s;
}

Rat folner_subspace_defect(const SemigroupRing& ring, const Subspace& w, const RingElement& a) {
  if (w.dimension() == 0) throw ZeroSubspace("defect of the zero subspace");
  std::vector<RingElement> joined = w.basis();
  for (const auto& e : w.basis()) joined.push_back(ring.mul(a, e));
  Subspace big = Subspace::span(joined);
  return Rat(Int(big.dimension()), Int(w.dimension()));
}

Subspace folner_to_subspace(const Semigroup& s, const std::vector<std::uint32_t>& f) {
  if (f.empty()) throw InvalidInput("Folner subset must be nonempty");
  std::vector<RingElement> gens;
  for (auto idx : f) {
    if (idx >= s.size()) throw InvalidInput("element index out of range");
    gens.push_back(RingElement::basis(TermKey(idx)));
  }
  return Subspace::span(gens);
}

std::string term_key_to_string(const TermKey& k, const Semigroup* table) {
  if (std::holds_alternative<CounterElem>(k)) {
    const auto& e = std::get<CounterElem>(k);
    return "(" + std::to_string(e.shift) + "," + e.word + ")";
  }
  std::uint32_t i = std::get<std::uint32_t>(k);
  return table ? table->name(i) : "#" + std::to_string(i);
}

std::string ring_element_to_string(const RingElement& e, const Semigroup* table) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : e.terms()) {
    if (!first) out += " + ";
    out += rat_to_string(c) + "*" + term_key_to_string(k, table);
    first = false;
  }
  return out;
}

}  // namespace invsem
