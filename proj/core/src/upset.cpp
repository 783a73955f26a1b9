#include "invsem/upset.hpp"

#include <algorithm>
#include <numeric>

#include "invsem/errors.hpp"

namespace invsem {

namespace {

constexpr std::uint64_t kMaxPeriod = 1ull << 22;

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t l = a / g * b;
  if (l > kMaxPeriod) throw InvsemError("UPSet period exceeds supported bound");
  return l;
}

}  // namespace

UPSet UPSet::make(std::uint64_t threshold, std::uint64_t period, std::vector<bool> residues,
                  std::vector<std::uint64_t> prefix_members) {
  if (period == 0 || residues.size() != period)
    throw InvsemError("UPSet: residue vector must have length == period >= 1");
  if (period > kMaxPeriod) throw InvsemError("UPSet period exceeds supported bound");
  UPSet s;
  s.threshold_ = threshold;
  s.period_ = period;
  s.residues_ = std::move(residues);
  std::sort(prefix_members.begin(), prefix_members.end());
  prefix_members.erase(std::unique(prefix_members.begin(), prefix_members.end()),
                       prefix_members.end());
  for (auto p : prefix_members)
    if (p < threshold) s.prefix_.push_back(p);
  s.canonicalize();
  return s;
}

UPSet UPSet::naturals() { return make(0, 1, {true}, {}); }

UPSet UPSet::from_points(const std::vector<std::uint64_t>& pts) {
  std::uint64_t t = 0;
  for (auto p : pts) t = std::max(t, p + 1);
  return make(t, 1, {false}, pts);
}

UPSet UPSet::residue_classes(std::uint64_t period, const std::vector<std::uint64_t>& residues) {
  std::vector<bool> r(period, false);
  for (auto x : residues) {
    if (x >= period) throw InvsemError("residue out of range");
    r[x] = true;
  }
  return make(0, period, std::move(r), {});
}

UPSet UPSet::from_threshold(std::uint64_t lo) { return make(lo, 1, {true}, {}); }

UPSet UPSet::interval(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> pts;
  for (std::uint64_t n = lo; n < hi; ++n) pts.push_back(n);
  return from_points(pts);
}

bool UPSet::contains(std::uint64_t n) const {
  if (n < threshold_) return std::binary_search(prefix_.begin(), prefix_.end(), n);
  return residues_[n % period_];
}

bool UPSet::empty() const {
  if (!prefix_.empty()) return false;
  return std::none_of(residues_.begin(), residues_.end(), [](bool b) { return b; });
}

std::optional<std::uint64_t> UPSet::cardinality() const {
  if (std::any_of(residues_.begin(), residues_.end(), [](bool b) { return b; }))
    return std::nullopt;
  return prefix_.size();
}

Rat UPSet::natural_density() const {
  std::uint64_t on = static_cast<std::uint64_t>(
      std::count(residues_.begin(), residues_.end(), true));
  return Rat(Int(on), Int(period_));
}

void UPSet::canonicalize() {
  // Minimal period: smallest divisor of period_ that reproduces the pattern.
  for (std::uint64_t d = 1; d <= period_; ++d) {
    if (period_ % d != 0) continue;
    bool ok = true;
    for (std::uint64_t i = 0; i < period_ && ok; ++i)
      if (residues_[i] != residues_[i % d]) ok = false;
    if (ok) {
      residues_.resize(d);
      period_ = d;
      break;
    }
  }
  // Minimal threshold: absorb prefix points that already follow the pattern.
  while (threshold_ > 0) {
    std::uint64_t n = threshold_ - 1;
    bool member = !prefix_.empty() && prefix_.back() == n;
    if (member != static_cast<bool>(residues_[n % period_])) break;
    if (member) prefix_.pop_back();
    threshold_ = n;
  }
}

UPSet UPSet::unite(const UPSet& o) const {
  std::uint64_t p = lcm_checked(period_, o.period_);
  std::uint64_t t = std::max(threshold_, o.threshold_);
  std::vector<bool> r(p);
  for (std::uint64_t i = 0; i < p; ++i) r[i] = residues_[i % period_] || o.residues_[i % o.period_];
  std::vector<std::uint64_t> pre;
  for (std::uint64_t n = 0; n < t; ++n)
    if (contains(n) || o.contains(n)) pre.push_back(n);
  return make(t, p, std::move(r), std::move(pre));
}

UPSet UPSet::intersect(const UPSet& o) const {
  std::uint64_t p = lcm_checked(period_, o.period_);
  std::uint64_t t = std::max(threshold_, o.threshold_);
  std::vector<bool> r(p);
  for (std::uint64_t i = 0; i < p; ++i) r[i] = residues_[i % period_] && o.residues_[i % o.period_];
  std::vector<std::uint64_t> pre;
  for (std::uint64_t n = 0; n < t; ++n)
    if (contains(n) && o.contains(n)) pre.push_back(n);
  return make(t, p, std::move(r), std::move(pre));
}

UPSet UPSet::difference(const UPSet& o) const { return intersect(o.complement()); }

UPSet UPSet::complement() const {
  std::vector<bool> r(period_);
  for (std::uint64_t i = 0; i < period_; ++i) r[i] = !residues_[i];
  std::vector<std::uint64_t> pre;
  for (std::uint64_t n = 0; n < threshold_; ++n)
    if (!contains(n)) pre.push_back(n);
  return make(threshold_, period_, std::move(r), std::move(pre));
}

bool UPSet::is_subset_of(const UPSet& o) const { return difference(o).empty(); }

std::vector<std::uint64_t> UPSet::members_below(std::uint64_t bound) const {
  std::vector<std::uint64_t> out;
  for (auto p : prefix_)
    if (p < bound) out.push_back(p);
  for (std::uint64_t n = threshold_; n < bound; ++n)
    if (residues_[n % period_]) out.push_back(n);
  return out;
}

std::optional<std::uint64_t> UPSet::min_element() const {
  if (!prefix_.empty()) return prefix_.front();
  for (std::uint64_t n = threshold_; n < threshold_ + period_; ++n)
    if (residues_[n % period_]) return n;
  return std::nullopt;
}

std::string UPSet::to_string() const {
  auto join = [](const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s;
  };
  if (cardinality().has_value()) return "{" + join(prefix_) + "}";
  std::vector<std::uint64_t> rs;
  for (std::uint64_t i = 0; i < period_; ++i)
    if (residues_[i]) rs.push_back(i);
  std::string s = "{" + join(rs) + " mod " + std::to_string(period_);
  if (threshold_ > 0) {
    s += " | n >= " + std::to_string(threshold_);
    std::vector<std::uint64_t> plus, minus;
    for (std::uint64_t n = 0; n < threshold_; ++n) {
      bool member = contains(n);
      bool pattern = residues_[n % period_];
      if (member && !pattern) plus.push_back(n);
      if (!member && pattern) minus.push_back(n);
    }
    if (!plus.empty()) s += "; +{" + join(plus) + "}";
    if (!minus.empty()) s += "; -{" + join(minus) + "}";
  }
  return s + "}";
}

namespace {

void skip_ws(const std::string& t, std::size_t& i) {
  while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
}

std::optional<std::uint64_t> parse_nat(const std::string& t, std::size_t& i) {
  skip_ws(t, i);
  if (i >= t.size() || !std::isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
  std::uint64_t v = 0;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
    v = v * 10 + static_cast<std::uint64_t>(t[i] - '0');
    ++i;
  }
  return v;
}

std::optional<std::vector<std::uint64_t>> parse_nat_list(const std::string& t, std::size_t& i) {
  std::vector<std::uint64_t> out;
  skip_ws(t, i);
  while (true) {
    auto v = parse_nat(t, i);
    if (!v) return out;  // empty list allowed
    out.push_back(*v);
    skip_ws(t, i);
    if (i < t.size() && t[i] == ',') {
      ++i;
      continue;
    }
    return out;
  }
}

bool expect(const std::string& t, std::size_t& i, const std::string& tok) {
  skip_ws(t, i);
  if (t.compare(i, tok.size(), tok) == 0) {
    i += tok.size();
    return true;
  }
  return false;
}

}  // namespace

std::optional<UPSet> parse_upset(const std::string& text) {
  std::size_t i = 0;
  if (!expect(text, i, "{")) return std::nullopt;
  auto first = parse_nat_list(text, i);
  if (!first) return std::nullopt;
  skip_ws(text, i);
  if (expect(text, i, "}")) {
    skip_ws(text, i);
    if (i != text.size()) return std::nullopt;
    return UPSet::from_points(*first);
  }
  if (!expect(text, i, "mod")) return std::nullopt;
  auto period = parse_nat(text, i);
  if (!period || *period == 0) return std::nullopt;
  std::uint64_t threshold = 0;
  std::vector<std::uint64_t> plus, minus;
  if (expect(text, i, "|")) {
    if (!expect(text, i, "n") || !expect(text, i, ">=")) return std::nullopt;
    auto t = parse_nat(text, i);
    if (!t) return std::nullopt;
    threshold = *t;
  }
  while (expect(text, i, ";")) {
    skip_ws(text, i);
    bool is_plus;
    if (expect(text, i, "+{"))
      is_plus = true;
    else if (expect(text, i, "-{"))
      is_plus = false;
    else
      return std::nullopt;
    auto lst = parse_nat_list(text, i);
    if (!lst || !expect(text, i, "}")) return std::nullopt;
    auto& dst = is_plus ? plus : minus;
    dst.insert(dst.end(), lst->begin(), lst->end());
  }
  if (!expect(text, i, "}")) return std::nullopt;
  skip_ws(text, i);
  if (i != text.size()) return std::nullopt;

  std::vector<bool> residues(*period, false);
  for (auto r : *first) {
    if (r >= *period) return std::nullopt;
    residues[r] = true;
  }
  std::vector<std::uint64_t> prefix;
  for (std::uint64_t n = 0; n < threshold; ++n) {
    bool member = residues[n % *period];
    if (std::find(plus.begin(), plus.end(), n) != plus.end()) member = true;
    if (std::find(minus.begin(), minus.end(), n) != minus.end()) member = false;
    if (member) prefix.push_back(n);
  }
  for (auto p : plus)
    if (p >= threshold) return std::nullopt;
  for (auto m : minus)
    if (m >= threshold) return std::nullopt;
  try {
    return UPSet::make(threshold, *period, std::move(residues), std::move(prefix));
  } catch (const InvsemError&) {
    return std::nullopt;
  }
}

}  // namespace invsem
