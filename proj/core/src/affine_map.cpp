#include "invsem/affine_map.hpp"

#include <algorithm>
#include <numeric>

#include "invsem/errors.hpp"

namespace invsem {

namespace {

using I128 = __int128;

std::int64_t positive_mod(I128 v, std::int64_t m) {
  I128 r = v % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

}  // namespace

AffinePartialMap::AffinePartialMap(std::int64_t a, std::int64_t b, std::int64_t c, UPSet domain)
    : a_(a), b_(b), c_(c), domain_(std::move(domain)) {
  if (a_ < 1 || c_ < 1) throw InvsemError("affine map requires a >= 1 and c >= 1");
  // Clip points with negative image.
  if (b_ < 0) {
    std::uint64_t n0 = static_cast<std::uint64_t>((-b_ + a_ - 1) / a_);
    domain_ = domain_.intersect(UPSet::from_threshold(n0));
  }
  // Exactness of the division on the whole domain.
  for (auto n : domain_.prefix()) {
    if (positive_mod(I128(a_) * n + b_, c_) != 0)
      throw NonIntegralComposition("domain point " + std::to_string(n) +
                                   " has non-integral image");
  }
  bool has_tail = false;
  for (std::uint64_t r = 0; r < domain_.period(); ++r) {
    if (!domain_.residues()[r]) continue;
    has_tail = true;
    std::uint64_t t = domain_.threshold();
    std::uint64_t nr = t + ((r + domain_.period() - t % domain_.period()) % domain_.period());
    if (positive_mod(I128(a_) * nr + b_, c_) != 0)
      throw NonIntegralComposition("residue class " + std::to_string(r) +
                                   " has non-integral images");
  }
  if (has_tail && positive_mod(I128(a_) * domain_.period(), c_) != 0)
    throw NonIntegralComposition("period is not compatible with the slope denominator");
  // Reduce the representation.
  std::int64_t g = std::gcd(std::gcd(a_, c_), b_ < 0 ? -b_ : b_);
  if (g == 0) g = std::gcd(a_, c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
  if (domain_.empty()) {
    a_ = 1;
    b_ = 0;
    c_ = 1;
    domain_ = UPSet::empty_set();
  }
}

std::optional<std::uint64_t> AffinePartialMap::apply(std::uint64_t n) const {
  if (!domain_.contains(n)) return std::nullopt;
  I128 v = (I128(a_) * n + b_) / c_;
  return static_cast<std::uint64_t>(v);
}

UPSet AffinePartialMap::range() const { return image(domain_); }

UPSet AffinePartialMap::image(const UPSet& set) const {
  UPSet a = set.intersect(domain_);
  if (a.empty()) return UPSet::empty_set();

  std::vector<std::uint64_t> prefix_images;
  for (auto n : a.prefix()) prefix_images.push_back(*apply(n));

  bool has_tail =
      std::any_of(a.residues().begin(), a.residues().end(), [](bool b) { return b; });
  if (!has_tail) return UPSet::from_points(prefix_images);

  // Lift the period so one slope step maps whole residue classes to classes.
  std::uint64_t p = a.period();
  std::uint64_t g = std::gcd<std::uint64_t>(static_cast<std::uint64_t>(c_),
                                            static_cast<std::uint64_t>(a_) * p);
  std::uint64_t big_p = p * (static_cast<std::uint64_t>(c_) / g);
  std::uint64_t step = static_cast<std::uint64_t>(a_) * big_p / static_cast<std::uint64_t>(c_);

  std::uint64_t t = a.threshold();
  std::vector<std::uint64_t> starts;
  for (std::uint64_t r = 0; r < big_p; ++r) {
    if (!a.residues()[r % p]) continue;
    // Smallest class member >= threshold.
    std::uint64_t nr = t + ((r + big_p - t % big_p) % big_p);
    starts.push_back(static_cast<std::uint64_t>((I128(a_) * nr + b_) / c_));
  }
  std::uint64_t img_threshold = *std::max_element(starts.begin(), starts.end());
  std::vector<bool> img_res(step, false);
  std::vector<std::uint64_t> img_prefix = prefix_images;
  for (auto v0 : starts) {
    img_res[v0 % step] = true;
    for (std::uint64_t v = v0; v < img_threshold; v += step) img_prefix.push_back(v);
  }
  std::vector<std::uint64_t> pre;
  for (auto v : img_prefix)
    if (v < img_threshold) pre.push_back(v);
  // Prefix images at or above the threshold already follow the pattern only if
  // their class is present; fold them via a union instead of assuming so.
  UPSet tail = UPSet::make(img_threshold, step, std::move(img_res), std::move(pre));
  std::vector<std::uint64_t> stragglers;
  for (auto v : prefix_images)
    if (v >= img_threshold && !tail.contains(v)) stragglers.push_back(v);
  if (stragglers.empty()) return tail;
  return tail.unite(UPSet::from_points(stragglers));
}

UPSet AffinePartialMap::preimage(const UPSet& set) const { return inverse().image(set); }

AffinePartialMap AffinePartialMap::inverse() const {
  return AffinePartialMap(c_, -b_, a_, range());
}

AffinePartialMap AffinePartialMap::compose(const AffinePartialMap& inner) const {
  UPSet dom = inner.domain_.intersect(inner.preimage(domain_));
  return AffinePartialMap(a_ * inner.a_, a_ * inner.b_ + b_ * inner.c_, c_ * inner.c_,
                          std::move(dom));
}

std::string AffinePartialMap::to_string() const {
  std::string s = "(" + std::to_string(a_) + "*n";
  if (b_ >= 0)
    s += "+" + std::to_string(b_);
  else
    s += std::to_string(b_);
  s += ")/" + std::to_string(c_) + " on " + domain_.to_string();
  return s;
}

std::optional<AffinePartialMap> parse_affine_map(const std::string& text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](const std::string& tok) {
    skip();
    if (text.compare(i, tok.size(), tok) == 0) {
      i += tok.size();
      return true;
    }
    return false;
  };
  auto parse_int = [&]() -> std::optional<std::int64_t> {
    skip();
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      neg = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      return std::nullopt;
    std::int64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    return neg ? -v : v;
  };

  if (!expect("(")) return std::nullopt;
  auto a = parse_int();
  if (!a || !expect("*n")) return std::nullopt;
  auto b = parse_int();
  if (!b || !expect(")") || !expect("/")) return std::nullopt;
  auto c = parse_int();
  if (!c || !expect("on")) return std::nullopt;
  skip();
  auto dom = parse_upset(text.substr(i));
  if (!dom) return std::nullopt;
  try {
    return AffinePartialMap(*a, *b, *c, *dom);
  } catch (const InvsemError&) {
    return std::nullopt;
  }
}

}  // namespace invsem
