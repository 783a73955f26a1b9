#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "invsem/affine_map.hpp"
#include "invsem/errors.hpp"
#include "invsem/finite_set.hpp"
#include "invsem/upset.hpp"

using namespace invsem;
using invsem::test::Rng;
using invsem::test::random_upset;

namespace {
const UPSet evens = UPSet::residue_classes(2, {0});
const UPSet odds = UPSet::residue_classes(2, {1});
}  // namespace

TEST_CASE("finite set boolean algebra") {
  FiniteSet a(5, {0, 2, 4});
  FiniteSet b(5, {1, 2});
  CHECK(a.unite(b).points() == std::vector<std::uint64_t>{0, 1, 2, 4});
  CHECK(a.intersect(b).points() == std::vector<std::uint64_t>{2});
  CHECK(a.difference(b).points() == std::vector<std::uint64_t>{0, 4});
  CHECK(a.complement().points() == std::vector<std::uint64_t>{1, 3});
  CHECK(a.intersect(b).is_subset_of(a));
  CHECK_THROWS_AS(a.unite(FiniteSet(4)), UniverseMismatch);
}

TEST_CASE("complement of evens is odds") {
  CHECK(evens.complement() == odds);
  CHECK(odds.complement() == evens);
}

TEST_CASE("densities") {
  CHECK(evens.natural_density() == Rat(1, 2));
  CHECK(UPSet::naturals().natural_density() == Rat(1));
  UPSet three = UPSet::residue_classes(3, {0});
  UPSet three_one = UPSet::residue_classes(3, {1});
  UPSet u = three.unite(three_one);
  CHECK(u.natural_density() == Rat(2, 3));
  // Symbolic membership agrees with the residue definition pointwise.
  for (std::uint64_t n = 0; n < 10000; ++n)
    CHECK(u.contains(n) == (n % 3 == 0 || n % 3 == 1));
}

TEST_CASE("canonical form is minimal") {
  // Period 4 pattern that is really period 2, prefix that matches the tail.
  UPSet s = UPSet::make(10, 4, {true, false, true, false}, {0, 2, 4, 6, 8});
  CHECK(s == evens);
  CHECK(s.period() == 2);
  CHECK(s.threshold() == 0);

  UPSet t = UPSet::make(3, 1, {true}, {1});  // {1} ∪ [3, inf)
  CHECK(t.threshold() == 3);
  CHECK(t.prefix() == std::vector<std::uint64_t>{1});
}

TEST_CASE("boolean operations match the pointwise oracle") {
  Rng rng(42);
  for (int iter = 0; iter < 200; ++iter) {
    UPSet a = random_upset(rng);
    UPSet b = random_upset(rng);
    UPSet u = a.unite(b), i = a.intersect(b), d = a.difference(b), c = a.complement();
    for (std::uint64_t n = 0; n < 512; ++n) {
      CHECK(u.contains(n) == (a.contains(n) || b.contains(n)));
      CHECK(i.contains(n) == (a.contains(n) && b.contains(n)));
      CHECK(d.contains(n) == (a.contains(n) && !b.contains(n)));
      CHECK(c.contains(n) == !a.contains(n));
    }
    // Canonical equality is exactly pointwise equality.
    CHECK(a.is_subset_of(u));
    CHECK((i == b.intersect(a)));
  }
}

TEST_CASE("canonical equality iff pointwise equality") {
  Rng rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    UPSet a = random_upset(rng);
    UPSet b = random_upset(rng);
    std::uint64_t horizon =
        std::max(a.threshold(), b.threshold()) + 2 * a.period() * b.period();
    bool same = true;
    for (std::uint64_t n = 0; n <= horizon; ++n)
      if (a.contains(n) != b.contains(n)) {
        same = false;
        break;
      }
    CHECK(same == (a == b));
  }
}

TEST_CASE("density is additive on disjoint sets") {
  Rng rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    UPSet a = random_upset(rng);
    UPSet b = random_upset(rng).difference(a);
    CHECK(a.intersect(b).empty());
    CHECK(a.unite(b).natural_density() == a.natural_density() + b.natural_density());
  }
}

TEST_CASE("cardinality") {
  CHECK(UPSet::from_points({3, 5, 9}).cardinality() == 3);
  CHECK(!evens.cardinality().has_value());
  CHECK(UPSet::empty_set().cardinality() == 0);
  CHECK(UPSet::interval(4, 9).cardinality() == 5);
}

TEST_CASE("doubling map basics") {
  AffinePartialMap dbl(2, 0, 1, UPSet::naturals());
  CHECK(dbl.image(UPSet::naturals()) == evens);
  AffinePartialMap dbl1(2, 1, 1, UPSet::naturals());
  CHECK(dbl1.preimage(odds) == UPSet::naturals());
  CHECK(dbl.inverse().image(evens) == UPSet::naturals());
  for (std::uint64_t n = 0; n < 4096; ++n)
    CHECK(dbl.inverse().image(evens).contains(n));
}

TEST_CASE("affine map image against the pointwise oracle") {
  Rng rng(1234);
  for (int iter = 0; iter < 150; ++iter) {
    std::int64_t a = 1 + static_cast<std::int64_t>(rng.below(4));
    std::int64_t c = 1 + static_cast<std::int64_t>(rng.below(4));
    std::int64_t b = static_cast<std::int64_t>(rng.below(13)) - 4;
    // Restrict the domain to points where the division is exact.
    UPSet dom = random_upset(rng);
    std::uint64_t q = static_cast<std::uint64_t>(c);
    std::vector<bool> ok(q);
    bool any = false;
    for (std::uint64_t r = 0; r < q; ++r) {
      auto v = (static_cast<std::int64_t>(r) * a + b) % c;
      ok[r] = ((v % c) + c) % c == 0;
      any = any || ok[r];
    }
    UPSet exact = UPSet::make(0, q, ok, {});
    dom = dom.intersect(exact);
    AffinePartialMap m(a, b, c, dom);

    UPSet set = random_upset(rng);
    UPSet img = m.image(set);
    std::vector<bool> expected(1024, false);
    for (std::uint64_t x = 0; x < 8192; ++x) {
      if (!set.contains(x)) continue;
      auto y = m.apply(x);
      if (y && *y < 1024) expected[*y] = true;
    }
    for (std::uint64_t v = 0; v < 1024; ++v) CHECK(img.contains(v) == expected[v]);

    // Preimage agreement.
    UPSet pre = m.preimage(set);
    for (std::uint64_t x = 0; x < 2048; ++x) {
      auto y = m.apply(x);
      bool expect = y.has_value() && set.contains(*y);
      CHECK(pre.contains(x) == expect);
    }
  }
}

TEST_CASE("image density scales by c/a on absorbed sets") {
  Rng rng(555);
  for (int iter = 0; iter < 80; ++iter) {
    std::int64_t a = 1 + static_cast<std::int64_t>(rng.below(3));
    std::int64_t c = 1;
    AffinePartialMap m(a, static_cast<std::int64_t>(rng.below(5)), c, UPSet::naturals());
    UPSet set = random_upset(rng).intersect(m.domain());
    CHECK(m.image(set).natural_density() ==
          Rat(c, a) * set.natural_density());
  }
  // A slope with c > 1: halving on evens doubles the density.
  AffinePartialMap half(1, 0, 2, evens);
  CHECK(half.image(evens).natural_density() == Rat(2, 1) * evens.natural_density() / 2);
  CHECK(half.image(evens) == UPSet::naturals());
}

TEST_CASE("compose and inverse round-trip") {
  AffinePartialMap dbl(2, 0, 1, UPSet::naturals());
  AffinePartialMap back = dbl.inverse();
  AffinePartialMap round = back.compose(dbl);
  for (std::uint64_t n = 0; n < 2048; ++n) {
    auto y = round.apply(n);
    CHECK(y.has_value());
    CHECK(*y == n);
  }
  // Inverse swaps slope and domain/image.
  CHECK(back.slope_num() == 1);
  CHECK(back.slope_den() == 2);
  CHECK(back.domain() == evens);
}

TEST_CASE("non-integral specifications are rejected") {
  CHECK_THROWS_AS(AffinePartialMap(1, 0, 2, UPSet::naturals()), NonIntegralComposition);
  CHECK_THROWS_AS(AffinePartialMap(2, 1, 2, UPSet::naturals()), NonIntegralComposition);
  // Negative images are clipped, not an error.
  AffinePartialMap down(1, -3, 1, UPSet::naturals());
  CHECK(down.domain() == UPSet::from_threshold(3));
}

TEST_CASE("upset literal round-trip") {
  Rng rng(31337);
  for (int iter = 0; iter < 200; ++iter) {
    UPSet s = random_upset(rng);
    auto parsed = parse_upset(s.to_string());
    REQUIRE(parsed.has_value());
    CHECK(*parsed == s);
  }
  CHECK(parse_upset("{1 mod 2}") == odds);
  CHECK(parse_upset("{0,3}") == UPSet::from_points({0, 3}));
  CHECK(parse_upset("{}") == UPSet::empty_set());
  CHECK(parse_upset("{0 mod 2 | n >= 4; +{1}; -{2}}").has_value());
  CHECK(!parse_upset("{0 mod 0}").has_value());
  CHECK(!parse_upset("{5 mod 2}").has_value());
  CHECK(!parse_upset("nonsense").has_value());
}

TEST_CASE("affine literal round-trip") {
  AffinePartialMap m(2, 1, 1, UPSet::naturals());
  auto parsed = parse_affine_map(m.to_string());
  REQUIRE(parsed.has_value());
  CHECK(*parsed == m);
  CHECK(parse_affine_map("(1*n+0)/2 on {0 mod 2}").has_value());
  CHECK(!parse_affine_map("(1*n+0)/2 on {0 mod 1}").has_value());
}
