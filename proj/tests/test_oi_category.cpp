#include "printers.hpp"

#include <set>

#include "oigb/error.hpp"
#include "oigb/oi_category.hpp"
#include "test_support.hpp"

using namespace oigb;

TEST_CASE("compose evaluates outer after inner") {
  const OIMorphism pi(2, {2});
  CHECK(compose(pi, OIMorphism::identity(2)) == pi);
  CHECK(compose(pi, OIMorphism(3, {2, 3})) == OIMorphism(3, {3}));
  CHECK(compose(OIMorphism(2, {}), OIMorphism(5, {1, 4})) == OIMorphism(5, {}));
  CHECK_THROWS_AS(compose(pi, OIMorphism(3, {1})), WidthMismatch);
}

TEST_CASE("morphisms must be strictly increasing into the target") {
  CHECK_THROWS_AS(OIMorphism(3, {2, 1}), InvalidArgument);
  CHECK_THROWS_AS(OIMorphism(3, {1, 1}), InvalidArgument);
  CHECK_THROWS_AS(OIMorphism(2, {3}), InvalidArgument);
  CHECK_THROWS_AS(OIMorphism(2, {0}), InvalidArgument);
  CHECK(to_string(OIMorphism(3, {1, 3})) == "[2]->[3]:{1,3}");
}

TEST_CASE("enumerate_hom") {
  const auto h12 = enumerate_hom(1, 2);
  REQUIRE(h12.size() == 2);
  CHECK(h12[0].image() == std::vector<int>{1});
  CHECK(h12[1].image() == std::vector<int>{2});
  const auto h22 = enumerate_hom(2, 2);
  REQUIRE(h22.size() == 1);
  CHECK(h22[0].is_identity());
  CHECK(enumerate_hom(2, 4).size() == 6);
  CHECK(enumerate_hom(3, 2).empty());
  CHECK(enumerate_hom(0, 3).size() == 1);

  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 7; ++n) {
      const auto hs = enumerate_hom(m, n);
      CHECK(hs.size() == binomial(n, m));
      CHECK(std::is_sorted(hs.begin(), hs.end()));
      CHECK(std::set<OIMorphism>(hs.begin(), hs.end()).size() == hs.size());
    }
}

namespace {

// Brute force: every pair of maps into every t up to m + n + 1 whose images cover [t].
std::vector<CoveringPair> brute_covering(Width m, Width n) {
  std::vector<CoveringPair> out;
  for (Width t = 0; t <= m + n + 1; ++t)
    for (const auto& a : enumerate_hom(m, t))
      for (const auto& b : enumerate_hom(n, t)) {
        std::set<int> covered(a.image().begin(), a.image().end());
        covered.insert(b.image().begin(), b.image().end());
        if (static_cast<Width>(covered.size()) == t) out.push_back({t, a, b});
      }
  return out;
}

}  // namespace

TEST_CASE("enumerate_covering_pairs matches brute force") {
  const auto p11 = enumerate_covering_pairs(1, 1);
  REQUIRE(p11.size() == 3);
  CHECK(p11[0] == CoveringPair{1, OIMorphism(1, {1}), OIMorphism(1, {1})});
  CHECK(p11[1] == CoveringPair{2, OIMorphism(2, {1}), OIMorphism(2, {2})});
  CHECK(p11[2] == CoveringPair{2, OIMorphism(2, {2}), OIMorphism(2, {1})});

  const auto p00 = enumerate_covering_pairs(0, 0);
  REQUIRE(p00.size() == 1);
  CHECK(p00[0].target == 0);

  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(enumerate_covering_pairs(m, n) == brute_covering(m, n));
    }
  // (1,2): t = 2 gives 2 * 1, t = 3 gives 3 choices for the singleton's complement.
  CHECK(enumerate_covering_pairs(1, 2).size() == 5);
}

TEST_CASE("composition laws on random samples") {
  testing::Random rnd(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int a = rnd.uniform(0, 4), b = a + rnd.uniform(0, 3), c = b + rnd.uniform(0, 3), d = c + rnd.uniform(0, 2);
    const auto e1 = rnd.morphism(a, b), e2 = rnd.morphism(b, c), e3 = rnd.morphism(c, d);
    CHECK(compose(compose(e1, e2), e3) == compose(e1, compose(e2, e3)));
    CHECK(compose(e1, OIMorphism::identity(b)) == e1);
    CHECK(compose(OIMorphism::identity(a), e1) == e1);
    const auto r = compose(e1, e2);
    for (int j = 1; j <= a; ++j) CHECK(r(j) == e2(e1(j)));
  }
}
