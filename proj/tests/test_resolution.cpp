#include "printers.hpp"

#include "oigb/error.hpp"
#include "oigb/parse.hpp"
#include "oigb/resolution.hpp"
#include "graded_rank.hpp"
#include "test_support.hpp"

using namespace oigb;
using testing::P2;

namespace {

FreeComplex golden(int degree) {
  testing::Golden gold;
  return oi_res(std::vector<ModuleElement>{gold.f3}, degree);
}

// No unit constant on an identity basis term below the last step.
bool minimal_below_last(const FreeComplex& c) {
  for (std::size_t j = 1; j + 1 < c.length(); ++j)
    for (const auto& img : c.images[j])
      for (const auto& t : img.terms())
        if (t.monomial.mono.is_one() && t.monomial.basis.map.is_identity()) return false;
  return true;
}

}  // namespace

TEST_CASE("golden resolution, low degrees") {
  const auto R = golden(4);
  CHECK(ranks(R) == std::vector<int>{1, 2, 4, 7, 16});
  CHECK(is_complex(R));
  CHECK(minimal_below_last(R));
  CHECK(R.modules[0]->widths() == std::vector<Width>{3});
  CHECK(R.modules[0]->twists() == std::vector<int>{-2});
  // The top step is never pruned, so degree 0 keeps the whole minimal basis {f, g}.
  CHECK(ranks(golden(0)) == std::vector<int>{2});
  CHECK(golden(3).length() == 4);
}

TEST_CASE("resolution of a free generator") {
  const auto F = FreeOIModule::make(P2, "e", {1});
  const auto R = oi_res(std::vector<ModuleElement>{parse_element("e(1,{1},1)", F)}, 3);
  CHECK(ranks(R) == std::vector<int>{1, 0, 0, 0});
  CHECK(is_complex(R));
}

TEST_CASE("oi_res errors") {
  testing::Golden gold;
  const std::vector<ModuleElement> B{gold.f};
  CHECK_THROWS_AS(oi_res(B, -1), InvalidArgument);
  CHECK_THROWS_AS(oi_res(std::vector<ModuleElement>{}, 1), InvalidArgument);
  const auto mixed = parse_element("x(1,1)*e(1,{1},1) + e(1,{1},2)", gold.F2);
  CHECK_THROWS_AS(oi_res(std::vector<ModuleElement>{mixed}, 1), InvalidArgument);
  ResolutionOptions raw;
  raw.minimize = false;
  CHECK(is_complex(oi_res(std::vector<ModuleElement>{mixed}, 2, raw)));
}

TEST_CASE("describe round-trips") {
  const auto R = golden(3);
  const auto j = describe_json(R);
  CHECK(j["steps"][0]["widths"] == nlohmann::json::array({3}));
  CHECK(j["steps"][0]["twists"] == nlohmann::json::array({-2}));
  const auto back = complex_from_json(nlohmann::json::parse(j.dump()));
  CHECK(equivalent(R, back));
  CHECK(ranks(back) == ranks(R));
  CHECK(is_complex(back));
  CHECK(describe_text(back) == describe_text(R));

  const auto zero = golden(0);
  CHECK(describe_json(zero)["steps"].size() == 1);
}

TEST_CASE("width restriction") {
  const auto R = golden(3);
  for (Width w = 0; w <= 5; ++w) {
    const auto r = restrict_to_width(R, w);
    REQUIRE(r.maps.size() == R.length());
    for (std::size_t j = 0; j < R.length(); ++j) CHECK(r.maps[j].cols.size() == rank_in_width(*R.modules[j], w));
    for (std::size_t j = 0; j + 1 < R.length(); ++j) CHECK(is_zero(multiply(r.maps[j], r.maps[j + 1])));
  }
  const auto low = restrict_to_width(R, 2);
  CHECK(low.maps[0].cols.empty());
}

TEST_CASE("restricted golden resolution is exact in low degrees") {
  const auto R = golden(3);
  for (Width w = 3; w <= 4; ++w)
    for (int D = 2; D <= 5; ++D) {
      CAPTURE(w);
      CAPTURE(D);
      CHECK(testing::exact_in_degree(R, w, D));
    }
}

TEST_CASE("random homogeneous resolutions") {
  testing::Random rnd(101);
  int done = 0;
  for (int trial = 0; trial < 60 && done < 25; ++trial) {
    const AlgebraDescriptor algebra = rnd.coin() ? P2 : AlgebraDescriptor{1, "x", "QQ"};
    const auto F = FreeOIModule::make(algebra, "e", rnd.coin() ? std::vector<Width>{1} : std::vector<Width>{1, 1});
    std::vector<ModuleElement> B;
    const int degree = rnd.uniform(1, 3);
    auto b = rnd.homogeneous_element(F, rnd.uniform(1, 3), rnd.uniform(1, 2), degree);
    if (!b.is_zero()) B.push_back(b);
    if (B.empty()) continue;
    ResolutionOptions opts;
    opts.pair_cap = 1000;
    FreeComplex R;
    try {
      R = oi_res(B, 2, opts);
    } catch (const ResourceError&) {
      continue;
    }
    ++done;
    CHECK(is_complex(R));
    CHECK(minimal_below_last(R));
    for (Width w = 0; w <= 4; ++w) {
      const auto r = restrict_to_width(R, w);
      for (std::size_t j = 0; j + 1 < R.length(); ++j) CHECK(is_zero(multiply(r.maps[j], r.maps[j + 1])));
    }
    for (Width w = 1; w <= 3; ++w)
      for (int D = degree; D <= degree + 2; ++D) CHECK(testing::exact_in_degree(R, w, D));
  }
  CHECK(done >= 20);
}
