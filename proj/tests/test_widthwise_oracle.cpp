#include "printers.hpp"

#include "oigb/groebner.hpp"
#include "oigb/parse.hpp"
#include "oigb/widthwise_oracle.hpp"
#include "test_support.hpp"

using namespace oigb;
using namespace oigb::oracle;
using testing::P2;

namespace {

Polynomial poly(const std::string& s, Width n) { return parse_polynomial(s, P2, n); }

WidthModulePresentation rank_one(Width n, std::vector<std::string> gens) {
  WidthModulePresentation p;
  p.width = n;
  p.rows = 2;
  p.basis = FreeOIModule::make(P2, "e", {0})->basis_in_width(n);
  for (const auto& g : gens) p.generators.push_back({poly(g, n)});
  return p;
}

}  // namespace

TEST_CASE("expand_in_width") {
  testing::Golden gold;
  std::vector<ModuleElement> b1{gold.b1};
  CHECK(expand_in_width(b1, 2).generators.size() == 2);
  const auto self = expand_in_width(b1, 1);
  REQUIRE(self.generators.size() == 1);
  CHECK(self.generators[0][0] == poly("x(1,1)", 1));
  CHECK(self.generators[0][1] == poly("x(2,1)", 1));
  std::vector<ModuleElement> triple{gold.b1, gold.b2, gold.b3};
  const auto e3 = expand_in_width(triple, 3);
  CHECK(e3.generators.size() == 7);
  CHECK(e3.basis.size() == rank_in_width(*gold.F3, 3));
}

TEST_CASE("classical Buchberger on small inputs") {
  const auto mono = rank_one(2, {"x(1,1)*x(2,2)"});
  CHECK(classical_gb(mono).generators == mono.generators);
  const auto two = rank_one(1, {"x(1,1)", "x(2,1)"});
  CHECK(classical_gb(two).generators == two.generators);
  CHECK(lead_module_equal(two, two));
  CHECK_FALSE(lead_module_equal(rank_one(1, {"x(1,1)"}), rank_one(1, {"x(1,1)^2"})));

  const auto cyclic = rank_one(2, {"x(1,2)^2 - x(1,1)", "x(1,2)*x(1,1)"});
  CHECK_FALSE(is_classical_groebner(cyclic));
  const auto gb = classical_gb(cyclic);
  CHECK(is_classical_groebner(gb));
  for (const auto& g : cyclic.generators) CHECK(reduces_to_zero(gb, g));
  CHECK_FALSE(reduces_to_zero(gb, {poly("x(1,2)", 2)}));
}

TEST_CASE("OI Groebner bases agree with classical ones width by width") {
  testing::Golden gold;
  const std::vector<std::vector<ModuleElement>> inputs{{gold.b1, gold.b2}, {gold.f}};
  for (const auto& B : inputs) {
    const auto G = oi_gb(B).elements;
    for (Width n = 0; n <= 4; ++n) {
      CAPTURE(n);
      const auto classical = classical_gb(expand_in_width(B, n));
      const auto expanded = expand_in_width(G, n);
      CHECK(is_classical_groebner(classical));
      CHECK(is_classical_groebner(expanded));
      CHECK(lead_module_equal(classical, expanded));
    }
  }
  // b1, b2 alone do not generate the lead module in width 3
  std::vector<ModuleElement> B{gold.b1, gold.b2};
  CHECK_FALSE(lead_module_equal(classical_gb(expand_in_width(B, 3)), expand_in_width(B, 3)));
}

TEST_CASE("random inputs agree with the oracle") {
  testing::Random rnd(55);
  const auto F = FreeOIModule::make(P2, "e", {1, 2});
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ModuleElement> B;
    for (int k = 0; k < rnd.uniform(1, 2); ++k) {
      auto b = rnd.element(F, rnd.uniform(1, 2), rnd.uniform(1, 2), 2);
      if (!b.is_zero()) B.push_back(b);
    }
    if (B.empty()) continue;
    GroebnerOptions opts;
    opts.pair_cap = 20000;
    std::vector<ModuleElement> G;
    try {
      G = oi_gb(B, opts).elements;
    } catch (const ResourceError&) {
      continue;
    }
    for (Width n = 1; n <= 3; ++n) {
      const auto expanded = expand_in_width(G, n);
      CHECK(lead_module_equal(classical_gb(expand_in_width(B, n)), expanded));
      ++checked;
    }
  }
  CHECK(checked > 60);
}
