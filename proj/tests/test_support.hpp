#pragma once

#include <algorithm>
#include <iterator>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "oigb/free_module.hpp"
#include "oigb/parse.hpp"

namespace oigb::testing {

inline const AlgebraDescriptor P2{2, "x", "QQ"};

// Inputs of the three worked sessions.
struct Golden {
  ModulePtr F3 = FreeOIModule::make(P2, "e", {1, 1, 2});
  ModulePtr F2 = FreeOIModule::make(P2, "e", {1, 1});
  ModuleElement b1 = parse_element("x(1,1)*e(1,{1},1) + x(2,1)*e(1,{1},2)", F3);
  ModuleElement b2 = parse_element("x(1,2)*x(1,1)*e(2,{2},2) + x(2,2)*x(2,1)*e(2,{1,2},3)", F3);
  ModuleElement b3 = parse_element("x(2,3)*x(2,2)*x(1,1)*e(3,{2,3},3) - x(2,3)*x(2,1)*x(1,2)*e(3,{1,3},3)", F3);
  ModuleElement f = parse_element("x(1,2)*x(1,1)*e(2,{2},1) + x(2,2)*x(2,1)*e(2,{1},2)", F2);
  ModuleElement g = parse_element("x(2,3)*x(2,2)*x(1,1)*e(3,{2},2) - x(2,3)*x(2,1)*x(1,2)*e(3,{1},2)", F2);
  ModuleElement f3 = parse_element("x(1,2)*x(1,1)*e(3,{2},1) + x(2,2)*x(2,1)*e(3,{1},2)", F2);
};

// No term of r is OI-divisible by a lead of G (exhaustive over hom sets).
inline bool irreducible(const ModuleElement& r, std::span<const ModuleElement> G) {
  for (const auto& t : r.terms())
    for (const auto& g : G)
      if (!g.is_zero() && !oi_divides(g.lead_monomial(), t.monomial).empty()) return false;
  return true;
}

class Random {
 public:
  explicit Random(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  OIMorphism morphism(Width m, Width n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) all[static_cast<std::size_t>(k)] = k + 1;
    std::vector<int> image;
    std::sample(all.begin(), all.end(), std::back_inserter(image), m, rng_);
    return OIMorphism(n, image);
  }

  PolyMonomial monomial(int rows, Width n, int max_degree) {
    std::vector<VarPower> f;
    if (n == 0) return PolyMonomial(n);
    const int degree = uniform(0, max_degree);
    for (int k = 0; k < degree; ++k) f.push_back({uniform(1, rows), uniform(1, n), 1});
    return PolyMonomial(n, f);
  }

  PolyMonomial monomial_of_degree(int rows, Width n, int degree) {
    std::vector<VarPower> f;
    for (int k = 0; k < degree; ++k) f.push_back({uniform(1, rows), uniform(1, n), 1});
    return PolyMonomial(n, f);
  }

  Rational coefficient() {
    int num = uniform(-5, 5);
    if (num == 0) num = 1;
    Rational q(num, uniform(1, 3));
    q.canonicalize();
    return q;
  }

  Polynomial polynomial(int rows, Width n, int terms, int max_degree) {
    std::vector<PolyTerm> t;
    for (int k = 0; k < terms; ++k) t.push_back({coefficient(), monomial(rows, n, max_degree)});
    return Polynomial(n, t);
  }

  // A basis index of `module` in width n, or nullopt if the width is too small.
  std::optional<BasisIndex> basis(const FreeOIModule& module, Width n) {
    std::vector<int> fits;
    for (int i = 1; i <= module.rank(); ++i)
      if (module.generator_width(i) <= n) fits.push_back(i);
    if (fits.empty()) return std::nullopt;
    const int i = fits[static_cast<std::size_t>(uniform(0, static_cast<int>(fits.size()) - 1))];
    return BasisIndex{i, morphism(module.generator_width(i), n)};
  }

  ModuleMonomial module_monomial(const FreeOIModule& module, Width n, int max_degree) {
    return {monomial(module.algebra().rows, n, max_degree), *basis(module, n)};
  }

  ModuleElement element(const ModulePtr& module, Width n, int terms, int max_degree) {
    std::vector<Term> t;
    for (int k = 0; k < terms; ++k) t.push_back({coefficient(), module_monomial(*module, n, max_degree)});
    return ModuleElement(module, n, t);
  }

  // Every term has degree `degree` under the module's twists.
  ModuleElement homogeneous_element(const ModulePtr& module, Width n, int terms, int degree) {
    std::vector<Term> t;
    for (int k = 0; k < terms; ++k) {
      const BasisIndex b = *basis(*module, n);
      const int d = degree + module->twist(b.summand);
      if (d < 0) continue;
      t.push_back({coefficient(), {monomial_of_degree(module->algebra().rows, n, d), b}});
    }
    return ModuleElement(module, n, t);
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace oigb::testing
