#include "oigb/syzygy.hpp"

#include <algorithm>
#include <ostream>

#include "oigb/error.hpp"
#include "oigb/groebner.hpp"

namespace oigb {

CanonicalMap make_canonical_map(std::span<const ModuleElement> G, const std::string& symbol,
                                SchreyerTiebreak tiebreak) {
  if (G.empty()) throw InvalidArgument("canonical map of an empty list");
  const ModulePtr& target = G.front().module();
  std::vector<Width> widths;
  std::vector<int> twists;
  std::vector<ModuleMonomial> leads;
  bool homogeneous = true;
  for (const auto& g : G) {
    if (g.module() != target) throw WidthMismatch("canonical map: elements of different modules");
    if (g.is_zero()) throw InvalidArgument("canonical map: zero element");
    widths.push_back(g.width());
    leads.push_back(g.lead_monomial());
    auto d = element_degree(g);
    homogeneous = homogeneous && d.has_value();
    twists.push_back(d ? -*d : 0);
  }
  if (!homogeneous) std::fill(twists.begin(), twists.end(), 0);
  auto source = FreeOIModule::make(target->algebra(), symbol, std::move(widths), std::move(twists),
                                   SchreyerOrder{target, std::move(leads), tiebreak});
  return {std::move(source), std::vector<ModuleElement>(G.begin(), G.end()), target};
}

ModuleElement apply_map(const CanonicalMap& phi, const ModuleElement& s) {
  if (s.module() != phi.source) throw WidthMismatch("apply_map: element is not in the source module");
  ModuleElement out(phi.target_module, s.width());
  for (const auto& t : s.terms()) {
    const auto& g = phi.targets[static_cast<std::size_t>(t.monomial.basis.summand - 1)];
    out.add_multiple(t.coeff, t.monomial.mono, apply_morphism(t.monomial.basis.map, g));
  }
  return out;
}

SyzygyBasis oi_syz(std::span<const ModuleElement> G, const std::string& symbol,
                   const SyzygyOptions& options) {
  SyzygyBasis out{make_canonical_map(G, symbol, options.tiebreak), {}};
  const ModulePtr& source = out.map.source;

  auto generator = [&](std::size_t i, const OIMorphism& eps) {
    return BasisIndex{static_cast<int>(i) + 1, eps};
  };

  std::vector<ModuleElement> found;
  const auto pairs = critical_pairs(G);
  if (pairs.size() > options.pair_cap)
    throw ResourceError("oi_syz: " + std::to_string(pairs.size()) + " critical pairs exceed the cap " +
                        std::to_string(options.pair_cap));
  for (const auto& pair : pairs) {
    const ModuleElement& gp = G[pair.first];
    const ModuleElement& gq = G[pair.second];
    auto s = s_polynomial(gp, gq, pair.maps);
    if (!s) continue;
    ReductionTrace trace = reduce(*s, G);
    if (!trace.remainder.is_zero())
      throw PreconditionError("oi_syz: input is not a Gröbner basis (S-polynomial of pair (" +
                              std::to_string(pair.first + 1) + "," +
                              std::to_string(pair.second + 1) + ") reduces to " +
                              to_string(trace.remainder) + ")");

    const Width t = pair.maps.target;
    const auto lp = apply_morphism(pair.maps.first, gp.lead_monomial());
    const auto lq = apply_morphism(pair.maps.second, gq.lead_monomial());
    const PolyMonomial lcm = mono_lcm(lp.mono, lq.mono);

    std::vector<Term> terms;
    terms.push_back({1 / gp.lead_coefficient(),
                     {mono_quotient(lcm, lp.mono), generator(pair.first, pair.maps.first)}});
    terms.push_back({-1 / gq.lead_coefficient(),
                     {mono_quotient(lcm, lq.mono), generator(pair.second, pair.maps.second)}});
    for (const auto& q : trace.quotients)
      terms.push_back({-q.coeff, {q.multiplier, generator(q.generator, q.map)}});
    ModuleElement syz(source, t, std::move(terms));
    if (syz.is_zero()) continue;
    syz = syz.monic();
    if (options.log)
      *options.log << "pair (" << pair.first + 1 << "," << pair.second + 1 << ") "
                   << to_string(pair.maps.first) << " " << to_string(pair.maps.second)
                   << "\n  syzygy = " << to_string(syz) << "\n";
    if (std::find(found.begin(), found.end(), syz) == found.end()) found.push_back(std::move(syz));
  }
  const std::size_t candidates = found.size();
  out.elements = options.minimize ? minimize_basis(found) : std::move(found);
  if (options.log)
    *options.log << "syzygies: " << candidates << " candidates, " << out.elements.size()
                 << " kept\n";
  return out;
}

}  // namespace oigb
