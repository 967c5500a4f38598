#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "oigb/free_module.hpp"

namespace oigb {

/// φ : ⊕_i F^{OI,w_i}(-deg g_i) -> F sending d_{id,i} to g_i.
struct CanonicalMap {
  ModulePtr source;
  std::vector<ModuleElement> targets;
  ModulePtr target_module;
};

/// Source twists are -deg(g_i) when every g_i is homogeneous, else 0. The
/// source carries the Schreyer order induced by the lead monomials of the g_i.
CanonicalMap make_canonical_map(std::span<const ModuleElement> G, const std::string& symbol,
                                SchreyerTiebreak tiebreak = {});

ModuleElement apply_map(const CanonicalMap& phi, const ModuleElement& s);

struct SyzygyOptions {
  std::ostream* log = nullptr;
  /// Keep only elements whose lead is not OI-divisible by another lead.
  bool minimize = true;
  std::size_t pair_cap = 2'000'000;
  SchreyerTiebreak tiebreak;
};

struct SyzygyBasis {
  CanonicalMap map;
  std::vector<ModuleElement> elements;
};

/// A Gröbner basis of ker φ under the Schreyer order, one candidate per critical
/// pair of G: the two mapped generators minus the division trace of the
/// S-polynomial. Throws PreconditionError if G is not a Gröbner basis.
SyzygyBasis oi_syz(std::span<const ModuleElement> G, const std::string& symbol,
                   const SyzygyOptions& options = {});

}  // namespace oigb
