#pragma once

#include <span>
#include <vector>

#include "oigb/free_module.hpp"

namespace oigb::oracle {

/// A submodule of the free P_n-module with basis {e_{π,i}}, given by generators
/// written as coordinate vectors.
struct WidthModulePresentation {
  Width width = 0;
  int rows = 1;
  std::vector<BasisIndex> basis;
  std::vector<std::vector<Polynomial>> generators;
};

/// {ε_*(b) : b ∈ B, ε ∈ hom(width(b), n)} in the coordinates of F_n, ordered
/// by summand and then π lexicographically.
WidthModulePresentation expand_in_width(std::span<const ModuleElement> B, Width n);

/// Textbook Buchberger for submodules of P_n^r under the restriction of the
/// OI lex order to width n. Shares no reduction code with the OI kernel.
WidthModulePresentation classical_gb(const WidthModulePresentation& p);

/// Every S-pair of the generators reduces to zero.
bool is_classical_groebner(const WidthModulePresentation& p);

/// Mutual divisibility of the lead terms of a and b.
bool lead_module_equal(const WidthModulePresentation& a, const WidthModulePresentation& b);

/// Whether `v` (coordinates in p.basis) reduces to zero modulo p's generators,
/// which must form a Gröbner basis.
bool reduces_to_zero(const WidthModulePresentation& p, const std::vector<Polynomial>& v);

}  // namespace oigb::oracle
