#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "oigb/free_module.hpp"

namespace oigb {

/// One division step: coeff · multiplier · ε_*(divisors[generator]).
struct Quotient {
  std::size_t generator = 0;
  OIMorphism map;
  Rational coeff;
  PolyMonomial multiplier;
};

struct ReductionTrace {
  std::vector<Quotient> quotients;
  ModuleElement remainder;
};

/// Division by the lead monomials of `divisors`. At each reducible term the
/// first divisor in list order is used, with its lexicographically first
/// witness. With `full` set every term is reduced, otherwise only the lead.
ReductionTrace reduce(const ModuleElement& f, std::span<const ModuleElement> divisors,
                      bool full = true);

/// Σ quotients + remainder; equals the reduced element exactly.
ModuleElement replay(const ReductionTrace& trace, std::span<const ModuleElement> divisors);

/// The pair (first, second) of basis positions, first <= second, together with
/// a covering pair of maps sending both lead monomials to the same basis index.
struct CriticalPair {
  std::size_t first = 0;
  std::size_t second = 0;
  CoveringPair maps;
};

/// Covering pairs of (gp, gq) whose mapped leads share a basis index, in
/// enumeration order. For gp == gq (same position) only first < second maps.
std::vector<CoveringPair> lead_covering_pairs(const ModuleElement& gp, const ModuleElement& gq,
                                              bool same_element);

/// All critical pairs of G ordered by (target width, second, first, enumeration).
std::vector<CriticalPair> critical_pairs(std::span<const ModuleElement> G);

/// The lead-cancelling combination, or nullopt when the mapped lead monomials
/// sit on different basis indices.
std::optional<ModuleElement> s_polynomial(const ModuleElement& gp, const ModuleElement& gq,
                                          const CoveringPair& pair);

struct GroebnerOptions {
  std::ostream* log = nullptr;
  std::size_t pair_cap = 2'000'000;
  /// Drop elements whose lead monomial is OI-divisible by another lead.
  bool minimize = false;
};

struct GroebnerBasis {
  ModulePtr module;
  std::vector<ModuleElement> elements;
};

/// OI-Buchberger completion. Inputs come first (made monic), then every new
/// remainder in the order found.
GroebnerBasis oi_gb(std::span<const ModuleElement> B, const GroebnerOptions& options = {});

/// Every S-polynomial over every covering pair reduces to zero.
bool is_groebner(std::span<const ModuleElement> G);

/// Removes elements whose lead monomial is OI-divisible by the lead of another
/// element; among equal leads the first survives.
std::vector<ModuleElement> minimize_basis(std::span<const ModuleElement> G);

}  // namespace oigb
