#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oigb/oi_category.hpp"
#include "oigb/polynomial.hpp"

namespace oigb {

/// e_{π,i}: summand i (1-based) and π ∈ hom(d_i, n). The width is π's target.
struct BasisIndex {
  int summand = 1;
  OIMorphism map;

  Width width() const { return map.target(); }
  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// a·e_{π,i}
struct ModuleMonomial {
  PolyMonomial mono;
  BasisIndex basis;

  Width width() const { return basis.width(); }
  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;
};

ModuleMonomial apply_morphism(const OIMorphism& eps, const ModuleMonomial& m);

struct Term {
  Rational coeff;
  ModuleMonomial monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

class FreeOIModule;
using ModulePtr = std::shared_ptr<const FreeOIModule>;

/// Position-over-term lex: smaller summand is larger, then the lexicographically
/// larger basis map, then the polynomial lex order.
struct LexOrder {};

/// How equal Schreyer images are separated.
struct SchreyerTiebreak {
  bool smaller_summand_larger = true;
  bool smaller_map_larger = true;
};

/// Compares a·d_{π,i} through the lead monomial of its image a·π_*(lm g_i) in
/// `target`; ties are broken by the generator index and the basis map.
struct SchreyerOrder {
  ModulePtr target;
  std::vector<ModuleMonomial> lead_images;
  SchreyerTiebreak tiebreak;
};

using MonomialOrder = std::variant<LexOrder, SchreyerOrder>;

/// ⊕_i F^{OI,d_i}(t_i). A basis element of summand i sits in degree -t_i.
class FreeOIModule {
 public:
  static ModulePtr make(AlgebraDescriptor algebra, std::string symbol, std::vector<Width> widths,
                        std::vector<int> twists = {}, MonomialOrder order = LexOrder{});
  /// The rank-0 module, used for vanishing terms of a resolution.
  static ModulePtr make_zero(AlgebraDescriptor algebra, std::string symbol);

  const AlgebraDescriptor& algebra() const { return algebra_; }
  const std::string& symbol() const { return symbol_; }
  const std::vector<Width>& widths() const { return widths_; }
  const std::vector<int>& twists() const { return twists_; }
  const MonomialOrder& order() const { return order_; }
  int rank() const { return static_cast<int>(widths_.size()); }
  Width generator_width(int summand) const { return widths_[static_cast<std::size_t>(summand - 1)]; }
  int twist(int summand) const { return twists_[static_cast<std::size_t>(summand - 1)]; }

  /// Σ_i binomial(n, d_i)
  std::size_t rank_in_width(Width n) const;

  /// Basis of the width-n component ordered by summand, then π lexicographically.
  std::vector<BasisIndex> basis_in_width(Width n) const;

  std::strong_ordering compare(const ModuleMonomial& a, const ModuleMonomial& b) const;

  /// Lead monomial of the image of `m` under the Schreyer map (Schreyer orders only).
  ModuleMonomial schreyer_image(const ModuleMonomial& m) const;

  void validate(const ModuleMonomial& m) const;

 private:
  FreeOIModule() = default;

  AlgebraDescriptor algebra_;
  std::string symbol_;
  std::vector<Width> widths_;
  std::vector<int> twists_;
  MonomialOrder order_;
};

std::size_t rank_in_width(const FreeOIModule& module, Width n);

/// An element of the width-n component of a free OI-module; terms sorted
/// strictly descending under the module order.
class ModuleElement {
 public:
  ModuleElement(ModulePtr module, Width width);
  /// Validates, sorts and combines like terms.
  ModuleElement(ModulePtr module, Width width, std::vector<Term> terms);

  static ModuleElement basis_element(ModulePtr module, BasisIndex basis);

  const ModulePtr& module() const { return module_; }
  Width width() const { return width_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const Term& lead_term() const;
  const ModuleMonomial& lead_monomial() const { return lead_term().monomial; }
  const Rational& lead_coefficient() const { return lead_term().coeff; }

  ModuleElement operator-() const;
  ModuleElement& operator+=(const ModuleElement& g);
  ModuleElement& operator-=(const ModuleElement& g);
  /// this += c·m·g; the sorted order of g survives multiplication by m.
  void add_multiple(const Rational& c, const PolyMonomial& m, const ModuleElement& g);

  friend ModuleElement operator+(ModuleElement f, const ModuleElement& g) { return f += g; }
  friend ModuleElement operator-(ModuleElement f, const ModuleElement& g) { return f -= g; }
  friend ModuleElement operator*(const Rational& c, const ModuleElement& f);
  friend ModuleElement operator*(const Polynomial& p, const ModuleElement& f);

  /// Same module, width and terms.
  friend bool operator==(const ModuleElement& f, const ModuleElement& g);

  ModuleElement monic() const;

  /// Removes and returns the lead term.
  Term take_lead();
  /// Appends a term smaller than every current term.
  void append_trailing(Term t);

 private:
  struct Sorted {};
  ModuleElement(ModulePtr module, Width width, std::vector<Term> terms, Sorted)
      : module_(std::move(module)), width_(width), terms_(std::move(terms)) {}
  friend ModuleElement apply_morphism(const OIMorphism& eps, const ModuleElement& f);
  friend ModuleElement rebase(const ModuleElement& f, ModulePtr module);

  void check_compatible(const ModuleElement& g, const char* what) const;

  ModulePtr module_;
  Width width_ = 0;
  std::vector<Term> terms_;
};

/// c·a·e_{π,i} -> c·ε_*(a)·e_{ε∘π,i}
ModuleElement apply_morphism(const OIMorphism& eps, const ModuleElement& f);

/// Same terms, re-sorted under the order of another module with identical generators.
ModuleElement rebase(const ModuleElement& f, ModulePtr module);

/// Order-independent term equality, for elements of modules with equal generators.
bool same_terms(const ModuleElement& f, const ModuleElement& g);

/// Every ε with ε∘π = σ and ε_*(a) | b, in lexicographic order.
std::vector<OIMorphism> oi_divides(const ModuleMonomial& small, const ModuleMonomial& big);
/// The lexicographically first witness, if any.
std::optional<OIMorphism> first_oi_divisor(const ModuleMonomial& small, const ModuleMonomial& big);

/// deg(a) - t_i for a·e_{π,i}
int monomial_degree(const FreeOIModule& module, const ModuleMonomial& m);
/// nullopt for zero or nonhomogeneous elements.
std::optional<int> element_degree(const ModuleElement& f);
bool is_homogeneous(const ModuleElement& f);

/// `e(n,{a1,...,am},i)`
std::string basis_string(const std::string& symbol, const BasisIndex& b);
std::string to_string(const ModuleMonomial& m, const FreeOIModule& module);
/// `x(1,1)*e(1,{1},1) + x(2,1)*e(1,{1},2)`; zero prints as "0".
std::string to_string(const ModuleElement& f);

}  // namespace oigb
