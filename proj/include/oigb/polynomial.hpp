#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "oigb/oi_category.hpp"

namespace oigb {

using Rational = mpq_class;

std::string to_string(const Rational& q);

/// The polynomial OI-algebra P^c over the rationals.
struct AlgebraDescriptor {
  int rows = 1;
  std::string symbol = "x";
  std::string field = "QQ";

  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

/// x_{row,col}^exp
struct VarPower {
  int row = 1;
  int col = 1;
  int exp = 1;

  friend bool operator==(const VarPower&, const VarPower&) = default;
};

/// Ordering of the variables of P_n: x_{i,j} > x_{k,l} iff i > k, or i == k
/// and j > l. Strictly increasing maps preserve it.
inline bool variable_greater(int row_a, int col_a, int row_b, int col_b) {
  return row_a != row_b ? row_a > row_b : col_a > col_b;
}

/// A monomial of P_n. Factors are kept sorted by decreasing variable.
class PolyMonomial {
 public:
  PolyMonomial() = default;
  explicit PolyMonomial(Width width) : width_(width) {}
  /// Sorts, merges repeated variables and drops zero exponents.
  PolyMonomial(Width width, std::vector<VarPower> factors);

  static PolyMonomial variable(Width width, int row, int col, int exp = 1);

  Width width() const { return width_; }
  const std::vector<VarPower>& factors() const { return factors_; }
  int degree() const;
  bool is_one() const { return factors_.empty(); }
  int exponent(int row, int col) const;
  int max_row() const;

  friend bool operator==(const PolyMonomial&, const PolyMonomial&) = default;

 private:
  friend PolyMonomial operator*(const PolyMonomial&, const PolyMonomial&);
  friend PolyMonomial apply_morphism(const OIMorphism&, const PolyMonomial&);
  friend PolyMonomial mono_quotient(const PolyMonomial&, const PolyMonomial&);
  friend PolyMonomial mono_lcm(const PolyMonomial&, const PolyMonomial&);

  Width width_ = 0;
  std::vector<VarPower> factors_;
};

/// Lexicographic comparison under variable_greater.
std::strong_ordering compare(const PolyMonomial& a, const PolyMonomial& b);

PolyMonomial operator*(const PolyMonomial& a, const PolyMonomial& b);
bool mono_divides(const PolyMonomial& a, const PolyMonomial& b);
/// b / a; throws InvalidArgument if a does not divide b.
PolyMonomial mono_quotient(const PolyMonomial& b, const PolyMonomial& a);
PolyMonomial mono_lcm(const PolyMonomial& a, const PolyMonomial& b);
/// x_{i,j} -> x_{i,eps(j)}
PolyMonomial apply_morphism(const OIMorphism& eps, const PolyMonomial& a);

/// `x(1,2)*x(1,1)^2`; the empty monomial prints as "1".
std::string to_string(const PolyMonomial& a, const std::string& symbol = "x");

struct PolyTerm {
  Rational coeff;
  PolyMonomial mono;

  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

/// An element of P_n, terms sorted strictly descending.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Width width) : width_(width) {}
  /// Canonicalizes: sorts, combines like terms, drops zeros.
  Polynomial(Width width, std::vector<PolyTerm> terms);

  static Polynomial constant(Width width, const Rational& c);
  static Polynomial monomial(const PolyMonomial& m, const Rational& c = 1);

  Width width() const { return width_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const PolyTerm& lead_term() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Width width_ = 0;
  std::vector<PolyTerm> terms_;
};

Polynomial apply_morphism(const OIMorphism& eps, const Polynomial& p);

/// Total degree with every variable of degree 1; nullopt if not homogeneous or zero.
std::optional<int> degree(const Polynomial& p);
bool is_homogeneous(const Polynomial& p);

/// `x(1,2)*x(1,1) + 1/2*x(2,1) - 3`; zero prints as "0".
std::string to_string(const Polynomial& p, const std::string& symbol = "x");

/// Writes `c*m` with the sign folded into the separator when `leading` is false.
std::string format_term(const Rational& coeff, const std::string& body, bool leading);

}  // namespace oigb
