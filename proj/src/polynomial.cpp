#include "oigb/polynomial.hpp"

#include <algorithm>

#include "oigb/error.hpp"

namespace oigb {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool factor_greater(const VarPower& a, const VarPower& b) {
  return variable_greater(a.row, a.col, b.row, b.col);
}

bool same_variable(const VarPower& a, const VarPower& b) {
  return a.row == b.row && a.col == b.col;
}

void check_same_width(Width a, Width b, const char* what) {
  if (a != b)
    throw WidthMismatch(std::string(what) + ": widths " + std::to_string(a) + " and " +
                        std::to_string(b) + " differ");
}

}  // namespace

PolyMonomial::PolyMonomial(Width width, std::vector<VarPower> factors) : width_(width) {
  for (const auto& f : factors) {
    if (f.row < 1 || f.col < 1 || f.col > width)
      throw InvalidArgument("variable x(" + std::to_string(f.row) + "," + std::to_string(f.col) +
                            ") does not live in width " + std::to_string(width));
    if (f.exp < 0) throw InvalidArgument("negative exponent");
  }
  std::stable_sort(factors.begin(), factors.end(), factor_greater);
  for (const auto& f : factors) {
    if (!factors_.empty() && same_variable(factors_.back(), f))
      factors_.back().exp += f.exp;
    else
      factors_.push_back(f);
  }
  std::erase_if(factors_, [](const VarPower& f) { return f.exp == 0; });
}

PolyMonomial PolyMonomial::variable(Width width, int row, int col, int exp) {
  return PolyMonomial(width, {VarPower{row, col, exp}});
}

int PolyMonomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.exp;
  return d;
}

int PolyMonomial::exponent(int row, int col) const {
  for (const auto& f : factors_)
    if (f.row == row && f.col == col) return f.exp;
  return 0;
}

int PolyMonomial::max_row() const {
  int r = 0;
  for (const auto& f : factors_) r = std::max(r, f.row);
  return r;
}

std::strong_ordering compare(const PolyMonomial& a, const PolyMonomial& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (!same_variable(fa[i], fb[i]))
      return factor_greater(fa[i], fb[i]) ? std::strong_ordering::greater
                                          : std::strong_ordering::less;
    if (fa[i].exp != fb[i].exp) return fa[i].exp <=> fb[i].exp;
  }
  if (i < fa.size()) return std::strong_ordering::greater;
  if (i < fb.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

PolyMonomial operator*(const PolyMonomial& a, const PolyMonomial& b) {
  check_same_width(a.width_, b.width_, "monomial product");
  PolyMonomial r(a.width_);
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() ||
        (i < a.factors_.size() && factor_greater(a.factors_[i], b.factors_[j]))) {
      r.factors_.push_back(a.factors_[i++]);
    } else if (i == a.factors_.size() || factor_greater(b.factors_[j], a.factors_[i])) {
      r.factors_.push_back(b.factors_[j++]);
    } else {
      VarPower f = a.factors_[i++];
      f.exp += b.factors_[j++].exp;
      r.factors_.push_back(f);
    }
  }
  return r;
}

bool mono_divides(const PolyMonomial& a, const PolyMonomial& b) {
  check_same_width(a.width(), b.width(), "monomial divisibility");
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t j = 0;
  for (const auto& f : fa) {
    while (j < fb.size() && factor_greater(fb[j], f)) ++j;
    if (j == fb.size() || !same_variable(fb[j], f) || fb[j].exp < f.exp) return false;
  }
  return true;
}

PolyMonomial mono_quotient(const PolyMonomial& b, const PolyMonomial& a) {
  if (!mono_divides(a, b)) throw InvalidArgument("monomial quotient: divisor does not divide");
  PolyMonomial r(b.width_);
  std::size_t i = 0;
  for (const auto& f : b.factors_) {
    VarPower q = f;
    if (i < a.factors_.size() && same_variable(a.factors_[i], f)) q.exp -= a.factors_[i++].exp;
    if (q.exp > 0) r.factors_.push_back(q);
  }
  return r;
}

PolyMonomial mono_lcm(const PolyMonomial& a, const PolyMonomial& b) {
  check_same_width(a.width_, b.width_, "monomial lcm");
  PolyMonomial r(a.width_);
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    if (j == b.factors_.size() ||
        (i < a.factors_.size() && factor_greater(a.factors_[i], b.factors_[j]))) {
      r.factors_.push_back(a.factors_[i++]);
    } else if (i == a.factors_.size() || factor_greater(b.factors_[j], a.factors_[i])) {
      r.factors_.push_back(b.factors_[j++]);
    } else {
      VarPower f = a.factors_[i++];
      f.exp = std::max(f.exp, b.factors_[j++].exp);
      r.factors_.push_back(f);
    }
  }
  return r;
}

PolyMonomial apply_morphism(const OIMorphism& eps, const PolyMonomial& a) {
  check_same_width(eps.source(), a.width_, "apply_morphism");
  PolyMonomial r(eps.target());
  r.factors_ = a.factors_;
  // Strictly increasing maps keep the factor order intact.
  for (auto& f : r.factors_) f.col = eps(f.col);
  return r;
}

std::string to_string(const PolyMonomial& a, const std::string& symbol) {
  if (a.is_one()) return "1";
  std::string s;
  for (const auto& f : a.factors()) {
    if (!s.empty()) s += '*';
    s += symbol + "(" + std::to_string(f.row) + "," + std::to_string(f.col) + ")";
    if (f.exp != 1) s += "^" + std::to_string(f.exp);
  }
  return s;
}

Polynomial::Polynomial(Width width, std::vector<PolyTerm> terms) : width_(width) {
  for (auto& t : terms) {
    check_same_width(width, t.mono.width(), "polynomial term");
    t.coeff.canonicalize();
  }
  std::stable_sort(terms.begin(), terms.end(), [](const PolyTerm& a, const PolyTerm& b) {
    return compare(a.mono, b.mono) > 0;
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const PolyTerm& t) { return t.coeff == 0; });
}

Polynomial Polynomial::constant(Width width, const Rational& c) {
  return Polynomial(width, {PolyTerm{c, PolyMonomial(width)}});
}

Polynomial Polynomial::monomial(const PolyMonomial& m, const Rational& c) {
  return Polynomial(m.width(), {PolyTerm{c, m}});
}

const PolyTerm& Polynomial::lead_term() const {
  if (terms_.empty()) throw InvalidArgument("lead term of the zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<PolyTerm> merge_terms(const std::vector<PolyTerm>& a, const std::vector<PolyTerm>& b,
                                  int sign) {
  std::vector<PolyTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    const auto c = (i == a.size())   ? std::strong_ordering::less
                   : (j == b.size()) ? std::strong_ordering::greater
                                     : compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (s != 0) out.push_back({std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  check_same_width(width_, q.width_, "polynomial sum");
  terms_ = merge_terms(terms_, q.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  check_same_width(width_, q.width_, "polynomial difference");
  terms_ = merge_terms(terms_, q.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  check_same_width(p.width_, q.width_, "polynomial product");
  std::vector<PolyTerm> terms;
  terms.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& a : p.terms_)
    for (const auto& b : q.terms_) terms.push_back({a.coeff * b.coeff, a.mono * b.mono});
  return Polynomial(p.width_, std::move(terms));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c == 0) return Polynomial(p.width_);
  Polynomial r = p;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial apply_morphism(const OIMorphism& eps, const Polynomial& p) {
  check_same_width(eps.source(), p.width(), "apply_morphism");
  std::vector<PolyTerm> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) terms.push_back({t.coeff, apply_morphism(eps, t.mono)});
  return Polynomial(eps.target(), std::move(terms));
}

std::optional<int> degree(const Polynomial& p) {
  if (p.is_zero()) return std::nullopt;
  const int d = p.terms().front().mono.degree();
  for (const auto& t : p.terms())
    if (t.mono.degree() != d) return std::nullopt;
  return d;
}

bool is_homogeneous(const Polynomial& p) { return p.is_zero() || degree(p).has_value(); }

std::string format_term(const Rational& coeff, const std::string& body, bool leading) {
  std::string s;
  Rational mag = coeff;
  if (leading) {
    if (coeff < 0) {
      s = "-";
      mag = -coeff;
    }
  } else {
    s = coeff < 0 ? " - " : " + ";
    if (coeff < 0) mag = -coeff;
  }
  if (body.empty()) return s + to_string(mag);
  if (mag == 1) return s + body;
  return s + to_string(mag) + "*" + body;
}

std::string to_string(const Polynomial& p, const std::string& symbol) {
  if (p.is_zero()) return "0";
  std::string s;
  bool leading = true;
  for (const auto& t : p.terms()) {
    s += format_term(t.coeff, t.mono.is_one() ? std::string() : to_string(t.mono, symbol), leading);
    leading = false;
  }
  return s;
}

}  // namespace oigb
