#include "oigb/free_module.hpp"

#include <algorithm>

#include "oigb/error.hpp"

namespace oigb {

ModuleMonomial apply_morphism(const OIMorphism& eps, const ModuleMonomial& m) {
  return {apply_morphism(eps, m.mono), BasisIndex{m.basis.summand, compose(m.basis.map, eps)}};
}

ModulePtr FreeOIModule::make(AlgebraDescriptor algebra, std::string symbol,
                             std::vector<Width> widths, std::vector<int> twists,
                             MonomialOrder order) {
  if (algebra.rows < 1) throw InvalidArgument("a polynomial OI-algebra needs at least one row");
  if (widths.empty()) throw InvalidArgument("a free OI-module needs at least one generator");
  for (Width w : widths)
    if (w < 0) throw InvalidArgument("generator widths must be nonnegative");
  if (twists.empty()) twists.assign(widths.size(), 0);
  if (twists.size() != widths.size())
    throw InvalidArgument("twists and generator widths differ in length");
  if (const auto* s = std::get_if<SchreyerOrder>(&order)) {
    if (!s->target) throw InvalidArgument("Schreyer order without a target module");
    if (s->lead_images.size() != widths.size())
      throw InvalidArgument("Schreyer order needs one lead image per generator");
    for (std::size_t i = 0; i < widths.size(); ++i) {
      if (s->lead_images[i].width() != widths[i])
        throw WidthMismatch("Schreyer lead image lives in the wrong width");
      s->target->validate(s->lead_images[i]);
    }
  }
  auto m = std::shared_ptr<FreeOIModule>(new FreeOIModule());
  m->algebra_ = std::move(algebra);
  m->symbol_ = std::move(symbol);
  m->widths_ = std::move(widths);
  m->twists_ = std::move(twists);
  m->order_ = std::move(order);
  return m;
}

ModulePtr FreeOIModule::make_zero(AlgebraDescriptor algebra, std::string symbol) {
  auto m = std::shared_ptr<FreeOIModule>(new FreeOIModule());
  m->algebra_ = std::move(algebra);
  m->symbol_ = std::move(symbol);
  return m;
}

std::size_t FreeOIModule::rank_in_width(Width n) const {
  std::size_t r = 0;
  for (Width d : widths_) r += binomial(n, d);
  return r;
}

std::size_t rank_in_width(const FreeOIModule& module, Width n) { return module.rank_in_width(n); }

std::vector<BasisIndex> FreeOIModule::basis_in_width(Width n) const {
  std::vector<BasisIndex> out;
  for (int i = 1; i <= rank(); ++i)
    for (auto& pi : enumerate_hom(generator_width(i), n)) out.push_back({i, std::move(pi)});
  return out;
}

void FreeOIModule::validate(const ModuleMonomial& m) const {
  const auto& b = m.basis;
  if (b.summand < 1 || b.summand > rank())
    throw InvalidArgument("basis index " + std::to_string(b.summand) + " out of range for " +
                          symbol_);
  if (b.map.source() != generator_width(b.summand))
    throw InvalidArgument("basis element " + basis_string(symbol_, b) +
                          " must be indexed by a map out of [" +
                          std::to_string(generator_width(b.summand)) + "]");
  if (m.mono.width() != b.width())
    throw WidthMismatch("monomial and basis element live in different widths");
  if (m.mono.max_row() > algebra_.rows)
    throw InvalidArgument("variable row exceeds " + std::to_string(algebra_.rows));
}

ModuleMonomial FreeOIModule::schreyer_image(const ModuleMonomial& m) const {
  const auto& s = std::get<SchreyerOrder>(order_);
  const auto& lead = s.lead_images[static_cast<std::size_t>(m.basis.summand - 1)];
  return {m.mono * apply_morphism(m.basis.map, lead.mono),
          BasisIndex{lead.basis.summand, compose(lead.basis.map, m.basis.map)}};
}

std::strong_ordering FreeOIModule::compare(const ModuleMonomial& a, const ModuleMonomial& b) const {
  using std::strong_ordering;
  if (const auto* s = std::get_if<SchreyerOrder>(&order_)) {
    if (auto c = s->target->compare(schreyer_image(a), schreyer_image(b)); c != 0) return c;
    if (a.basis.summand != b.basis.summand) {
      const bool a_larger = (a.basis.summand < b.basis.summand) == s->tiebreak.smaller_summand_larger;
      return a_larger ? strong_ordering::greater : strong_ordering::less;
    }
    if (a.basis.map != b.basis.map) {
      const bool a_larger = (a.basis.map < b.basis.map) == s->tiebreak.smaller_map_larger;
      return a_larger ? strong_ordering::greater : strong_ordering::less;
    }
    return oigb::compare(a.mono, b.mono);
  }
  if (a.basis.summand != b.basis.summand) return b.basis.summand <=> a.basis.summand;
  if (a.basis.map != b.basis.map) return a.basis.map <=> b.basis.map;
  return oigb::compare(a.mono, b.mono);
}

ModuleElement::ModuleElement(ModulePtr module, Width width)
    : module_(std::move(module)), width_(width) {
  if (!module_) throw InvalidArgument("element without a module");
}

ModuleElement::ModuleElement(ModulePtr module, Width width, std::vector<Term> terms)
    : ModuleElement(std::move(module), width) {
  for (auto& t : terms) {
    t.coeff.canonicalize();
    if (t.monomial.width() != width)
      throw WidthMismatch("term " + to_string(t.monomial, *module_) + " does not live in width " +
                          std::to_string(width));
    module_->validate(t.monomial);
  }
  const FreeOIModule& mod = *module_;
  std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return mod.compare(a.monomial, b.monomial) > 0;
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
}

ModuleElement ModuleElement::basis_element(ModulePtr module, BasisIndex basis) {
  const Width w = basis.width();
  return ModuleElement(std::move(module), w, {Term{1, {PolyMonomial(w), std::move(basis)}}});
}

const Term& ModuleElement::lead_term() const {
  if (terms_.empty()) throw InvalidArgument("lead term of the zero element");
  return terms_.front();
}

void ModuleElement::check_compatible(const ModuleElement& g, const char* what) const {
  if (module_ != g.module_) throw WidthMismatch(std::string(what) + ": elements of different modules");
  if (width_ != g.width_)
    throw WidthMismatch(std::string(what) + ": widths " + std::to_string(width_) + " and " +
                        std::to_string(g.width_) + " differ");
}

ModuleElement ModuleElement::operator-() const {
  ModuleElement r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void ModuleElement::add_multiple(const Rational& c, const PolyMonomial& m, const ModuleElement& g) {
  check_compatible(g, "element arithmetic");
  if (c == 0 || g.is_zero()) return;
  const FreeOIModule& mod = *module_;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  auto scaled = [&](const Term& t) {
    return Term{c * t.coeff, {m * t.monomial.mono, t.monomial.basis}};
  };
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    Term gt = scaled(g.terms_[j]);
    const auto ord = i == terms_.size() ? std::strong_ordering::less
                                        : mod.compare(terms_[i].monomial, gt.monomial);
    if (ord > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (ord < 0) {
      out.push_back(std::move(gt));
      ++j;
    } else {
      terms_[i].coeff += gt.coeff;
      if (terms_[i].coeff != 0) out.push_back(std::move(terms_[i]));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& g) {
  add_multiple(1, PolyMonomial(width_), g);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& g) {
  add_multiple(-1, PolyMonomial(width_), g);
  return *this;
}

ModuleElement operator*(const Rational& c, const ModuleElement& f) {
  if (c == 0) return ModuleElement(f.module_, f.width_);
  ModuleElement r = f;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

ModuleElement operator*(const Polynomial& p, const ModuleElement& f) {
  if (p.width() != f.width_) throw WidthMismatch("scalar and element live in different widths");
  ModuleElement r(f.module_, f.width_);
  for (const auto& t : p.terms()) r.add_multiple(t.coeff, t.mono, f);
  return r;
}

bool operator==(const ModuleElement& f, const ModuleElement& g) {
  return f.module_ == g.module_ && f.width_ == g.width_ && f.terms_ == g.terms_;
}

ModuleElement ModuleElement::monic() const {
  if (is_zero()) return *this;
  return Rational(1 / lead_coefficient()) * *this;
}

Term ModuleElement::take_lead() {
  if (terms_.empty()) throw InvalidArgument("lead term of the zero element");
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

void ModuleElement::append_trailing(Term t) {
  if (t.monomial.width() != width_) throw WidthMismatch("appended term in the wrong width");
  terms_.push_back(std::move(t));
}

ModuleElement apply_morphism(const OIMorphism& eps, const ModuleElement& f) {
  if (eps.source() != f.width_)
    throw WidthMismatch("cannot apply " + to_string(eps) + " to an element of width " +
                        std::to_string(f.width_));
  std::vector<Term> terms;
  terms.reserve(f.terms_.size());
  for (const auto& t : f.terms_) terms.push_back({t.coeff, apply_morphism(eps, t.monomial)});
  // Module orders are compatible with OI maps, so the images stay sorted.
  return ModuleElement(f.module_, eps.target(), std::move(terms), ModuleElement::Sorted{});
}

ModuleElement rebase(const ModuleElement& f, ModulePtr module) {
  if (module->widths() != f.module_->widths())
    throw WidthMismatch("rebase between modules with different generators");
  return ModuleElement(std::move(module), f.width_, f.terms_);
}

namespace {

bool canonical_less(const Term& a, const Term& b) {
  if (a.monomial.basis.summand != b.monomial.basis.summand)
    return a.monomial.basis.summand < b.monomial.basis.summand;
  if (a.monomial.basis.map != b.monomial.basis.map) return a.monomial.basis.map < b.monomial.basis.map;
  return compare(a.monomial.mono, b.monomial.mono) < 0;
}

}  // namespace

bool same_terms(const ModuleElement& f, const ModuleElement& g) {
  if (f.width() != g.width() || f.terms().size() != g.terms().size()) return false;
  if (f.module()->widths() != g.module()->widths()) return false;
  auto a = f.terms();
  auto b = g.terms();
  std::sort(a.begin(), a.end(), canonical_less);
  std::sort(b.begin(), b.end(), canonical_less);
  return a == b;
}

namespace {

// Backtracking over strictly increasing ε : [m] -> [n] that send π onto σ and
// carry every column of `a` into a column of `b` dominating it. Witnesses are
// produced in lexicographic order; `visit` returns false to stop.
template <typename Visit>
void search_divisors(const ModuleMonomial& small, const ModuleMonomial& big, Visit&& visit) {
  if (small.basis.summand != big.basis.summand) return;
  const Width m = small.width();
  const Width n = big.width();
  if (m > n || small.mono.degree() > big.mono.degree()) return;
  const auto& pi = small.basis.map.image();
  const auto& sigma = big.basis.map.image();
  if (pi.size() != sigma.size()) return;

  std::vector<int> fixed(static_cast<std::size_t>(m) + 1, 0);
  for (std::size_t k = 0; k < pi.size(); ++k) fixed[static_cast<std::size_t>(pi[k])] = sigma[k];

  std::vector<std::vector<VarPower>> columns(static_cast<std::size_t>(m) + 1);
  for (const auto& f : small.mono.factors()) columns[static_cast<std::size_t>(f.col)].push_back(f);

  // upper[p]: largest admissible value at p given later fixed values.
  std::vector<int> upper(static_cast<std::size_t>(m) + 2, n + 1);
  for (int p = m; p >= 1; --p) {
    const auto up = static_cast<std::size_t>(p);
    upper[up] = std::min(n, upper[up + 1] - 1);
    if (fixed[up] != 0) upper[up] = std::min(upper[up], fixed[up]);
  }

  auto column_fits = [&](int p, int value) {
    for (const auto& f : columns[static_cast<std::size_t>(p)])
      if (big.mono.exponent(f.row, value) < f.exp) return false;
    return true;
  };

  std::vector<int> image(static_cast<std::size_t>(m), 0);
  bool stop = false;
  auto recurse = [&](auto&& self, int p, int lower) -> void {
    if (stop) return;
    if (p > m) {
      if (!visit(OIMorphism(n, image))) stop = true;
      return;
    }
    const auto up = static_cast<std::size_t>(p);
    int lo = lower, hi = upper[up];
    if (fixed[up] != 0) {
      if (fixed[up] < lo) return;
      lo = hi = fixed[up];
    }
    for (int v = lo; v <= hi && !stop; ++v) {
      if (!column_fits(p, v)) continue;
      image[up - 1] = v;
      self(self, p + 1, v + 1);
    }
  };
  recurse(recurse, 1, 1);
}

}  // namespace

std::vector<OIMorphism> oi_divides(const ModuleMonomial& small, const ModuleMonomial& big) {
  std::vector<OIMorphism> out;
  search_divisors(small, big, [&](OIMorphism eps) {
    out.push_back(std::move(eps));
    return true;
  });
  return out;
}

std::optional<OIMorphism> first_oi_divisor(const ModuleMonomial& small, const ModuleMonomial& big) {
  std::optional<OIMorphism> out;
  search_divisors(small, big, [&](OIMorphism eps) {
    out = std::move(eps);
    return false;
  });
  return out;
}

int monomial_degree(const FreeOIModule& module, const ModuleMonomial& m) {
  return m.mono.degree() - module.twist(m.basis.summand);
}

std::optional<int> element_degree(const ModuleElement& f) {
  if (f.is_zero()) return std::nullopt;
  const int d = monomial_degree(*f.module(), f.terms().front().monomial);
  for (const auto& t : f.terms())
    if (monomial_degree(*f.module(), t.monomial) != d) return std::nullopt;
  return d;
}

bool is_homogeneous(const ModuleElement& f) { return f.is_zero() || element_degree(f).has_value(); }

std::string basis_string(const std::string& symbol, const BasisIndex& b) {
  return symbol + "(" + std::to_string(b.width()) + "," + image_string(b.map) + "," +
         std::to_string(b.summand) + ")";
}

std::string to_string(const ModuleMonomial& m, const FreeOIModule& module) {
  std::string s = basis_string(module.symbol(), m.basis);
  if (m.mono.is_one()) return s;
  return to_string(m.mono, module.algebra().symbol) + "*" + s;
}

std::string to_string(const ModuleElement& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool leading = true;
  for (const auto& t : f.terms()) {
    s += format_term(t.coeff, to_string(t.monomial, *f.module()), leading);
    leading = false;
  }
  return s;
}

}  // namespace oigb
