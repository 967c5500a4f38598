#include "oigb/resolution.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "oigb/error.hpp"
#include "oigb/groebner.hpp"
#include "oigb/parse.hpp"

namespace oigb {

namespace {

ModulePtr lex_copy(const FreeOIModule& m, std::vector<Width> widths, std::vector<int> twists) {
  if (widths.empty()) return FreeOIModule::make_zero(m.algebra(), m.symbol());
  return FreeOIModule::make(m.algebra(), m.symbol(), std::move(widths), std::move(twists));
}

/// Re-expresses `e` in `module`, renumbering summands through `renumber`
/// (0 drops the summand; e must have no terms there).
ModuleElement project(const ModuleElement& e, const std::vector<int>& renumber, const ModulePtr& module) {
  std::vector<Term> terms;
  for (const auto& t : e.terms()) {
    const int s = renumber[static_cast<std::size_t>(t.monomial.basis.summand)];
    if (s == 0) continue;
    Term u = t;
    u.monomial.basis.summand = s;
    terms.push_back(std::move(u));
  }
  return ModuleElement(module, e.width(), std::move(terms));
}

/// Drops the flagged summands of `m`; renumber[i] is the new index of summand i.
ModulePtr without(const FreeOIModule& m, const std::vector<char>& dead, std::vector<int>& renumber) {
  std::vector<Width> widths;
  std::vector<int> twists;
  renumber.assign(static_cast<std::size_t>(m.rank()) + 1, 0);
  for (int i = 1; i <= m.rank(); ++i) {
    if (dead[static_cast<std::size_t>(i - 1)]) continue;
    widths.push_back(m.generator_width(i));
    twists.push_back(m.twist(i));
    renumber[static_cast<std::size_t>(i)] = static_cast<int>(widths.size());
  }
  return lex_copy(m, std::move(widths), std::move(twists));
}

std::string step_symbol(const std::string& base, std::size_t j) { return base + std::to_string(j); }

}  // namespace

FreeComplex oi_res(std::span<const ModuleElement> B, int degree, const ResolutionOptions& options) {
  if (degree < 0) throw InvalidArgument("oi_res: homological degree must be nonnegative");
  if (B.empty()) throw InvalidArgument("oi_res needs at least one element");
  if (options.minimize)
    for (const auto& b : B)
      if (!is_homogeneous(b))
        throw InvalidArgument("oi_res: minimization requires homogeneous input, but " +
                              to_string(b) + " is not homogeneous");

  FreeComplex complex;
  complex.base = B.front().module();
  const AlgebraDescriptor& algebra = complex.base->algebra();
  const std::string& symbol = complex.base->symbol();

  GroebnerOptions gb_options;
  gb_options.log = options.log;
  gb_options.pair_cap = options.pair_cap;
  gb_options.minimize = true;
  if (options.log) *options.log << "computing a Gröbner basis\n";
  std::vector<ModuleElement> current = oi_gb(B, gb_options).elements;
  complex.images.push_back(current);

  SyzygyOptions syz_options;
  syz_options.log = options.log;
  syz_options.tiebreak = options.tiebreak;
  syz_options.pair_cap = options.pair_cap;
  for (int j = 0; j < degree; ++j) {
    if (options.log) *options.log << "computing syzygies of step " << j << "\n";
    SyzygyBasis syz = oi_syz(current, step_symbol(symbol, static_cast<std::size_t>(j)), syz_options);
    complex.modules.push_back(syz.map.source);
    current = std::move(syz.elements);
    complex.images.push_back(current);
    if (current.empty()) break;
  }
  const auto last = complex.modules.size();
  if (!current.empty())
    complex.modules.push_back(make_canonical_map(current, step_symbol(symbol, last), options.tiebreak).source);
  else
    complex.modules.push_back(FreeOIModule::make_zero(algebra, step_symbol(symbol, last)));
  while (complex.modules.size() < static_cast<std::size_t>(degree) + 1) {
    complex.modules.push_back(FreeOIModule::make_zero(algebra, step_symbol(symbol, complex.modules.size())));
    complex.images.emplace_back();
  }

  if (options.minimize) prune(complex, options.log);
  return complex;
}

void prune(FreeComplex& complex, std::ostream* log) {
  // Eliminations at step j only touch steps j - 1, j and j + 1 and never create
  // pivots below j, so the steps can be finished one at a time.
  for (std::size_t step = 1; step < complex.length(); ++step) {
    auto& images = complex.images[step];
    auto is_unit = [](const Term& t) { return t.monomial.mono.is_one() && t.monomial.basis.map.is_identity(); };
    const bool any = std::any_of(images.begin(), images.end(), [&](const ModuleElement& e) {
      return std::any_of(e.terms().begin(), e.terms().end(), is_unit);
    });
    if (!any) continue;

    // Eliminate under the lex order: Schreyer comparisons recurse through every
    // earlier step and dominate the cost otherwise.
    const ModulePtr source = complex.modules[step];
    const ModulePtr target =
        lex_copy(*complex.modules[step - 1], complex.modules[step - 1]->widths(), complex.modules[step - 1]->twists());
    for (auto& e : images) e = rebase(e, target);
    std::vector<char> dead_gen(images.size(), 0);
    std::vector<char> dead_summand(static_cast<std::size_t>(target->rank()), 0);
    std::size_t eliminated = 0;

    for (std::size_t gen = 0; gen < images.size(); ++gen) {
      if (dead_gen[gen]) continue;
      const Term* unit_term = nullptr;
      for (const auto& t : images[gen].terms())
        if (is_unit(t)) {
          unit_term = &t;
          break;
        }
      if (!unit_term) continue;
      const int summand = unit_term->monomial.basis.summand;
      const Rational unit = unit_term->coeff;
      if (log)
        *log << "pruning generator " << gen + 1 << " of step " << step << " against generator " << summand
             << " of step " << step - 1 << "\n";

      // Afterwards the pivot is the only image with a term on `summand`. A
      // correction never creates a unit term, so earlier generators stay settled.
      const ModuleElement pivot = images[gen];
      dead_gen[gen] = 1;
      dead_summand[static_cast<std::size_t>(summand - 1)] = 1;
      ++eliminated;
      std::map<OIMorphism, ModuleElement> pushed;
      for (std::size_t h = 0; h < images.size(); ++h) {
        if (dead_gen[h]) continue;
        // Gathered and sorted once; merging term by term is quadratic here.
        std::vector<Term> correction;
        for (const auto& t : images[h].terms()) {
          if (t.monomial.basis.summand != summand) continue;
          const OIMorphism& pi = t.monomial.basis.map;
          auto it = pushed.find(pi);
          if (it == pushed.end()) it = pushed.emplace(pi, apply_morphism(pi, pivot)).first;
          const Rational c = -t.coeff / unit;
          for (const auto& u : it->second.terms())
            correction.push_back({c * u.coeff, {t.monomial.mono * u.monomial.mono, u.monomial.basis}});
        }
        if (!correction.empty()) images[h] += ModuleElement(target, images[h].width(), std::move(correction));
      }
    }
    if (eliminated == 0) continue;

    std::vector<int> target_renumber, source_renumber;
    const ModulePtr new_target = without(*target, dead_summand, target_renumber);
    const ModulePtr new_source = without(*source, dead_gen, source_renumber);
    std::vector<ModuleElement> kept;
    for (std::size_t h = 0; h < images.size(); ++h)
      if (!dead_gen[h]) kept.push_back(project(images[h], target_renumber, new_target));
    images = std::move(kept);

    auto& below = complex.images[step - 1];
    std::vector<ModuleElement> below_kept;
    for (std::size_t i = 0; i < below.size(); ++i)
      if (!dead_summand[i]) below_kept.push_back(std::move(below[i]));
    below = std::move(below_kept);

    if (step + 1 < complex.length())
      for (auto& e : complex.images[step + 1]) e = project(e, source_renumber, new_source);
    complex.modules[step - 1] = new_target;
    complex.modules[step] = new_source;
  }
}

std::vector<int> ranks(const FreeComplex& complex) {
  std::vector<int> out;
  for (const auto& m : complex.modules) out.push_back(m->rank());
  return out;
}

ModuleElement apply_differential(const FreeComplex& complex, std::size_t j, const ModuleElement& s) {
  if (s.module() != complex.modules.at(j)) throw WidthMismatch("element is not in the source of the differential");
  ModuleElement out(complex.target_of(j), s.width());
  for (const auto& t : s.terms())
    out.add_multiple(t.coeff, t.monomial.mono,
                     apply_morphism(t.monomial.basis.map,
                                    complex.images[j][static_cast<std::size_t>(t.monomial.basis.summand - 1)]));
  return out;
}

bool is_complex(const FreeComplex& complex) {
  for (std::size_t j = 1; j < complex.length(); ++j)
    for (const auto& e : complex.images[j])
      if (!apply_differential(complex, j - 1, e).is_zero()) return false;
  return true;
}

namespace {

nlohmann::json module_json(const FreeOIModule& m) {
  return {{"symbol", m.symbol()}, {"widths", m.widths()}, {"twists", m.twists()}};
}

ModulePtr module_from_json(const AlgebraDescriptor& algebra, const nlohmann::json& j) {
  auto widths = j.at("widths").get<std::vector<Width>>();
  auto twists = j.value("twists", std::vector<int>{});
  auto symbol = j.at("symbol").get<std::string>();
  if (widths.empty()) return FreeOIModule::make_zero(algebra, symbol);
  return FreeOIModule::make(algebra, symbol, std::move(widths), std::move(twists));
}

}  // namespace

nlohmann::json describe_json(const FreeComplex& complex) {
  const auto& algebra = complex.base->algebra();
  nlohmann::json out;
  out["algebra"] = {{"rows", algebra.rows}, {"symbol", algebra.symbol}, {"field", algebra.field}};
  out["base"] = module_json(*complex.base);
  out["steps"] = nlohmann::json::array();
  for (std::size_t j = 0; j < complex.length(); ++j) {
    nlohmann::json step = module_json(*complex.modules[j]);
    step["images"] = nlohmann::json::array();
    for (const auto& e : complex.images[j]) step["images"].push_back(to_string(e));
    out["steps"].push_back(std::move(step));
  }
  return out;
}

std::string describe_text(const FreeComplex& complex) {
  std::ostringstream os;
  for (std::size_t j = 0; j < complex.length(); ++j) {
    const auto& m = *complex.modules[j];
    os << j << ": rank " << m.rank();
    if (m.rank() > 0) {
      os << ", widths {";
      for (int i = 0; i < m.rank(); ++i) os << (i ? "," : "") << m.widths()[static_cast<std::size_t>(i)];
      os << "}, twists {";
      for (int i = 0; i < m.rank(); ++i) os << (i ? "," : "") << m.twists()[static_cast<std::size_t>(i)];
      os << "}";
    }
    os << "\n";
    for (int i = 1; i <= m.rank(); ++i) {
      const Width w = m.generator_width(i);
      os << "   " << basis_string(m.symbol(), {i, OIMorphism::identity(w)}) << " -> "
         << to_string(complex.images[j][static_cast<std::size_t>(i - 1)]) << "\n";
    }
  }
  return os.str();
}

FreeComplex complex_from_json(const nlohmann::json& j) {
  const auto& a = j.at("algebra");
  AlgebraDescriptor algebra{a.at("rows").get<int>(), a.value("symbol", std::string("x")),
                            a.value("field", std::string("QQ"))};
  FreeComplex complex;
  complex.base = module_from_json(algebra, j.at("base"));
  for (const auto& step : j.at("steps")) {
    ModulePtr module = module_from_json(algebra, step);
    const ModulePtr target = complex.modules.empty() ? complex.base : complex.modules.back();
    std::vector<ModuleElement> images;
    std::size_t i = 0;
    for (const auto& text : step.at("images")) {
      const Width w = module->generator_width(static_cast<int>(++i));
      images.push_back(parse_element(text.get<std::string>(), target, w));
    }
    if (images.size() != static_cast<std::size_t>(module->rank()))
      throw InvalidArgument("describe: step has " + std::to_string(module->rank()) +
                            " generators but " + std::to_string(images.size()) + " images");
    complex.modules.push_back(std::move(module));
    complex.images.push_back(std::move(images));
  }
  return complex;
}

bool equivalent(const FreeComplex& a, const FreeComplex& b) {
  auto same_module = [](const FreeOIModule& x, const FreeOIModule& y) {
    return x.symbol() == y.symbol() && x.widths() == y.widths() && x.twists() == y.twists() &&
           x.algebra() == y.algebra();
  };
  if (!same_module(*a.base, *b.base) || a.length() != b.length()) return false;
  for (std::size_t j = 0; j < a.length(); ++j) {
    if (!same_module(*a.modules[j], *b.modules[j])) return false;
    if (a.images[j].size() != b.images[j].size()) return false;
    for (std::size_t i = 0; i < a.images[j].size(); ++i)
      if (!same_terms(a.images[j][i], b.images[j][i])) return false;
  }
  return true;
}

WidthMatrix width_matrix(const FreeOIModule& source, const FreeOIModule& target,
                         std::span<const ModuleElement> images, Width w) {
  WidthMatrix m{target.basis_in_width(w), source.basis_in_width(w), {}};
  std::map<std::pair<int, std::vector<int>>, std::size_t> row_of;
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    row_of[{m.rows[r].summand, m.rows[r].map.image()}] = r;
  std::vector<std::vector<std::vector<PolyTerm>>> cells(
      m.rows.size(), std::vector<std::vector<PolyTerm>>(m.cols.size()));
  for (std::size_t c = 0; c < m.cols.size(); ++c) {
    const auto& col = m.cols[c];
    const ModuleElement v = apply_morphism(col.map, images[static_cast<std::size_t>(col.summand - 1)]);
    for (const auto& t : v.terms()) {
      const auto r = row_of.at({t.monomial.basis.summand, t.monomial.basis.map.image()});
      cells[r][c].push_back({t.coeff, t.monomial.mono});
    }
  }
  m.entries.resize(m.rows.size());
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols.size(); ++c)
      m.entries[r].emplace_back(w, std::move(cells[r][c]));
  return m;
}

RestrictedComplex restrict_to_width(const FreeComplex& complex, Width w) {
  RestrictedComplex out{w, {}};
  for (std::size_t j = 0; j < complex.length(); ++j)
    out.maps.push_back(width_matrix(*complex.modules[j], *complex.target_of(j), complex.images[j], w));
  return out;
}

WidthMatrix multiply(const WidthMatrix& a, const WidthMatrix& b) {
  if (a.cols != b.rows) throw WidthMismatch("matrix product: inner bases differ");
  WidthMatrix out{a.rows, b.cols, {}};
  const Width w = a.rows.empty() ? (b.cols.empty() ? 0 : b.cols.front().width()) : a.rows.front().width();
  out.entries.assign(a.rows.size(), std::vector<Polynomial>(b.cols.size(), Polynomial(w)));
  for (std::size_t r = 0; r < a.rows.size(); ++r)
    for (std::size_t k = 0; k < a.cols.size(); ++k) {
      if (a.entries[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < b.cols.size(); ++c)
        if (!b.entries[k][c].is_zero()) out.entries[r][c] += a.entries[r][k] * b.entries[k][c];
    }
  return out;
}

bool is_zero(const WidthMatrix& m) {
  for (const auto& row : m.entries)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

nlohmann::json restricted_json(const RestrictedComplex& r, const AlgebraDescriptor& algebra) {
  nlohmann::json out;
  out["width"] = r.width;
  out["maps"] = nlohmann::json::array();
  for (const auto& m : r.maps) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& row : m.entries) {
      nlohmann::json line = nlohmann::json::array();
      for (const auto& p : row) line.push_back(to_string(p, algebra.symbol));
      entries.push_back(std::move(line));
    }
    out["maps"].push_back({{"rows", m.rows.size()}, {"cols", m.cols.size()}, {"entries", std::move(entries)}});
  }
  return out;
}

}  // namespace oigb
