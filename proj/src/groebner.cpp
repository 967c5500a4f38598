#include "oigb/groebner.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <tuple>

#include "oigb/error.hpp"

namespace oigb {

ReductionTrace reduce(const ModuleElement& f, std::span<const ModuleElement> divisors, bool full) {
  for (const auto& g : divisors)
    if (g.module() != f.module()) throw WidthMismatch("reduce: divisor from a different module");

  ReductionTrace trace{{}, ModuleElement(f.module(), f.width())};
  ModuleElement h = f;
  while (!h.is_zero()) {
    const Term& lead = h.lead_term();
    bool divided = false;
    for (std::size_t k = 0; k < divisors.size() && !divided; ++k) {
      const ModuleElement& g = divisors[k];
      if (g.is_zero() || g.width() > h.width()) continue;
      auto eps = first_oi_divisor(g.lead_monomial(), lead.monomial);
      if (!eps) continue;
      ModuleElement mapped = apply_morphism(*eps, g);
      PolyMonomial multiplier = mono_quotient(lead.monomial.mono, mapped.lead_monomial().mono);
      Rational coeff = lead.coeff / mapped.lead_coefficient();
      h.add_multiple(-coeff, multiplier, mapped);
      trace.quotients.push_back({k, std::move(*eps), std::move(coeff), std::move(multiplier)});
      divided = true;
    }
    if (divided) continue;
    if (!full) {
      trace.remainder += h;
      break;
    }
    trace.remainder.append_trailing(h.take_lead());
  }
  return trace;
}

ModuleElement replay(const ReductionTrace& trace, std::span<const ModuleElement> divisors) {
  ModuleElement out = trace.remainder;
  for (const auto& q : trace.quotients)
    out.add_multiple(q.coeff, q.multiplier, apply_morphism(q.map, divisors[q.generator]));
  return out;
}

std::vector<CoveringPair> lead_covering_pairs(const ModuleElement& gp, const ModuleElement& gq,
                                              bool same_element) {
  std::vector<CoveringPair> out;
  const ModuleMonomial& lp = gp.lead_monomial();
  const ModuleMonomial& lq = gq.lead_monomial();
  if (lp.basis.summand != lq.basis.summand) return out;
  const Width m = gp.width();
  const Width n = gq.width();
  const auto& sp = lp.basis.map.image();
  const auto& sq = lq.basis.map.image();

  std::vector<int> image(static_cast<std::size_t>(n));
  std::vector<int> required(static_cast<std::size_t>(n) + 1);
  std::vector<char> in_first;
  for (Width t = std::max(m, n); t <= m + n; ++t) {
    for (const OIMorphism& first : enumerate_hom(m, t)) {
      std::fill(required.begin(), required.end(), 0);
      for (std::size_t k = 0; k < sq.size(); ++k)
        required[static_cast<std::size_t>(sq[k])] = first(sp[k]);
      in_first.assign(static_cast<std::size_t>(t) + 1, 0);
      for (int a : first.image()) in_first[static_cast<std::size_t>(a)] = 1;

      // next_uncovered: smallest value outside im(first) not yet in the image.
      auto recurse = [&](auto&& self, int pos, int lower) -> void {
        if (pos > n) {
          for (int v = lower; v <= t; ++v)
            if (!in_first[static_cast<std::size_t>(v)]) return;
          OIMorphism second(t, image);
          if (same_element && !(first < second)) return;
          out.push_back({t, first, std::move(second)});
          return;
        }
        const auto up = static_cast<std::size_t>(pos);
        const int hi = t - (n - pos);
        const int fixed = required[up];
        for (int v = lower; v <= hi; ++v) {
          if (fixed != 0 && v != fixed) {
            if (v > fixed) return;
            if (!in_first[static_cast<std::size_t>(v)]) return;
            continue;
          }
          image[up - 1] = v;
          self(self, pos + 1, v + 1);
          // Skipping v leaves it uncovered; only values in im(first) may be skipped.
          if (!in_first[static_cast<std::size_t>(v)]) return;
        }
      };
      recurse(recurse, 1, 1);
    }
  }
  return out;
}

std::vector<CriticalPair> critical_pairs(std::span<const ModuleElement> G) {
  std::vector<CriticalPair> out;
  for (std::size_t q = 0; q < G.size(); ++q)
    for (std::size_t p = 0; p <= q; ++p)
      for (auto& c : lead_covering_pairs(G[p], G[q], p == q)) out.push_back({p, q, std::move(c)});
  std::stable_sort(out.begin(), out.end(), [](const CriticalPair& a, const CriticalPair& b) {
    return a.maps.target < b.maps.target;
  });
  return out;
}

std::optional<ModuleElement> s_polynomial(const ModuleElement& gp, const ModuleElement& gq,
                                          const CoveringPair& pair) {
  if (gp.module() != gq.module()) throw WidthMismatch("S-polynomial of elements of different modules");
  if (pair.first.source() != gp.width() || pair.second.source() != gq.width() ||
      pair.first.target() != pair.target || pair.second.target() != pair.target)
    throw InvalidArgument("malformed covering pair");
  std::vector<char> covered(static_cast<std::size_t>(pair.target) + 1, 0);
  for (int a : pair.first.image()) covered[static_cast<std::size_t>(a)] = 1;
  for (int a : pair.second.image()) covered[static_cast<std::size_t>(a)] = 1;
  if (std::count(covered.begin() + 1, covered.end(), 1) != pair.target)
    throw InvalidArgument("maps of a covering pair must cover the target width");

  ModuleElement fp = apply_morphism(pair.first, gp);
  ModuleElement fq = apply_morphism(pair.second, gq);
  const ModuleMonomial& l1 = fp.lead_monomial();
  const ModuleMonomial& l2 = fq.lead_monomial();
  if (l1.basis != l2.basis) return std::nullopt;
  const PolyMonomial lcm = mono_lcm(l1.mono, l2.mono);
  ModuleElement s(gp.module(), pair.target);
  s.add_multiple(1 / fp.lead_coefficient(), mono_quotient(lcm, l1.mono), fp);
  s.add_multiple(-1 / fq.lead_coefficient(), mono_quotient(lcm, l2.mono), fq);
  return s;
}

namespace {

struct QueuedPair {
  Width target;
  std::size_t second;
  std::size_t first;
  std::size_t seq;
  CoveringPair maps;

  auto key() const { return std::tie(target, second, first, seq); }
};

struct LaterPair {
  bool operator()(const QueuedPair& a, const QueuedPair& b) const { return a.key() > b.key(); }
};

}  // namespace

GroebnerBasis oi_gb(std::span<const ModuleElement> B, const GroebnerOptions& options) {
  if (B.empty()) throw InvalidArgument("oi_gb needs at least one element");
  GroebnerBasis gb{B.front().module(), {}};
  for (const auto& b : B) {
    if (b.module() != gb.module) throw WidthMismatch("oi_gb: elements of different modules");
    if (b.is_zero()) throw InvalidArgument("oi_gb: zero element in the input");
    gb.elements.push_back(b.monic());
  }
  auto& G = gb.elements;

  std::priority_queue<QueuedPair, std::vector<QueuedPair>, LaterPair> queue;
  auto enqueue = [&](std::size_t q) {
    for (std::size_t p = 0; p <= q; ++p) {
      std::size_t seq = 0;
      for (auto& c : lead_covering_pairs(G[p], G[q], p == q))
        queue.push({c.target, q, p, seq++, std::move(c)});
    }
  };
  for (std::size_t q = 0; q < G.size(); ++q) enqueue(q);

  std::size_t processed = 0;
  while (!queue.empty()) {
    QueuedPair pair = queue.top();
    queue.pop();
    if (++processed > options.pair_cap)
      throw ResourceError("oi_gb: critical pair cap " + std::to_string(options.pair_cap) +
                          " exceeded with " + std::to_string(G.size()) + " basis elements and " +
                          std::to_string(queue.size() + 1) + " pairs pending");
    auto s = s_polynomial(G[pair.first], G[pair.second], pair.maps);
    if (!s || s->is_zero()) continue;
    ModuleElement rem = reduce(*s, G).remainder;
    if (options.log) {
      *options.log << "pair (" << pair.first + 1 << "," << pair.second + 1 << ") "
                   << to_string(pair.maps.first) << " " << to_string(pair.maps.second) << "\n"
                   << "  S = " << to_string(*s) << "\n"
                   << "  remainder = " << to_string(rem) << "\n";
    }
    if (rem.is_zero()) continue;
    G.push_back(rem.monic());
    if (options.log) *options.log << "  new element " << G.size() << ": " << to_string(G.back()) << "\n";
    enqueue(G.size() - 1);
  }
  if (options.minimize) G = minimize_basis(G);
  return gb;
}

bool is_groebner(std::span<const ModuleElement> G) {
  for (const auto& pair : critical_pairs(G)) {
    auto s = s_polynomial(G[pair.first], G[pair.second], pair.maps);
    if (s && !reduce(*s, G).remainder.is_zero()) return false;
  }
  return true;
}

std::vector<ModuleElement> minimize_basis(std::span<const ModuleElement> G) {
  std::vector<char> alive(G.size(), 1);
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j || !alive[j]) continue;
      const auto& li = G[i].lead_monomial();
      const auto& lj = G[j].lead_monomial();
      if (li == lj && j > i) continue;
      if (first_oi_divisor(lj, li)) {
        alive[i] = 0;
        break;
      }
    }
  }
  std::vector<ModuleElement> out;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (alive[i]) out.push_back(G[i]);
  return out;
}

}  // namespace oigb
