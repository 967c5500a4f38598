#include "oigb/widthwise_oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "oigb/error.hpp"

namespace oigb::oracle {

namespace {

// Dense representation, independent of the OI kernel: exponent vectors indexed
// by (row - 1) * n + (col - 1), so later rows and then later columns are the
// more significant variables.
struct DenseTerm {
  Rational c;
  int pos = 0;
  std::vector<int> exp;
};
using DenseVec = std::vector<DenseTerm>;

class Ring {
 public:
  explicit Ring(const WidthModulePresentation& p)
      : n_(p.width), rows_(p.rows), weight_(p.basis.size()) {
    // Smaller summand is larger; within a summand the larger map is larger.
    std::vector<std::size_t> order(p.basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto& x = p.basis[a];
      const auto& y = p.basis[b];
      if (x.summand != y.summand) return x.summand < y.summand;
      return x.map.image() > y.map.image();
    });
    for (std::size_t k = 0; k < order.size(); ++k)
      weight_[order[k]] = static_cast<int>(order.size() - k);
  }

  std::size_t vars() const { return static_cast<std::size_t>(rows_ * n_); }

  int compare(const DenseTerm& a, const DenseTerm& b) const {
    if (a.pos != b.pos) return weight_[static_cast<std::size_t>(a.pos)] > weight_[static_cast<std::size_t>(b.pos)] ? 1 : -1;
    for (std::size_t v = vars(); v-- > 0;)
      if (a.exp[v] != b.exp[v]) return a.exp[v] > b.exp[v] ? 1 : -1;
    return 0;
  }

  DenseVec normalize(DenseVec v) const {
    std::sort(v.begin(), v.end(), [&](const DenseTerm& a, const DenseTerm& b) { return compare(a, b) > 0; });
    DenseVec out;
    for (auto& t : v) {
      if (!out.empty() && compare(out.back(), t) == 0)
        out.back().c += t.c;
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const DenseTerm& t) { return t.c == 0; });
    return out;
  }

  // a - c * m * b, where m is an exponent vector.
  DenseVec sub_multiple(const DenseVec& a, const Rational& c, const std::vector<int>& m, const DenseVec& b) const {
    DenseVec v = a;
    for (const auto& t : b) {
      DenseTerm u{-c * t.c, t.pos, t.exp};
      for (std::size_t k = 0; k < vars(); ++k) u.exp[k] += m[k];
      v.push_back(std::move(u));
    }
    return normalize(std::move(v));
  }

  static bool divides(const DenseTerm& a, const DenseTerm& b) {
    if (a.pos != b.pos) return false;
    for (std::size_t k = 0; k < a.exp.size(); ++k)
      if (a.exp[k] > b.exp[k]) return false;
    return true;
  }

  DenseVec reduce(DenseVec f, const std::vector<DenseVec>& G) const {
    DenseVec rem;
    while (!f.empty()) {
      const DenseTerm lead = f.front();
      const DenseVec* divisor = nullptr;
      for (const auto& g : G)
        if (!g.empty() && divides(g.front(), lead)) {
          divisor = &g;
          break;
        }
      if (!divisor) {
        rem.push_back(lead);
        f.erase(f.begin());
        continue;
      }
      std::vector<int> m(vars());
      for (std::size_t k = 0; k < vars(); ++k) m[k] = lead.exp[k] - divisor->front().exp[k];
      f = sub_multiple(f, lead.c / divisor->front().c, m, *divisor);
    }
    return rem;
  }

  std::optional<DenseVec> spair(const DenseVec& f, const DenseVec& g) const {
    if (f.front().pos != g.front().pos) return std::nullopt;
    std::vector<int> lcm(vars()), mf(vars()), mg(vars());
    for (std::size_t k = 0; k < vars(); ++k) {
      lcm[k] = std::max(f.front().exp[k], g.front().exp[k]);
      mf[k] = lcm[k] - f.front().exp[k];
      mg[k] = lcm[k] - g.front().exp[k];
    }
    DenseVec zero;
    DenseVec a = sub_multiple(zero, -1 / f.front().c, mf, f);
    return sub_multiple(a, 1 / g.front().c, mg, g);
  }

  int n_;
  int rows_;
  std::vector<int> weight_;
};

DenseVec to_dense(const Ring& ring, const std::vector<Polynomial>& v) {
  DenseVec out;
  for (std::size_t pos = 0; pos < v.size(); ++pos)
    for (const auto& t : v[pos].terms()) {
      DenseTerm d{t.coeff, static_cast<int>(pos), std::vector<int>(ring.vars(), 0)};
      for (const auto& f : t.mono.factors())
        d.exp[static_cast<std::size_t>((f.row - 1) * ring.n_ + (f.col - 1))] += f.exp;
      out.push_back(std::move(d));
    }
  return ring.normalize(std::move(out));
}

std::vector<Polynomial> from_dense(const Ring& ring, const DenseVec& v, std::size_t rank) {
  std::vector<std::vector<PolyTerm>> cells(rank);
  for (const auto& t : v) {
    std::vector<VarPower> factors;
    for (std::size_t k = 0; k < ring.vars(); ++k)
      if (t.exp[k] > 0)
        factors.push_back({static_cast<int>(k) / ring.n_ + 1, static_cast<int>(k) % ring.n_ + 1, t.exp[k]});
    cells[static_cast<std::size_t>(t.pos)].push_back({t.c, PolyMonomial(ring.n_, std::move(factors))});
  }
  std::vector<Polynomial> out;
  for (auto& c : cells) out.emplace_back(ring.n_, std::move(c));
  return out;
}

std::vector<DenseVec> dense_generators(const Ring& ring, const WidthModulePresentation& p) {
  std::vector<DenseVec> out;
  for (const auto& g : p.generators) {
    if (g.size() != p.basis.size()) throw InvalidArgument("generator length differs from the rank");
    DenseVec d = to_dense(ring, g);
    if (!d.empty()) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

WidthModulePresentation expand_in_width(std::span<const ModuleElement> B, Width n) {
  WidthModulePresentation out;
  out.width = n;
  if (B.empty()) return out;
  const FreeOIModule& module = *B.front().module();
  out.rows = module.algebra().rows;
  out.basis = module.basis_in_width(n);
  std::map<std::pair<int, std::vector<int>>, std::size_t> position;
  for (std::size_t k = 0; k < out.basis.size(); ++k)
    position[{out.basis[k].summand, out.basis[k].map.image()}] = k;

  for (const auto& b : B) {
    for (const auto& eps : enumerate_hom(b.width(), n)) {
      std::vector<std::vector<PolyTerm>> cells(out.basis.size());
      for (const auto& t : b.terms()) {
        // Substitute columns and compose the basis map by hand.
        std::vector<VarPower> factors = t.monomial.mono.factors();
        for (auto& f : factors) f.col = eps.image()[static_cast<std::size_t>(f.col - 1)];
        std::vector<int> image;
        for (int a : t.monomial.basis.map.image()) image.push_back(eps.image()[static_cast<std::size_t>(a - 1)]);
        const auto pos = position.at({t.monomial.basis.summand, image});
        cells[pos].push_back({t.coeff, PolyMonomial(n, std::move(factors))});
      }
      std::vector<Polynomial> vec;
      for (auto& c : cells) vec.emplace_back(n, std::move(c));
      out.generators.push_back(std::move(vec));
    }
  }
  return out;
}

WidthModulePresentation classical_gb(const WidthModulePresentation& p) {
  const Ring ring(p);
  std::vector<DenseVec> G;
  for (auto& g : dense_generators(ring, p)) {
    const Rational lc = g.front().c;
    for (auto& t : g) t.c /= lc;
    G.push_back(std::move(g));
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    auto s = ring.spair(G[i], G[j]);
    if (!s) continue;
    DenseVec r = ring.reduce(std::move(*s), G);
    if (r.empty()) continue;
    const Rational lc = r.front().c;
    for (auto& t : r) t.c /= lc;
    G.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
  }
  WidthModulePresentation out = p;
  out.generators.clear();
  for (const auto& g : G) out.generators.push_back(from_dense(ring, g, p.basis.size()));
  return out;
}

bool is_classical_groebner(const WidthModulePresentation& p) {
  const Ring ring(p);
  const auto G = dense_generators(ring, p);
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (auto s = ring.spair(G[i], G[j]); s && !ring.reduce(std::move(*s), G).empty()) return false;
  return true;
}

bool lead_module_equal(const WidthModulePresentation& a, const WidthModulePresentation& b) {
  if (a.width != b.width || a.basis != b.basis) return false;
  const Ring ring(a);
  const auto ga = dense_generators(ring, a);
  const auto gb = dense_generators(ring, b);
  auto covered = [](const std::vector<DenseVec>& from, const std::vector<DenseVec>& by) {
    return std::all_of(from.begin(), from.end(), [&](const DenseVec& f) {
      return std::any_of(by.begin(), by.end(),
                         [&](const DenseVec& g) { return Ring::divides(g.front(), f.front()); });
    });
  };
  return covered(ga, gb) && covered(gb, ga);
}

bool reduces_to_zero(const WidthModulePresentation& p, const std::vector<Polynomial>& v) {
  const Ring ring(p);
  return ring.reduce(to_dense(ring, v), dense_generators(ring, p)).empty();
}

}  // namespace oigb::oracle
