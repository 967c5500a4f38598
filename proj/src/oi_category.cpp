#include "oigb/oi_category.hpp"

#include <algorithm>

#include "oigb/error.hpp"

namespace oigb {

OIMorphism::OIMorphism(Width target, std::vector<int> image)
    : image_(std::move(image)), target_(target) {
  if (target < 0) throw InvalidArgument("OI morphism with negative target width");
  int prev = 0;
  for (int a : image_) {
    if (a <= prev || a > target)
      throw InvalidArgument("OI morphism image must be strictly increasing within [" +
                            std::to_string(target) + "]");
    prev = a;
  }
}

OIMorphism OIMorphism::identity(Width n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) image[static_cast<std::size_t>(j)] = j + 1;
  return OIMorphism(n, std::move(image));
}

OIMorphism compose(const OIMorphism& inner, const OIMorphism& outer) {
  if (inner.target() != outer.source())
    throw WidthMismatch("cannot compose " + to_string(inner) + " with " + to_string(outer));
  std::vector<int> image;
  image.reserve(inner.image().size());
  for (int a : inner.image()) image.push_back(outer(a));
  return OIMorphism(outer.target(), std::move(image));
}

namespace {

// Visits all strictly increasing sequences of length k drawn from `pool`
// (itself increasing), in lexicographic order.
template <typename Visit>
void for_each_subset(const std::vector<int>& pool, std::size_t k, Visit&& visit) {
  if (k > pool.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> current(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) current[i] = pool[idx[i]];
    visit(current);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<OIMorphism> enumerate_hom(Width m, Width n) {
  std::vector<OIMorphism> out;
  if (m < 0 || n < 0 || m > n) return out;
  out.reserve(binomial(n, m));
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) pool[static_cast<std::size_t>(j)] = j + 1;
  for_each_subset(pool, static_cast<std::size_t>(m),
                  [&](const std::vector<int>& s) { out.emplace_back(n, s); });
  return out;
}

std::vector<CoveringPair> enumerate_covering_pairs(Width m, Width n) {
  std::vector<CoveringPair> out;
  if (m < 0 || n < 0) return out;
  for (Width t = std::max(m, n); t <= m + n; ++t) {
    for (const OIMorphism& first : enumerate_hom(m, t)) {
      // The second map must contain the complement of im(first) and pick the
      // rest of its values from im(first).
      std::vector<int> complement;
      for (int j = 1, k = 0; j <= t; ++j) {
        if (k < m && first.image()[static_cast<std::size_t>(k)] == j)
          ++k;
        else
          complement.push_back(j);
      }
      const auto extra = static_cast<std::size_t>(n) - complement.size();
      std::vector<OIMorphism> seconds;
      for_each_subset(first.image(), extra, [&](const std::vector<int>& s) {
        std::vector<int> image(complement);
        image.insert(image.end(), s.begin(), s.end());
        std::sort(image.begin(), image.end());
        seconds.emplace_back(t, std::move(image));
      });
      std::sort(seconds.begin(), seconds.end());
      for (auto& second : seconds) out.push_back({t, first, std::move(second)});
    }
  }
  return out;
}

std::string image_string(const OIMorphism& eps) {
  std::string s = "{";
  for (std::size_t i = 0; i < eps.image().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(eps.image()[i]);
  }
  return s + "}";
}

std::string to_string(const OIMorphism& eps) {
  return "[" + std::to_string(eps.source()) + "]->[" + std::to_string(eps.target()) +
         "]:" + image_string(eps);
}

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace oigb
