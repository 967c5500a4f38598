#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace oigb {

using Width = int;

/// A strictly increasing map [m] -> [n], stored by its image list (1-based).
class OIMorphism {
 public:
  /// The empty map [0] -> [0].
  OIMorphism() = default;
  /// Validates that `image` is strictly increasing with entries in [target].
  OIMorphism(Width target, std::vector<int> image);

  static OIMorphism identity(Width n);

  Width source() const { return static_cast<Width>(image_.size()); }
  Width target() const { return target_; }
  const std::vector<int>& image() const { return image_; }

  /// Value at j, 1-based.
  int operator()(int j) const { return image_[static_cast<std::size_t>(j - 1)]; }

  bool is_identity() const { return source() == target_; }

  /// Image lists compare lexicographically; equal images then compare by target.
  friend auto operator<=>(const OIMorphism&, const OIMorphism&) = default;
  friend bool operator==(const OIMorphism&, const OIMorphism&) = default;

 private:
  std::vector<int> image_;
  Width target_ = 0;
};

/// outer ∘ inner. Throws WidthMismatch unless inner.target() == outer.source().
OIMorphism compose(const OIMorphism& inner, const OIMorphism& outer);

/// All of hom(m, n) in lexicographic order of image lists.
std::vector<OIMorphism> enumerate_hom(Width m, Width n);

/// ε1 : [m] -> [target] and ε2 : [n] -> [target] whose images cover [target].
struct CoveringPair {
  Width target = 0;
  OIMorphism first;
  OIMorphism second;

  friend bool operator==(const CoveringPair&, const CoveringPair&) = default;
};

/// Every covering pair with max(m, n) <= target <= m + n, ordered by target and
/// then lexicographically on (first, second).
std::vector<CoveringPair> enumerate_covering_pairs(Width m, Width n);

/// `[m]->[n]:{a1,...,am}`
std::string to_string(const OIMorphism& eps);

/// `{a1,...,am}`
std::string image_string(const OIMorphism& eps);

std::size_t binomial(int n, int k);

}  // namespace oigb
