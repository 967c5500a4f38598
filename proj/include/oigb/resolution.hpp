#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "oigb/free_module.hpp"
#include "oigb/syzygy.hpp"

namespace oigb {

/// F^k -> ... -> F^1 -> F^0 -> F. `images[j]` lists the images of the basis
/// generators of F^j, living in F^{j-1} (in `base` for j = 0, where they
/// generate the resolved submodule).
struct FreeComplex {
  ModulePtr base;
  std::vector<ModulePtr> modules;
  std::vector<std::vector<ModuleElement>> images;

  std::size_t length() const { return modules.size(); }
  /// The module that images[j] live in.
  const ModulePtr& target_of(std::size_t j) const { return j == 0 ? base : modules[j - 1]; }
};

struct ResolutionOptions {
  /// Prune unit entries on identity basis terms (homogeneous input only).
  bool minimize = true;
  std::ostream* log = nullptr;
  std::size_t pair_cap = 2'000'000;
  SchreyerTiebreak tiebreak;
};

/// Free resolution of ⟨B⟩ out to homological degree `degree`: a minimal
/// Gröbner basis of ⟨B⟩ followed by `degree` rounds of oi_syz. When minimizing,
/// the last module is not certified minimal.
FreeComplex oi_res(std::span<const ModuleElement> B, int degree,
                   const ResolutionOptions& options = {});

/// Repeatedly removes a generator pair joined by a nonzero constant on an
/// identity basis term, lowest homological degree first.
void prune(FreeComplex& complex, std::ostream* log = nullptr);

/// Number of basis generators per homological degree.
std::vector<int> ranks(const FreeComplex& complex);

/// Applies the differential out of F^j to an element of F^j.
ModuleElement apply_differential(const FreeComplex& complex, std::size_t j, const ModuleElement& s);

/// Every d_j ∘ d_{j+1} vanishes on generators (including the augmentation).
bool is_complex(const FreeComplex& complex);

/// {algebra, base, steps: [{symbol, widths, twists, images}]}
nlohmann::json describe_json(const FreeComplex& complex);
std::string describe_text(const FreeComplex& complex);
FreeComplex complex_from_json(const nlohmann::json& j);

/// Same generators, twists and image terms at every step.
bool equivalent(const FreeComplex& a, const FreeComplex& b);

/// A polynomial matrix between width-w components; entries[r][c] is the
/// coefficient of rows[r] in the image of cols[c].
struct WidthMatrix {
  std::vector<BasisIndex> rows;
  std::vector<BasisIndex> cols;
  std::vector<std::vector<Polynomial>> entries;
};

struct RestrictedComplex {
  Width width = 0;
  /// maps[j] is the matrix of F^j_w -> F^{j-1}_w (F_w for j = 0).
  std::vector<WidthMatrix> maps;
};

RestrictedComplex restrict_to_width(const FreeComplex& complex, Width w);

/// Matrix of the width-w component of the map sending generator i to images[i].
WidthMatrix width_matrix(const FreeOIModule& source, const FreeOIModule& target,
                         std::span<const ModuleElement> images, Width w);

/// a · b, requiring a.cols == b.rows.
WidthMatrix multiply(const WidthMatrix& a, const WidthMatrix& b);
bool is_zero(const WidthMatrix& m);

nlohmann::json restricted_json(const RestrictedComplex& r, const AlgebraDescriptor& algebra);

}  // namespace oigb
