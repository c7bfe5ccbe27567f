#pragma once

#include <vector>

#include "genpos/affine.hpp"
#include "genpos/word.hpp"

namespace genpos {

/// Per-map contraction ratios r = (r_1, ..., r_m), each in (0,1). When
/// attached to a system every entry must dominate the map's certified ratio.
struct RatioVector {
  std::vector<double> entries;

  RatioVector() = default;
  explicit RatioVector(std::vector<double> e);

  size_t size() const { return entries.size(); }
  double at(int letter) const { return entries[static_cast<size_t>(letter - 1)]; }

  /// r-bar = max entry.
  double max_entry() const;

  /// Product r_{w_1} ... r_{w_n}, rounded up (1 for the empty word).
  double word_ratio_upper(const Word& w) const;
};

/// Iterated function system of affine contractions together with an invariant
/// axis-aligned hull V: S_i(V) must be contained in V for every map, which is
/// verified by outward-rounded interval evaluation.
struct IFSystem {
  std::vector<AffineMap> maps;
  Box hull;

  static IFSystem create(std::vector<AffineMap> maps, Box hull);

  int dim() const { return hull.dim; }
  int map_count() const { return static_cast<int>(maps.size()); }
  const AffineMap& map(int letter) const { return maps[static_cast<size_t>(letter - 1)]; }

  RatioVector ratios() const;
  void check_letter(int letter) const;
};

/// Composition S_w = S_{w_1} ∘ ... ∘ S_{w_n} (identity for the empty word).
AffineMap compose(const IFSystem& system, const Word& word);

/// Coding-space distance rho_r(a, b) = r_{a ∧ b}; 1 when the meet is empty,
/// 0 when the addresses coincide. Exact for eventually-constant addresses;
/// depth_cap only truncates the meet (never below the true distance).
double coding_distance(const Address& a, const Address& b, const RatioVector& r,
                       int depth_cap);

struct PointEstimate {
  Vec point;
  double error_radius = 0;
};

/// Approximation of the addressed point: S_{a|depth}(center of hull) with a
/// certified error radius ratio(S_{a|depth}) * diam(hull).
PointEstimate address_point(const IFSystem& system, const Address& a, int depth);

}  // namespace genpos
