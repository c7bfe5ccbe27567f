#pragma once

#include <optional>

#include "genpos/geometry.hpp"

namespace genpos {

/// Affine contraction x -> Ax + b with a certified Lipschitz ratio. The ratio
/// is always an upper bound for the operator norm of A, never an
/// underestimate, so every certificate built on top of it stays sound.
///
/// Compositions accumulate representation error in the stored coefficients;
/// matrix_err and offset_err are certified entry-wise bounds on that drift,
/// and box images are inflated by it, so covers computed from composed maps
/// contain the true images.
struct AffineMap {
  Mat matrix;
  Vec offset;
  double ratio = 0;
  double matrix_err = 0;  // entry-wise |stored - true| bound
  double offset_err = 0;

  /// Builds a map and certifies its ratio. A caller-supplied override must
  /// not undercut the computed lower bound for the operator norm. Maps built
  /// through here must be contractions (ratio < 1).
  static AffineMap contraction(const Mat& m, const Vec& b,
                               std::optional<double> ratio_override = {});

  static AffineMap identity(int dim);
  /// 1-D map x -> slope*x + shift.
  static AffineMap line(double slope, double shift);

  int dim() const { return matrix.dim; }

  Vec apply(const Vec& x) const;
  /// Outward-rounded image of a box.
  Box apply(const Box& b) const;

  /// Composition this ∘ inner (apply inner first). The ratio is the product
  /// of the two ratios, tightened by the operator-norm bound of the product
  /// matrix when that is smaller.
  AffineMap after(const AffineMap& inner) const;
};

}  // namespace genpos
