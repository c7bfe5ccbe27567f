#include "genpos/affine.hpp"

#include <algorithm>
#include <stdexcept>

namespace genpos {

AffineMap AffineMap::contraction(const Mat& m, const Vec& b,
                                 std::optional<double> ratio_override) {
  if (m.dim < 1 || m.dim > kMaxDim || m.dim != b.dim)
    throw std::invalid_argument("map dimension must be 1, 2 or 3");
  AffineMap map;
  map.matrix = m;
  map.offset = b;
  map.ratio = operator_norm_upper(m);
  if (ratio_override) {
    if (*ratio_override < operator_norm_lower(m))
      throw std::invalid_argument("ratio override undercuts the operator-norm bound");
    map.ratio = *ratio_override;
  }
  if (!(map.ratio < 1.0))
    throw std::domain_error("map is not a contraction (ratio >= 1)");
  return map;
}

AffineMap AffineMap::identity(int dim) {
  AffineMap m;
  m.matrix = Mat::identity(dim);
  m.offset = Vec::zero(dim);
  m.ratio = 1.0;
  return m;
}

AffineMap AffineMap::line(double slope, double shift) {
  return contraction(Mat::scalar(1, slope), Vec::of(shift));
}

Vec AffineMap::apply(const Vec& x) const {
  return mat_vec(matrix, x) + offset;
}

namespace {

double max_abs_entry(const Mat& m) {
  double v = 0;
  for (int i = 0; i < m.dim * m.dim; ++i)
    v = std::max(v, std::abs(m.a[static_cast<size_t>(i)]));
  return v;
}

double max_abs_entry(const Vec& v) {
  double out = 0;
  for (int i = 0; i < v.dim; ++i) out = std::max(out, std::abs(v[i]));
  return out;
}

}  // namespace

Box AffineMap::apply(const Box& b) const {
  double sup = 0;
  for (int i = 0; i < dim(); ++i) {
    const Interval& iv = b.c[static_cast<size_t>(i)];
    sup = std::max({sup, std::abs(iv.lo), std::abs(iv.hi)});
  }
  double pad = nudge_up(matrix_err * dim() * sup + offset_err, 2);
  Box out;
  out.dim = dim();
  for (int i = 0; i < dim(); ++i) {
    Interval acc = Interval::point(offset[i]);
    for (int j = 0; j < dim(); ++j)
      acc = iadd(acc, imul(matrix.at(i, j), b.c[static_cast<size_t>(j)]));
    if (pad > 0) acc = {nudge_down(acc.lo - pad), nudge_up(acc.hi + pad)};
    out.c[static_cast<size_t>(i)] = acc;
  }
  return out;
}

AffineMap AffineMap::after(const AffineMap& inner) const {
  const double eps = std::numeric_limits<double>::epsilon();
  const double n = dim();
  AffineMap out;
  out.matrix = mat_mul(matrix, inner.matrix);
  out.offset = mat_vec(matrix, inner.offset) + offset;

  double a_max = max_abs_entry(matrix) + matrix_err;
  double b_max = max_abs_entry(inner.matrix) + inner.matrix_err;
  double b_off = max_abs_entry(inner.offset) + inner.offset_err;
  // Propagated drift of both factors plus fresh rounding of the dim-term sums.
  out.matrix_err = nudge_up(
      n * (a_max * inner.matrix_err + matrix_err * b_max) + (n + 2) * eps * n * a_max * b_max,
      4);
  out.offset_err = nudge_up(n * (a_max * inner.offset_err + matrix_err * b_off) +
                                offset_err +
                                (n + 2) * eps * (n * a_max * b_off + max_abs_entry(offset)),
                            4);

  double product = nudge_up(ratio * inner.ratio, 2);
  double norm_bound =
      nudge_up(operator_norm_upper(out.matrix) + n * out.matrix_err, 2);
  out.ratio = std::min(product, norm_bound);
  return out;
}

}  // namespace genpos
