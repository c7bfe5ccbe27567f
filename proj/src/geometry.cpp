#include "genpos/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace genpos {

double nudge_up(double x, int ulps) {
  for (int i = 0; i < ulps; ++i)
    x = std::nextafter(x, std::numeric_limits<double>::infinity());
  return x;
}

double nudge_down(double x, int ulps) {
  for (int i = 0; i < ulps; ++i)
    x = std::nextafter(x, -std::numeric_limits<double>::infinity());
  return x;
}

Vec Vec::zero(int dim) {
  Vec r;
  r.dim = dim;
  return r;
}

Vec Vec::of(double x) { return Vec{1, {x, 0, 0}}; }
Vec Vec::of(double x, double y) { return Vec{2, {x, y, 0}}; }
Vec Vec::of(double x, double y, double z) { return Vec{3, {x, y, z}}; }

double Vec::norm() const {
  double s = 0;
  for (int i = 0; i < dim; ++i) s += v[static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
  return std::sqrt(s);
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  for (int i = 0; i < a.dim; ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  for (int i = 0; i < a.dim; ++i) r[i] -= b[i];
  return r;
}

Vec operator*(double c, const Vec& a) {
  Vec r = a;
  for (int i = 0; i < a.dim; ++i) r[i] *= c;
  return r;
}

bool operator==(const Vec& a, const Vec& b) {
  if (a.dim != b.dim) return false;
  for (int i = 0; i < a.dim; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Mat Mat::identity(int dim) {
  Mat m;
  m.dim = dim;
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

Mat Mat::scalar(int dim, double c) {
  Mat m;
  m.dim = dim;
  for (int i = 0; i < dim; ++i) m.at(i, i) = c;
  return m;
}

Mat mat_mul(const Mat& l, const Mat& r) {
  Mat out;
  out.dim = l.dim;
  for (int i = 0; i < l.dim; ++i)
    for (int j = 0; j < l.dim; ++j) {
      double s = 0;
      for (int k = 0; k < l.dim; ++k) s += l.at(i, k) * r.at(k, j);
      out.at(i, j) = s;
    }
  return out;
}

Vec mat_vec(const Mat& m, const Vec& x) {
  Vec out = Vec::zero(m.dim);
  for (int i = 0; i < m.dim; ++i) {
    double s = 0;
    for (int j = 0; j < m.dim; ++j) s += m.at(i, j) * x[j];
    out[i] = s;
  }
  return out;
}

double operator_norm_upper(const Mat& m) {
  if (m.dim == 1) return std::abs(m.at(0, 0));
  // Similarity detection: A^T A == c^2 I exactly in floating point.
  bool similarity = true;
  double diag0 = 0;
  for (int i = 0; i < m.dim && similarity; ++i)
    for (int j = i; j < m.dim && similarity; ++j) {
      double s = 0;
      for (int k = 0; k < m.dim; ++k) s += m.at(k, i) * m.at(k, j);
      if (i == j) {
        if (i == 0)
          diag0 = s;
        else if (s != diag0)
          similarity = false;
      } else if (s != 0.0) {
        similarity = false;
      }
    }
  if (similarity) return nudge_up(std::sqrt(diag0), 2);
  double frob = 0;
  for (int i = 0; i < m.dim * m.dim; ++i)
    frob += m.a[static_cast<size_t>(i)] * m.a[static_cast<size_t>(i)];
  return nudge_up(std::sqrt(frob), 8);
}

double operator_norm_lower(const Mat& m) {
  double best = 0;
  for (int j = 0; j < m.dim; ++j) {
    double col = 0, row = 0;
    for (int i = 0; i < m.dim; ++i) {
      col += m.at(i, j) * m.at(i, j);
      row += m.at(j, i) * m.at(j, i);
    }
    best = std::max({best, col, row});
  }
  return nudge_down(std::sqrt(best), 8);
}

Interval iadd(const Interval& a, const Interval& b) {
  return {nudge_down(a.lo + b.lo), nudge_up(a.hi + b.hi)};
}

Interval imul(double c, const Interval& a) {
  double x = c * a.lo, y = c * a.hi;
  return {nudge_down(std::min(x, y)), nudge_up(std::max(x, y))};
}

Interval ipow(const Interval& a, int k) {
  if (a.lo < 0) throw std::domain_error("ipow requires a nonnegative interval");
  Interval r{1.0, 1.0};
  for (int i = 0; i < k; ++i)
    r = {nudge_down(r.lo * a.lo), nudge_up(r.hi * a.hi)};
  return r;
}

Box Box::from_corners(const Vec& lo, const Vec& hi) {
  Box b;
  b.dim = lo.dim;
  for (int i = 0; i < lo.dim; ++i) {
    if (lo[i] > hi[i]) throw std::invalid_argument("box corner order");
    b.c[static_cast<size_t>(i)] = {lo[i], hi[i]};
  }
  return b;
}

Vec Box::lower() const {
  Vec r = Vec::zero(dim);
  for (int i = 0; i < dim; ++i) r[i] = c[static_cast<size_t>(i)].lo;
  return r;
}

Vec Box::upper() const {
  Vec r = Vec::zero(dim);
  for (int i = 0; i < dim; ++i) r[i] = c[static_cast<size_t>(i)].hi;
  return r;
}

Vec Box::center() const {
  Vec r = Vec::zero(dim);
  for (int i = 0; i < dim; ++i) {
    const Interval& iv = c[static_cast<size_t>(i)];
    r[i] = 0.5 * (iv.lo + iv.hi);
  }
  return r;
}

double Box::diameter_upper() const {
  double s = 0;
  for (int i = 0; i < dim; ++i) {
    double w = nudge_up(c[static_cast<size_t>(i)].width());
    s += w * w;
  }
  return nudge_up(std::sqrt(s), 8);
}

bool Box::contains(const Box& inner) const {
  for (int i = 0; i < dim; ++i) {
    const Interval& out = c[static_cast<size_t>(i)];
    const Interval& in = inner.c[static_cast<size_t>(i)];
    if (in.lo < out.lo || in.hi > out.hi) return false;
  }
  return true;
}

bool Box::contains(const Vec& p) const {
  for (int i = 0; i < dim; ++i)
    if (!c[static_cast<size_t>(i)].contains(p[i])) return false;
  return true;
}

Box Box::inflated(double pad) const {
  Box b = *this;
  for (int i = 0; i < dim; ++i) {
    b.c[static_cast<size_t>(i)].lo = nudge_down(b.c[static_cast<size_t>(i)].lo - pad);
    b.c[static_cast<size_t>(i)].hi = nudge_up(b.c[static_cast<size_t>(i)].hi + pad);
  }
  return b;
}

double box_gap_lower(const Box& a, const Box& b) {
  double s = 0;
  for (int i = 0; i < a.dim; ++i) {
    const Interval& x = a.c[static_cast<size_t>(i)];
    const Interval& y = b.c[static_cast<size_t>(i)];
    double g = std::max({0.0, nudge_down(y.lo - x.hi), nudge_down(x.lo - y.hi)});
    s += g * g;
  }
  return std::max(0.0, nudge_down(std::sqrt(s), 8));
}

double box_union_diameter_upper(const Box& a, const Box& b) {
  double s = 0;
  for (int i = 0; i < a.dim; ++i) {
    const Interval& x = a.c[static_cast<size_t>(i)];
    const Interval& y = b.c[static_cast<size_t>(i)];
    double w = nudge_up(std::max(x.hi, y.hi) - std::min(x.lo, y.lo));
    s += w * w;
  }
  return nudge_up(std::sqrt(s), 8);
}

}  // namespace genpos
