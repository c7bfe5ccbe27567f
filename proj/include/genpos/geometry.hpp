#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

namespace genpos {

inline constexpr int kMaxDim = 3;

// Default ulp padding applied after every interval operation. All "certified"
// quantities in the library are rounded outward by this amount so that lower
// bounds stay lower bounds and upper bounds stay upper bounds under plain
// round-to-nearest arithmetic.
inline constexpr int kUlpsPerOp = 4;

double nudge_up(double x, int ulps = kUlpsPerOp);
double nudge_down(double x, int ulps = kUlpsPerOp);

/// Small fixed-capacity vector in R^n, n <= 3.
struct Vec {
  int dim = 1;
  std::array<double, kMaxDim> v{};

  static Vec zero(int dim);
  static Vec of(double x);
  static Vec of(double x, double y);
  static Vec of(double x, double y, double z);

  double& operator[](int i) { return v[static_cast<size_t>(i)]; }
  double operator[](int i) const { return v[static_cast<size_t>(i)]; }

  double norm() const;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(double c, const Vec& a);
bool operator==(const Vec& a, const Vec& b);

/// Row-major n-by-n matrix, n <= 3.
struct Mat {
  int dim = 1;
  std::array<double, kMaxDim * kMaxDim> a{};

  static Mat identity(int dim);
  static Mat scalar(int dim, double c);

  double& at(int r, int c) { return a[static_cast<size_t>(r * dim + c)]; }
  double at(int r, int c) const { return a[static_cast<size_t>(r * dim + c)]; }
};

Mat mat_mul(const Mat& l, const Mat& r);
Vec mat_vec(const Mat& m, const Vec& x);

/// Certified upper bound for the spectral norm of m. Exact (one-ulp padded)
/// for similarity matrices, Frobenius-based otherwise.
double operator_norm_upper(const Mat& m);

/// Certified lower bound for the spectral norm (max row/column norm).
double operator_norm_lower(const Mat& m);

/// Closed interval with outward-rounded arithmetic.
struct Interval {
  double lo = 0;
  double hi = 0;

  static Interval point(double x) { return {x, x}; }
  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool is_empty() const { return lo > hi; }
};

Interval iadd(const Interval& a, const Interval& b);
Interval imul(double c, const Interval& a);
Interval ipow(const Interval& a, int k);  // requires a.lo >= 0

/// Axis-aligned box in R^n; the basic set representation for hulls and
/// branch-and-bound nodes.
struct Box {
  int dim = 1;
  std::array<Interval, kMaxDim> c{};

  static Box from_corners(const Vec& lo, const Vec& hi);

  Vec lower() const;
  Vec upper() const;
  Vec center() const;

  /// Upper bound for the Euclidean diameter.
  double diameter_upper() const;

  bool contains(const Box& inner) const;
  bool contains(const Vec& p) const;

  /// Box inflated by pad in every coordinate direction.
  Box inflated(double pad) const;
};

/// Certified lower bound for the Euclidean distance between two boxes
/// (zero when they touch or overlap).
double box_gap_lower(const Box& a, const Box& b);

/// Upper bound for the diameter of the union's bounding box.
double box_union_diameter_upper(const Box& a, const Box& b);

}  // namespace genpos
