#pragma once

#include <string>
#include <vector>

#include "genpos/separation.hpp"
#include "genpos/system.hpp"

namespace genpos {

/// Parameters of the three-map overlap system S_1(x)=t x, S_2(x)=b x,
/// S_3(x)=(x+8)/9 on [0,1].
struct ExactOverlapParams {
  double t = 0;
  double b = 0;  // both in (0, 1/9)
};

/// Parameters of the six-map one-point-intersection system on [0,1];
/// h = 1/2 and a = 1/3 are fixed by the construction.
struct OnePointParams {
  double p = 0;
  double q = 0;
  double r = 0;  // all in (0, 1/36)

  static constexpr double h = 0.5;
  static constexpr double a = 1.0 / 3.0;
};

IFSystem build_exact_overlap(const ExactOverlapParams& params);
IFSystem build_one_point(const OnePointParams& params);

/// Parameter interval for t outside of which the first-level hull bands of
/// S_1^m(K_3) and S_2^n(K_3) cannot meet:
///   [(8 b^n / 9)^(1/m), (min(9 b^n / 8, 9^-m))^(1/m)].
/// Empty (lo > hi) when the bands can never meet. Requires m != n.
Interval dmn_interval_exact(int m, int n, double b);

/// Parameter interval for q inside which the pieces S_3 S_1^m(K \ K_1) and
/// S_4 S_6^n(K \ K_6) may meet: (r^(n+1)/(3 p^m), min(3 r^(n+1)/p^m, 1/36)).
Interval dmn_interval_onepoint(int m, int n, double p, double r);

/// Certified lower bound (359/64) b^n for the separation margin of the pair
/// S_1^m, S_2^n over the exceptional interval.
double margin_exact_overlap(int n, double b);

/// Computed value (23/105) p^m of the one-point margin chain. The source
/// derivation displays the same three terms but then asserts the cruder
/// bound p^m/4, which is larger than their value; this function reports the
/// computed constant.
double margin_one_point(int m, double p);

struct PieceCheck {
  int m = 0, n = 0;
  int i = 0, j = 0;  // one-point sub-piece letters; 0 when not applicable
  bool fast_path = false;
  SeparationVerdict verdict;
};

struct CaseVerdict {
  bool verified = false;
  int max_mn = 0;
  std::vector<PieceCheck> checks;
  std::vector<PieceCheck> undecided;
  std::string note;
};

/// Checks S_1^m(K_3) vs S_2^n(K_3) for all m != n <= max_mn. An all-Disjoint
/// result certifies the exact-overlap decomposition within the checked range.
/// t == b is degenerate (S_1 == S_2) and is reported as undecided.
CaseVerdict classify_exact_overlap(const ExactOverlapParams& params, int max_mn,
                                   double tol, int depth);

/// Checks S_3 S_1^m(K_j) vs S_4 S_6^n(K_i) for m, n <= max_mn, j != 1,
/// i != 6, skipping (m, n) whenever p^m [q/3, q] and r^(n+1) [1/3, 1] are
/// certified apart. An all-Disjoint result verifies the one-point
/// intersection within the checked range.
CaseVerdict classify_one_point(const OnePointParams& params, int max_mn,
                               double tol, int depth);

enum class WitnessKind { ExactOverlap, OnePoint };

/// Near-identity composition witness. For exact overlaps the map is
/// S_2^-n S_1^m (pure scaling t^m b^-n); for the one-point system it is
/// G_n^-1 H_m with
///   scale  = p^m q / r^(n+1),
///   offset = (r^(n+1) - p^m q)(1 - a) / r^(n+2).
struct WspWitness {
  long m = 0;
  long n = 0;
  double map_scale = 1;
  double map_offset = 0;
  double identity_distance = 0;  // |scale - 1| + |offset|
};

struct WitnessSearchResult {
  std::vector<WspWitness> witnesses;  // strictly decreasing identity_distance
  bool reached_tol = false;
};

/// Searches exponent pairs whose composition approaches the identity, via
/// continued-fraction approximation of the relevant log-ratio. Requires the
/// log-ratio to be irrational as far as floating point can tell (convergent
/// denominators up to 1e6 are screened); a rational ratio is an error since
/// witnesses then need not exist.
WitnessSearchResult wsp_witness_search_exact(const ExactOverlapParams& params,
                                             double target_tol, long max_exponent);
WitnessSearchResult wsp_witness_search_onepoint(const OnePointParams& params,
                                                double target_tol, long max_exponent);

}  // namespace genpos
