#pragma once

#include <vector>

#include "genpos/system.hpp"

namespace genpos {

/// One-variable dimension equation sum_i coeff_i * base_i^s = target with
/// every base in (0,1). The induced function must be strictly monotone on the
/// search bracket, which is verified numerically before solving.
struct DimensionEquation {
  struct Term {
    double coeff = 0;
    double base = 0;
  };
  std::vector<Term> terms;
  double target = 1.0;

  static DimensionEquation moran(const RatioVector& r);

  double evaluate(double s) const;
};

struct RootResult {
  double root = 0;
  double residual = 0;
  int iterations = 0;
};

inline constexpr double kMoranResidualTol = 1e-12;
inline constexpr int kBisectionIterationCap = 200;

/// Deterministic bisection on a monotone bracket; the returned residual is
/// |F(root) - target| and never exceeds kMoranResidualTol.
RootResult solve_dimension_equation(const DimensionEquation& eq, double lo, double hi);

/// Unique root s of the Moran equation r_1^s + ... + r_m^s = 1. The default
/// bracket [0, m+1] is widened by doubling (at most 64 times) until the sign
/// changes.
double similarity_dimension(const RatioVector& r);

/// similarity_dimension rounded up by one ulp; certificates compare against
/// this value so that "s_r < threshold" verdicts stay conservative.
double similarity_dimension_upper(const RatioVector& r);

}  // namespace genpos
