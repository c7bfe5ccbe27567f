#include "genpos/moran.hpp"

#include <cmath>
#include <stdexcept>

namespace genpos {

DimensionEquation DimensionEquation::moran(const RatioVector& r) {
  DimensionEquation eq;
  eq.target = 1.0;
  for (double e : r.entries) eq.terms.push_back({1.0, e});
  return eq;
}

double DimensionEquation::evaluate(double s) const {
  double v = 0;
  for (const Term& t : terms) v += t.coeff * std::pow(t.base, s);
  return v;
}

namespace {

void validate_equation(const DimensionEquation& eq) {
  if (eq.terms.empty()) throw std::invalid_argument("equation has no terms");
  bool positive = false;
  for (const DimensionEquation::Term& t : eq.terms) {
    if (!(t.base > 0.0 && t.base < 1.0))
      throw std::domain_error("equation bases must lie in (0,1)");
    if (t.coeff > 0.0) positive = true;
  }
  if (!positive) throw std::domain_error("equation needs a positive coefficient");
}

}  // namespace

RootResult solve_dimension_equation(const DimensionEquation& eq, double lo, double hi) {
  validate_equation(eq);
  if (!(lo < hi)) throw std::invalid_argument("bracket must satisfy lo < hi");
  double flo = eq.evaluate(lo) - eq.target;
  double fmid = eq.evaluate(0.5 * (lo + hi)) - eq.target;
  double fhi = eq.evaluate(hi) - eq.target;
  bool decreasing = flo > fmid && fmid > fhi;
  bool increasing = flo < fmid && fmid < fhi;
  if (!decreasing && !increasing)
    throw std::domain_error("equation is not strictly monotone on the bracket");
  if ((flo > 0) == (fhi > 0)) {
    if (flo == 0) return {lo, 0.0, 0};
    if (fhi == 0) return {hi, 0.0, 0};
    throw std::domain_error("bracket does not straddle the target");
  }
  RootResult out;
  for (out.iterations = 0; out.iterations < kBisectionIterationCap; ++out.iterations) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    double fm = eq.evaluate(mid) - eq.target;
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  out.root = 0.5 * (lo + hi);
  out.residual = std::abs(eq.evaluate(out.root) - eq.target);
  if (out.residual > kMoranResidualTol)
    throw std::runtime_error("bisection failed to reach the residual tolerance");
  return out;
}

double similarity_dimension(const RatioVector& r) {
  if (r.size() < 2) throw std::invalid_argument("ratio vector needs m >= 2 entries");
  DimensionEquation eq = DimensionEquation::moran(r);
  // F(0) = m >= 2 > 1 and F is strictly decreasing toward 0.
  double hi = static_cast<double>(r.size()) + 1.0;
  int doublings = 0;
  while (eq.evaluate(hi) > 1.0) {
    hi *= 2.0;
    if (++doublings > 64) throw std::runtime_error("failed to bracket the Moran root");
  }
  return solve_dimension_equation(eq, 0.0, hi).root;
}

double similarity_dimension_upper(const RatioVector& r) {
  return nudge_up(similarity_dimension(r), 1);
}

}  // namespace genpos
