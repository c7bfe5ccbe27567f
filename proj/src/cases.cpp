#include "genpos/cases.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace genpos {

namespace {

Box unit_interval() { return Box::from_corners(Vec::of(0.0), Vec::of(1.0)); }

void check_exact_overlap_params(const ExactOverlapParams& p) {
  if (!(p.t > 0.0 && p.t < 1.0 / 9.0))
    throw std::domain_error("exact-overlap t must lie in (0, 1/9)");
  if (!(p.b > 0.0 && p.b < 1.0 / 9.0))
    throw std::domain_error("exact-overlap b must lie in (0, 1/9)");
}

void check_one_point_params(const OnePointParams& p) {
  if (!(p.p > 0.0 && p.p < 1.0 / 36.0) || !(p.q > 0.0 && p.q < 1.0 / 36.0) ||
      !(p.r > 0.0 && p.r < 1.0 / 36.0))
    throw std::domain_error("one-point p, q, r must lie in (0, 1/36)");
}

}  // namespace

IFSystem build_exact_overlap(const ExactOverlapParams& params) {
  check_exact_overlap_params(params);
  std::vector<AffineMap> maps;
  maps.push_back(AffineMap::line(params.t, 0.0));
  maps.push_back(AffineMap::line(params.b, 0.0));
  maps.push_back(AffineMap::line(1.0 / 9.0, 8.0 / 9.0));
  return IFSystem::create(std::move(maps), unit_interval());
}

IFSystem build_one_point(const OnePointParams& params) {
  check_one_point_params(params);
  const double a = OnePointParams::a;
  const double h = OnePointParams::h;
  std::vector<AffineMap> maps;
  maps.push_back(AffineMap::line(params.p, 0.0));            // S_1(x) = p x
  maps.push_back(AffineMap::line(params.r, a));              // S_2(x) = a + r x
  maps.push_back(AffineMap::line(-params.q, h));             // S_3(x) = h - q x
  maps.push_back(AffineMap::line(params.r, h - params.r));   // S_4(x) = h - r + r x
  maps.push_back(AffineMap::line(-params.r, 1.0 - a));       // S_5(x) = 1 - a - r x
  maps.push_back(AffineMap::line(params.r, 1.0 - params.r)); // S_6(x) = 1 - r + r x
  return IFSystem::create(std::move(maps), unit_interval());
}

Interval dmn_interval_exact(int m, int n, double b) {
  if (m < 1 || n < 1) throw std::invalid_argument("exponents must be >= 1");
  if (m == n) throw std::invalid_argument("the exceptional interval needs m != n");
  if (!(b > 0.0 && b < 1.0 / 9.0))
    throw std::domain_error("b must lie in (0, 1/9)");
  double bn = std::pow(b, n);
  double lo = std::pow(8.0 * bn / 9.0, 1.0 / m);
  double hi = std::pow(std::min(9.0 * bn / 8.0, std::pow(9.0, -m)), 1.0 / m);
  return {lo, hi};
}

Interval dmn_interval_onepoint(int m, int n, double p, double r) {
  if (m < 0 || n < 0) throw std::invalid_argument("exponents must be >= 0");
  double pm = std::pow(p, m);
  double rn = std::pow(r, n + 1);
  double lo = rn / (3.0 * pm);
  double hi = std::min(3.0 * rn / pm, 1.0 / 36.0);
  return {lo, hi};
}

double margin_exact_overlap(int n, double b) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return (359.0 / 64.0) * std::pow(b, n);
}

double margin_one_point(int m, double p) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  return (23.0 / 105.0) * std::pow(p, m);
}

CaseVerdict classify_exact_overlap(const ExactOverlapParams& params, int max_mn,
                                   double tol, int depth) {
  if (max_mn < 1) throw std::invalid_argument("max_mn must be >= 1");
  check_exact_overlap_params(params);
  CaseVerdict out;
  out.max_mn = max_mn;
  if (params.t == params.b) {
    // S_1 == S_2: the pieces coincide and no separation is possible.
    PieceCheck degenerate;
    degenerate.m = 1;
    degenerate.n = 1;
    degenerate.verdict.status = SeparationStatus::Undecided;
    degenerate.verdict.reason = UndecidedReason::ToleranceReached;
    out.undecided.push_back(degenerate);
    out.checks.push_back(degenerate);
    out.verified = false;
    out.note = "degenerate parameters: S_1 and S_2 coincide";
    return out;
  }
  IFSystem system = build_exact_overlap(params);
  for (int m = 1; m <= max_mn; ++m)
    for (int n = 1; n <= max_mn; ++n) {
      if (m == n) continue;
      PieceCheck check;
      check.m = m;
      check.n = n;
      Word wj = Word::repeated(1, m).appended(3);
      Word wk = Word::repeated(2, n).appended(3);
      check.verdict = check_pair_disjoint(system, wj, wk, tol, depth);
      if (check.verdict.status != SeparationStatus::Disjoint)
        out.undecided.push_back(check);
      out.checks.push_back(std::move(check));
    }
  out.verified = out.undecided.empty();
  out.note = out.verified
                 ? "exact-overlap verified up to max_mn"
                 : "undecided piece pairs remain";
  return out;
}

CaseVerdict classify_one_point(const OnePointParams& params, int max_mn,
                               double tol, int depth) {
  if (max_mn < 0) throw std::invalid_argument("max_mn must be >= 0");
  check_one_point_params(params);
  CaseVerdict out;
  out.max_mn = max_mn;
  IFSystem system = build_one_point(params);
  const double a = OnePointParams::a;
  for (int m = 0; m <= max_mn; ++m)
    for (int n = 0; n <= max_mn; ++n) {
      // The two pieces live in p^m [a q, q] and r^(n+1) [a, 1] around h; when
      // those windows are certified apart no sub-piece pair can meet.
      Interval pm = ipow(Interval::point(params.p), m);
      Interval rn = ipow(Interval::point(params.r), n + 1);
      Interval win_j{nudge_down(pm.lo * a * params.q), nudge_up(pm.hi * params.q)};
      Interval win_k{nudge_down(rn.lo * a), rn.hi};
      bool apart = win_j.hi < win_k.lo || win_k.hi < win_j.lo;
      if (apart) {
        PieceCheck check;
        check.m = m;
        check.n = n;
        check.fast_path = true;
        check.verdict.status = SeparationStatus::Disjoint;
        check.verdict.gap =
            std::max(nudge_down(win_k.lo - win_j.hi), nudge_down(win_j.lo - win_k.hi));
        out.checks.push_back(std::move(check));
        continue;
      }
      for (int j = 2; j <= 6; ++j)
        for (int i = 1; i <= 5; ++i) {
          PieceCheck check;
          check.m = m;
          check.n = n;
          check.j = j;
          check.i = i;
          Word wj = Word::single(3).concat(Word::repeated(1, m)).appended(j);
          Word wk = Word::single(4).concat(Word::repeated(6, n)).appended(i);
          check.verdict = check_pair_disjoint(system, wj, wk, tol, depth);
          if (check.verdict.status != SeparationStatus::Disjoint)
            out.undecided.push_back(check);
          out.checks.push_back(std::move(check));
        }
    }
  out.verified = out.undecided.empty();
  out.note = out.verified ? "one-point verified up to max_mn"
                          : "undecided piece pairs remain";
  return out;
}

namespace {

// Continued-fraction screen: x counts as rational when some convergent p/q
// with q <= 1e6 satisfies |q x - p| <= 1e-12.
bool looks_rational(double x) {
  double y = x;
  long p0 = 1, q0 = 0, p1 = static_cast<long>(std::floor(x)), q1 = 1;
  for (int k = 0; k < 64; ++k) {
    if (std::abs(static_cast<double>(q1) * x - static_cast<double>(p1)) <= 1e-12)
      return q1 <= 1000000;
    double frac = y - std::floor(y);
    if (frac <= 0) return q1 <= 1000000;
    y = 1.0 / frac;
    double af = std::floor(y);
    if (af > 1e15) return q1 <= 1000000;
    long a = static_cast<long>(af);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    if (q1 > 1000000) return false;
  }
  return false;
}

// All intermediate fractions (semiconvergents) of x with denominator <= qmax,
// in increasing denominator order. These carry every one-sided best rational
// approximation, which is what the identity-distance records live on.
std::vector<std::pair<long, long>> semiconvergents(double x, long qmax) {
  std::vector<std::pair<long, long>> out;
  long pm1 = 1, qm1 = 0;
  long p = static_cast<long>(std::floor(x)), q = 1;
  out.emplace_back(p, q);
  double y = x;
  while (q <= qmax) {
    double frac = y - std::floor(y);
    if (frac <= 1e-18) break;
    y = 1.0 / frac;
    double af = std::floor(y);
    long a = af > 1e15 ? static_cast<long>(1e15) : static_cast<long>(af);
    for (long jmul = 1; jmul <= a; ++jmul) {
      long pn = jmul * p + pm1, qn = jmul * q + qm1;
      if (qn > qmax) break;
      out.emplace_back(pn, qn);
    }
    long p2 = a * p + pm1, q2 = a * q + qm1;
    pm1 = p; qm1 = q; p = p2; q = q2;
  }
  return out;
}

}  // namespace

WitnessSearchResult wsp_witness_search_exact(const ExactOverlapParams& params,
                                             double target_tol, long max_exponent) {
  check_exact_overlap_params(params);
  if (!(target_tol > 0)) throw std::invalid_argument("target_tol must be positive");
  if (max_exponent < 1) throw std::invalid_argument("max_exponent must be >= 1");
  double lt = std::log(params.t), lb = std::log(params.b);
  double x = lb / lt;  // l/n ~ x makes t^l b^-n ~ 1
  if (looks_rational(x))
    throw std::domain_error(
        "log t / log b is rational within detection limits; witnesses need not exist");
  WitnessSearchResult out;
  double best = std::numeric_limits<double>::infinity();
  for (auto [l, n] : semiconvergents(x, max_exponent)) {
    if (l < 1 || n < 1 || l > max_exponent) continue;
    double d = std::abs(std::expm1(static_cast<double>(l) * lt -
                                   static_cast<double>(n) * lb));
    if (d >= best) continue;
    best = d;
    WspWitness w;
    w.m = l;
    w.n = n;
    w.map_scale = std::exp(static_cast<double>(l) * lt - static_cast<double>(n) * lb);
    w.map_offset = 0.0;
    w.identity_distance = d;
    out.witnesses.push_back(w);
    if (d <= target_tol) {
      out.reached_tol = true;
      break;
    }
  }
  return out;
}

WitnessSearchResult wsp_witness_search_onepoint(const OnePointParams& params,
                                                double target_tol, long max_exponent) {
  check_one_point_params(params);
  if (!(target_tol > 0)) throw std::invalid_argument("target_tol must be positive");
  if (max_exponent < 1) throw std::invalid_argument("max_exponent must be >= 1");
  double lp = std::log(params.p), lr = std::log(params.r), lq = std::log(params.q);
  if (looks_rational(lp / lr))
    throw std::domain_error(
        "log p / log r is rational within detection limits; witnesses need not exist");
  const double a = OnePointParams::a;
  WitnessSearchResult out;
  double best = std::numeric_limits<double>::infinity();
  // Inhomogeneous target: m log p - (n+1) log r ~ log q. For each m the best
  // n is the nearest integer, so the records can be scanned directly.
  for (long m = 1; m <= max_exponent; ++m) {
    double nu = (static_cast<double>(m) * lp - lq) / lr;
    for (long cand : {static_cast<long>(std::floor(nu)), static_cast<long>(std::ceil(nu))}) {
      long n = cand - 1;
      if (n < 1 || n > max_exponent) continue;
      double scale = std::exp(static_cast<double>(m) * lp + lq -
                              static_cast<double>(n + 1) * lr);
      double offset = (1.0 - scale) * (1.0 - a) / params.r;
      double d = std::abs(scale - 1.0) + std::abs(offset);
      if (d >= best) continue;
      best = d;
      WspWitness w;
      w.m = m;
      w.n = n;
      w.map_scale = scale;
      w.map_offset = offset;
      w.identity_distance = d;
      out.witnesses.push_back(w);
      if (d <= target_tol) {
        out.reached_tol = true;
        return out;
      }
    }
  }
  return out;
}

}  // namespace genpos
