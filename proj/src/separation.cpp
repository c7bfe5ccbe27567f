#include "genpos/separation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <string>
#include <thread>

namespace genpos {

namespace {

struct PairNode {
  Word u, v;
  AffineMap mu, mv;
  Box bu, bv;
  double diam_u = 0, diam_v = 0;
  int depth = 0;

  double priority() const { return diam_u + diam_v; }
};

struct NodeOrder {
  // Max-heap by combined diameter; lexicographically smaller word pairs win ties.
  bool operator()(const PairNode& a, const PairNode& b) const {
    if (a.priority() != b.priority()) return a.priority() < b.priority();
    if (!(a.u == b.u)) return lex_less(b.u, a.u);
    return lex_less(b.v, a.v);
  }
};

PairNode make_node(const IFSystem& s, Word u, Word v, AffineMap mu, AffineMap mv) {
  PairNode n;
  n.u = std::move(u);
  n.v = std::move(v);
  n.mu = std::move(mu);
  n.mv = std::move(mv);
  n.bu = n.mu.apply(s.hull);
  n.bv = n.mv.apply(s.hull);
  n.diam_u = n.bu.diameter_upper();
  n.diam_v = n.bv.diameter_upper();
  n.depth = static_cast<int>(std::max(n.u.size(), n.v.size()));
  return n;
}

}  // namespace

SeparationVerdict check_pair_disjoint(const IFSystem& system, const Word& j,
                                      const Word& k, double tol, int max_depth) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  if (max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");
  if (!word_meet(j, k).incomparable)
    throw std::invalid_argument("words must be incomparable");
  for (int letter : j.letters) system.check_letter(letter);
  for (int letter : k.letters) system.check_letter(letter);

  // Canonical orientation so that swapping the arguments cannot change the verdict.
  const Word& wj = lex_less(k, j) ? k : j;
  const Word& wk = lex_less(k, j) ? j : k;

  std::priority_queue<PairNode, std::vector<PairNode>, NodeOrder> queue;
  queue.push(make_node(system, Word{}, Word{}, compose(system, wj), compose(system, wk)));

  double min_gap = std::numeric_limits<double>::infinity();
  double smallest_unresolved = std::numeric_limits<double>::infinity();
  bool any_unresolved = false;
  bool hit_depth_cap = false;
  int depth_used = 0;

  while (!queue.empty()) {
    PairNode n = queue.top();
    queue.pop();
    depth_used = std::max(depth_used, n.depth);

    double gap = box_gap_lower(n.bu, n.bv);
    if (gap > 0) {
      min_gap = std::min(min_gap, gap);
      continue;
    }
    bool small = n.diam_u <= tol && n.diam_v <= tol;
    bool capped = n.depth >= max_depth;
    if (small || capped) {
      any_unresolved = true;
      hit_depth_cap = hit_depth_cap || (capped && !small);
      smallest_unresolved = std::min(smallest_unresolved, std::max(n.diam_u, n.diam_v));
      continue;
    }
    if (n.diam_u >= n.diam_v) {
      for (int a = 1; a <= system.map_count(); ++a)
        queue.push(make_node(system, n.u.appended(a), n.v,
                             n.mu.after(system.map(a)), n.mv));
    } else {
      for (int a = 1; a <= system.map_count(); ++a)
        queue.push(make_node(system, n.u, n.v.appended(a), n.mu,
                             n.mv.after(system.map(a))));
    }
  }

  SeparationVerdict out;
  out.depth_used = depth_used;
  if (any_unresolved) {
    out.status = SeparationStatus::Undecided;
    out.overlap_diameter = smallest_unresolved;
    out.reason = hit_depth_cap ? UndecidedReason::DepthCapReached
                               : UndecidedReason::ToleranceReached;
  } else {
    out.status = SeparationStatus::Disjoint;
    out.gap = min_gap;
  }
  return out;
}

SscReport check_ssc(const IFSystem& system, double tol, int max_depth) {
  SscReport report;
  report.ssc_holds = true;
  report.min_gap = std::numeric_limits<double>::infinity();
  for (int a = 1; a <= system.map_count(); ++a)
    for (int b = a + 1; b <= system.map_count(); ++b) {
      PairVerdict pv;
      pv.first = a;
      pv.second = b;
      pv.verdict = check_pair_disjoint(system, Word::single(a), Word::single(b),
                                       tol, max_depth);
      if (pv.verdict.status == SeparationStatus::Disjoint)
        report.min_gap = std::min(report.min_gap, pv.verdict.gap);
      else
        report.ssc_holds = false;
      report.pairs.push_back(std::move(pv));
    }
  if (!std::isfinite(report.min_gap)) report.min_gap = 0;
  return report;
}

namespace {

int thread_budget() {
  if (const char* env = std::getenv("GENPOS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
    throw std::invalid_argument("GENPOS_THREADS must be a positive integer");
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

double cell_radius_upper(const Box& cell) {
  return nudge_up(0.5 * cell.diameter_upper(), 2);
}

Box grid_cell(const Box& domain, int per_axis, long index) {
  Box cell;
  cell.dim = domain.dim;
  long rest = index;
  for (int ax = 0; ax < domain.dim; ++ax) {
    long i = rest % per_axis;
    rest /= per_axis;
    const Interval& d = domain.c[static_cast<size_t>(ax)];
    double w = (d.hi - d.lo) / per_axis;
    cell.c[static_cast<size_t>(ax)] = {d.lo + static_cast<double>(i) * w,
                                       d.lo + static_cast<double>(i + 1) * w};
  }
  return cell;
}

// Exact-overlap structure: classify one parameter cell against every piece
// pair S_1^m(K_3) vs S_2^n(K_3), m != n <= max_mn, using first-level hull
// bands t^m [8/9, 1] and b^n [8/9, 1] at the cell center. The per-pair motion
// bound uses the word's own constants: |d/dt (t^m (x+8)/9)| <= m t^(m-1) on
// the unit hull, plus the addressed-point displacement of both pieces.
SweepCell classify_exact_overlap_cell(const FamilyDescriptor& fam, const Box& cell,
                                      int max_mn) {
  SweepCell out;
  out.cell = cell;
  out.depth_used = 1;
  double tc = cell.center()[0];
  double t_hi = cell.c[0].hi;
  double radius = cell_radius_upper(cell);
  double invgap_factor = fam.motion_constant / (1.0 - fam.rbar());

  double min_surplus = std::numeric_limits<double>::infinity();
  double worst_scale = 0;
  bool disjoint = true;
  for (int m = 1; m <= max_mn; ++m) {
    for (int n = 1; n <= max_mn; ++n) {
      if (m == n) continue;
      Interval tm = ipow(Interval::point(tc), m);
      Interval bn = ipow(Interval::point(fam.b), n);
      Interval band_j{nudge_down(tm.lo * (8.0 / 9.0)), tm.hi};
      Interval band_k{nudge_down(bn.lo * (8.0 / 9.0)), bn.hi};
      double gap = std::max({0.0, nudge_down(band_k.lo - band_j.hi),
                             nudge_down(band_j.lo - band_k.hi)});
      double cj = nudge_up(m * std::pow(t_hi, m - 1), 4);
      double rj = nudge_up(std::pow(t_hi, m) / 9.0, 4);
      double rk = nudge_up(bn.hi / 9.0, 2);
      double motion = nudge_up((cj + (rj + rk) * invgap_factor) * radius, 4);
      double surplus = gap - motion;
      if (surplus <= 0) {
        disjoint = false;
        worst_scale = std::max(worst_scale,
                               std::max(band_j.width(), band_k.width()));
      }
      min_surplus = std::min(min_surplus, surplus);
    }
  }
  out.status = disjoint ? SeparationStatus::Disjoint : SeparationStatus::Undecided;
  if (!std::isfinite(min_surplus)) min_surplus = 0;  // vacuous pair range
  out.gap_or_overlap = disjoint ? min_surplus : worst_scale;
  return out;
}

SweepCell classify_generic_cell(const FamilyDescriptor& fam, const Box& cell,
                                const Word& j, const Word& k, double tol,
                                int max_depth) {
  SweepCell out;
  out.cell = cell;
  IFSystem s = fam.instantiate(cell.center());
  SeparationVerdict v = check_pair_disjoint(s, j, k, tol, max_depth);
  out.depth_used = v.depth_used;
  double radius = cell_radius_upper(cell);
  double cj = fam.word_motion_upper(j, cell);
  double ck = fam.word_motion_upper(k, cell);
  double rj = fam.word_ratio_upper_on(j, cell);
  double rk = fam.word_ratio_upper_on(k, cell);
  double motion = nudge_up(
      (cj + ck + (rj + rk) * fam.motion_constant / (1.0 - fam.rbar())) * radius, 4);
  if (v.status == SeparationStatus::Disjoint && v.gap > motion) {
    out.status = SeparationStatus::Disjoint;
    out.gap_or_overlap = nudge_down(v.gap - motion, 2);
  } else {
    out.status = SeparationStatus::Undecided;
    out.gap_or_overlap = v.status == SeparationStatus::Disjoint
                             ? motion - v.gap
                             : v.overlap_diameter;
  }
  return out;
}

}  // namespace

SweepReport exceptional_set_sweep(const FamilyDescriptor& fam, const Word& j,
                                  const Word& k, int cells, double tol,
                                  int max_depth, int max_mn) {
  if (cells < 1) throw std::invalid_argument("cells must be >= 1");
  if (max_mn < 1) throw std::invalid_argument("max_mn must be >= 1");
  bool structured = fam.kind == FamilyKind::ExactOverlap;
  if (structured && !(j == Word::single(1) && k == Word::single(2)))
    throw std::invalid_argument(
        "exact-overlap sweeps classify the piece pairs S_1^m(K_3) vs S_2^n(K_3); "
        "pass j=[1], k=[2]");

  long total = 1;
  for (int ax = 0; ax < fam.param_dim(); ++ax) total *= cells;

  SweepReport report;
  report.domain = fam.domain;
  report.cells_per_axis = cells;
  report.cells.resize(static_cast<size_t>(total));

  int workers = std::min<long>(thread_budget(), total);
  auto run_range = [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      Box cell = grid_cell(fam.domain, cells, i);
      report.cells[static_cast<size_t>(i)] =
          structured ? classify_exact_overlap_cell(fam, cell, max_mn)
                     : classify_generic_cell(fam, cell, j, k, tol, max_depth);
    }
  };
  if (workers <= 1) {
    run_range(0, total);
  } else {
    std::vector<std::thread> pool;
    long chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      long begin = w * chunk;
      long end = std::min(total, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_range, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }

  long disjoint_count = 0;
  double cell_measure = 1.0;
  for (int ax = 0; ax < fam.param_dim(); ++ax)
    cell_measure *= (fam.domain.c[static_cast<size_t>(ax)].width()) / cells;
  for (const SweepCell& c : report.cells)
    if (c.status == SeparationStatus::Disjoint) ++disjoint_count;
  report.disjoint_fraction = static_cast<double>(disjoint_count) / static_cast<double>(total);
  report.undecided_measure =
      static_cast<double>(total - disjoint_count) * cell_measure;

  if (fam.param_dim() == 1) {
    // Merge runs of adjacent non-Disjoint cells.
    long i = 0;
    while (i < total) {
      if (report.cells[static_cast<size_t>(i)].status == SeparationStatus::Disjoint) {
        ++i;
        continue;
      }
      long start = i;
      while (i < total &&
             report.cells[static_cast<size_t>(i)].status != SeparationStatus::Disjoint)
        ++i;
      Box cover;
      cover.dim = 1;
      cover.c[0] = {report.cells[static_cast<size_t>(start)].cell.c[0].lo,
                    report.cells[static_cast<size_t>(i - 1)].cell.c[0].hi};
      report.exceptional_cover.push_back(cover);
    }
  } else {
    for (const SweepCell& c : report.cells)
      if (c.status != SeparationStatus::Disjoint)
        report.exceptional_cover.push_back(c.cell);
  }
  return report;
}

}  // namespace genpos
