#pragma once

// Test-only fixtures and independent oracles. Everything here deliberately
// avoids the library's interval machinery: plain double arithmetic only, so
// the branch-and-bound engine is checked against a separate code path.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "genpos/system.hpp"

namespace genpos::testing {

inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline IFSystem cantor_thirds() {
  std::vector<AffineMap> maps;
  maps.push_back(AffineMap::line(1.0 / 3.0, 0.0));
  maps.push_back(AffineMap::line(1.0 / 3.0, 2.0 / 3.0));
  return IFSystem::create(std::move(maps),
                          Box::from_corners(Vec::of(0.0), Vec::of(1.0)));
}

inline IFSystem touching_halves() {
  std::vector<AffineMap> maps;
  maps.push_back(AffineMap::line(0.5, 0.0));
  maps.push_back(AffineMap::line(0.5, 0.5));
  return IFSystem::create(std::move(maps),
                          Box::from_corners(Vec::of(0.0), Vec::of(1.0)));
}

/// Random 1-D system with map_count maps, ratios below max_ratio, mapping
/// [0,1] into itself (orientation may flip).
inline IFSystem random_system_1d(std::mt19937_64& gen, int map_count,
                                 double max_ratio) {
  std::vector<AffineMap> maps;
  for (int i = 0; i < map_count; ++i) {
    double ratio = 0.05 + (max_ratio - 0.05) * uniform01(gen);
    bool flip = (gen() & 1) != 0;
    double slope = flip ? -ratio : ratio;
    double offset = flip ? ratio + (1.0 - ratio) * uniform01(gen)
                         : (1.0 - ratio) * uniform01(gen);
    maps.push_back(AffineMap::line(slope, offset));
  }
  return IFSystem::create(std::move(maps),
                          Box::from_corners(Vec::of(0.0), Vec::of(1.0)));
}

struct PlainInterval {
  double lo, hi;
};

inline void enumerate_leaf_intervals(const IFSystem& s, double slope, double shift,
                                     int depth, std::vector<PlainInterval>& out) {
  if (depth == 0) {
    double a = shift, b = slope + shift;  // image of [0,1] under x -> slope x + shift
    out.push_back({std::min(a, b), std::max(a, b)});
    return;
  }
  for (int letter = 1; letter <= s.map_count(); ++letter) {
    const AffineMap& m = s.map(letter);
    enumerate_leaf_intervals(s, slope * m.matrix.at(0, 0),
                             slope * m.offset[0] + shift, depth - 1, out);
  }
}

/// Merges intervals into disjoint segments sorted by left endpoint.
inline std::vector<PlainInterval> union_segments(std::vector<PlainInterval> v) {
  std::sort(v.begin(), v.end(),
            [](const PlainInterval& x, const PlainInterval& y) { return x.lo < y.lo; });
  std::vector<PlainInterval> out;
  for (const PlainInterval& x : v) {
    if (!out.empty() && x.lo <= out.back().hi)
      out.back().hi = std::max(out.back().hi, x.hi);
    else
      out.push_back(x);
  }
  return out;
}

/// Brute-force oracle: min distance between the depth-d interval covers of
/// S_j([0,1]) and S_k([0,1]). Plain double arithmetic; both covers are merged
/// into disjoint segments, and the minimizing pair must then be adjacent in
/// the combined order, so a neighbor sweep is exact.
inline double brute_force_min_distance(const IFSystem& s, const Word& j,
                                       const Word& k, int depth) {
  auto root = [&](const Word& w) {
    double slope = 1.0, shift = 0.0;
    for (int letter : w.letters) {
      const AffineMap& m = s.map(letter);
      shift = slope * m.offset[0] + shift;
      slope = slope * m.matrix.at(0, 0);
    }
    return PlainInterval{slope, shift};
  };
  PlainInterval rj = root(j), rk = root(k);
  std::vector<PlainInterval> a, b;
  enumerate_leaf_intervals(s, rj.lo, rj.hi, depth, a);
  enumerate_leaf_intervals(s, rk.lo, rk.hi, depth, b);
  std::vector<PlainInterval> sa = union_segments(std::move(a));
  std::vector<PlainInterval> sb = union_segments(std::move(b));
  double best = std::numeric_limits<double>::infinity();
  size_t ib = 0;
  for (const PlainInterval& x : sa) {
    while (ib + 1 < sb.size() && sb[ib + 1].lo <= x.lo) ++ib;
    for (size_t t : {ib == 0 ? ib : ib - 1, ib, ib + 1}) {
      if (t >= sb.size()) continue;
      double d = std::max({0.0, sb[t].lo - x.hi, x.lo - sb[t].hi});
      best = std::min(best, d);
    }
  }
  return best;
}

/// True when the point lies in some box S_w(V) with w starting at `first`
/// and |w| = depth.
inline bool point_in_cover(const IFSystem& s, int first, const Vec& point,
                           int depth) {
  struct Frame {
    AffineMap map;
    int level;
  };
  std::vector<Frame> stack;
  stack.push_back({compose(s, Word::single(first)), 1});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (!f.map.apply(s.hull).contains(point)) continue;
    if (f.level == depth) return true;
    for (int letter = 1; letter <= s.map_count(); ++letter)
      stack.push_back({f.map.after(s.map(letter)), f.level + 1});
  }
  return false;
}

}  // namespace genpos::testing
