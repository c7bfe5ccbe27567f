#include "genpos/system.hpp"

#include <algorithm>
#include <stdexcept>

namespace genpos {

RatioVector::RatioVector(std::vector<double> e) : entries(std::move(e)) {
  for (double r : entries)
    if (!(r > 0.0 && r < 1.0))
      throw std::domain_error("ratio entries must lie in (0,1)");
}

double RatioVector::max_entry() const {
  return *std::max_element(entries.begin(), entries.end());
}

double RatioVector::word_ratio_upper(const Word& w) const {
  double r = 1.0;
  for (int letter : w.letters) {
    if (letter < 1 || letter > static_cast<int>(entries.size()))
      throw std::invalid_argument("word letter out of range for ratio vector");
    r = nudge_up(r * at(letter), 1);
  }
  return r;
}

IFSystem IFSystem::create(std::vector<AffineMap> maps, Box hull) {
  if (maps.size() < 2) throw std::invalid_argument("a system needs at least 2 maps");
  IFSystem s;
  s.maps = std::move(maps);
  // Exactly tight hulls (maps touching the boundary) cannot pass an
  // outward-rounded containment check; a hair of padding restores genuine
  // margin while every certified quantity stays valid for the padded hull.
  double max_width = 0;
  for (int i = 0; i < hull.dim; ++i)
    max_width = std::max(max_width, hull.c[static_cast<size_t>(i)].width());
  s.hull = hull.inflated(1e-12 * (max_width + 1.0));
  for (const AffineMap& m : s.maps) {
    if (m.dim() != s.hull.dim) throw std::invalid_argument("map/hull dimension mismatch");
    if (!s.hull.contains(m.apply(s.hull)))
      throw std::domain_error("hull is not invariant under every map");
  }
  return s;
}

RatioVector IFSystem::ratios() const {
  std::vector<double> r;
  r.reserve(maps.size());
  for (const AffineMap& m : maps) r.push_back(m.ratio);
  return RatioVector(std::move(r));
}

void IFSystem::check_letter(int letter) const {
  if (letter < 1 || letter > map_count())
    throw std::invalid_argument("word letter out of range for system");
}

AffineMap compose(const IFSystem& system, const Word& word) {
  AffineMap acc = AffineMap::identity(system.dim());
  for (int letter : word.letters) {
    system.check_letter(letter);
    acc = acc.after(system.map(letter));
  }
  return acc;
}

double coding_distance(const Address& a, const Address& b, const RatioVector& r,
                       int depth_cap) {
  if (depth_cap < 1) throw std::invalid_argument("depth_cap must be >= 1");
  if (same_address(a, b)) return 0.0;
  // The expansions are eventually constant, so they either differ within the
  // prefixes or at the first position past both of them.
  size_t scan = std::max(a.prefix.size(), b.prefix.size()) + 1;
  size_t meet_len = 0;
  while (meet_len < scan && a.letter_at(meet_len) == b.letter_at(meet_len)) ++meet_len;
  meet_len = std::min(meet_len, static_cast<size_t>(depth_cap));
  double dist = 1.0;
  for (size_t i = 0; i < meet_len; ++i) dist *= r.at(a.letter_at(i));
  return dist;
}

PointEstimate address_point(const IFSystem& system, const Address& a, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  AffineMap m = compose(system, a.truncated(depth));
  Vec center = system.hull.center();
  double sup = 0;
  for (int i = 0; i < center.dim; ++i) sup = std::max(sup, std::abs(center[i]));
  PointEstimate e;
  e.point = m.apply(center);
  e.error_radius = nudge_up(m.ratio * system.hull.diameter_upper() +
                                m.matrix_err * center.dim * sup + m.offset_err,
                            2);
  return e;
}

}  // namespace genpos
