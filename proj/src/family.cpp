#include "genpos/family.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "genpos/cases.hpp"

namespace genpos {

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::TranslationSingle: return "translation-single";
    case FamilyKind::TranslationAll: return "translation-all";
    case FamilyKind::ExactOverlap: return "exact-overlap";
    case FamilyKind::OnePoint: return "one-point";
  }
  return "?";
}

namespace {

// Largest translation magnitude reachable inside the domain, per map slot.
double domain_sup_norm(const Box& d) {
  double m = 0;
  for (int i = 0; i < d.dim; ++i) {
    const Interval& iv = d.c[static_cast<size_t>(i)];
    m = std::max({m, std::abs(iv.lo), std::abs(iv.hi)});
  }
  return m;
}

// Checks S_k(V) + [t-range] ⊆ V for every map, with the translation applied
// to the coordinates the map owns.
bool translated_hull_invariant(const IFSystem& base, const Box& hull,
                               const Box& domain, int single_index) {
  int n = base.dim();
  for (int k = 1; k <= base.map_count(); ++k) {
    Box img = base.map(k).apply(hull);
    if (single_index == 0 || k == single_index) {
      for (int i = 0; i < n; ++i) {
        int slot = (single_index == 0) ? (k - 1) * n + i : i;
        img.c[static_cast<size_t>(i)] =
            iadd(img.c[static_cast<size_t>(i)], domain.c[static_cast<size_t>(slot)]);
      }
    }
    if (!hull.contains(img)) return false;
  }
  return true;
}

Box grow_hull_for_translations(const IFSystem& base, const Box& domain,
                               int single_index) {
  double rbar = base.ratios().max_entry();
  double pad = domain_sup_norm(domain) / (1.0 - rbar);
  Box hull = base.hull.inflated(pad);
  for (int tries = 0; tries < 60; ++tries) {
    if (translated_hull_invariant(base, hull, domain, single_index)) return hull;
    pad = std::max(pad * 2.0, 1.0);
    hull = base.hull.inflated(pad);
  }
  throw std::runtime_error("failed to find an invariant hull for the translation family");
}

}  // namespace

FamilyDescriptor FamilyDescriptor::translation_single(IFSystem base, int index, Box domain) {
  if (index < 1 || index > base.map_count())
    throw std::invalid_argument("translated index out of range");
  if (domain.dim != base.dim())
    throw std::invalid_argument("translation-single domain must match the ambient dimension");
  FamilyDescriptor f;
  f.kind = FamilyKind::TranslationSingle;
  f.translated_index = index;
  f.domain = domain;
  f.ratios = base.ratios();
  f.base = std::move(base);
  f.base.hull = grow_hull_for_translations(f.base, domain, index);
  return f;
}

FamilyDescriptor FamilyDescriptor::translation_all(IFSystem base, Box domain) {
  if (domain.dim != base.dim() * base.map_count())
    throw std::invalid_argument("translation-all domain must have m*n coordinates");
  if (domain.dim > kMaxDim)
    throw std::invalid_argument("translation-all parameter space exceeds the supported dimension");
  FamilyDescriptor f;
  f.kind = FamilyKind::TranslationAll;
  f.domain = domain;
  f.ratios = base.ratios();
  f.base = std::move(base);
  f.base.hull = grow_hull_for_translations(f.base, domain, 0);
  return f;
}

FamilyDescriptor FamilyDescriptor::exact_overlap(double b, Box t_domain) {
  if (t_domain.dim != 1) throw std::invalid_argument("exact-overlap parameter is scalar");
  const Interval& d = t_domain.c[0];
  if (!(d.lo >= 0.0 && d.hi <= 1.0 / 9.0 && d.lo <= d.hi && d.hi > 0.0))
    throw std::domain_error("exact-overlap t-domain must lie inside (0, 1/9)");
  if (!(b > 0.0 && b < 1.0 / 9.0))
    throw std::domain_error("exact-overlap b must lie in (0, 1/9)");
  FamilyDescriptor f;
  f.kind = FamilyKind::ExactOverlap;
  f.b = b;
  f.domain = t_domain;
  f.base = build_exact_overlap({0.5 * (d.lo + d.hi), b});
  f.ratios = RatioVector({d.hi, b, 1.0 / 9.0});
  return f;
}

FamilyDescriptor FamilyDescriptor::one_point(double p, double r, Box q_domain) {
  if (q_domain.dim != 1) throw std::invalid_argument("one-point parameter is scalar");
  const Interval& d = q_domain.c[0];
  if (!(d.lo >= 0.0 && d.hi <= 1.0 / 36.0 && d.lo <= d.hi && d.hi > 0.0))
    throw std::domain_error("one-point q-domain must lie inside (0, 1/36)");
  if (!(p > 0.0 && p < 1.0 / 36.0 && r > 0.0 && r < 1.0 / 36.0))
    throw std::domain_error("one-point p, r must lie in (0, 1/36)");
  FamilyDescriptor f;
  f.kind = FamilyKind::OnePoint;
  f.p = p;
  f.r = r;
  f.domain = q_domain;
  f.base = build_one_point({p, 0.5 * (d.lo + d.hi), r});
  // The certificate vector dominates q by 1/36 across the whole domain.
  f.ratios = RatioVector({p, r, 1.0 / 36.0, r, r, r});
  return f;
}

IFSystem FamilyDescriptor::instantiate(const Vec& t) const {
  if (t.dim != param_dim()) throw std::invalid_argument("parameter dimension mismatch");
  switch (kind) {
    case FamilyKind::ExactOverlap:
      return build_exact_overlap({t[0], b});
    case FamilyKind::OnePoint:
      return build_one_point({p, t[0], r});
    case FamilyKind::TranslationSingle:
    case FamilyKind::TranslationAll: {
      IFSystem s = base;
      int n = s.dim();
      for (int k = 1; k <= s.map_count(); ++k) {
        if (kind == FamilyKind::TranslationSingle && k != translated_index) continue;
        for (int i = 0; i < n; ++i) {
          int slot = (kind == FamilyKind::TranslationAll) ? (k - 1) * n + i : i;
          s.maps[static_cast<size_t>(k - 1)].offset[i] += t[slot];
        }
      }
      for (const AffineMap& m : s.maps)
        if (!s.hull.contains(m.apply(s.hull)))
          throw std::domain_error("parameter leaves the invariant hull");
      return s;
    }
  }
  throw std::logic_error("unknown family kind");
}

bool FamilyDescriptor::letter_moves(int letter) const {
  switch (kind) {
    case FamilyKind::TranslationSingle: return letter == translated_index;
    case FamilyKind::TranslationAll: return true;
    case FamilyKind::ExactOverlap: return letter == 1;
    case FamilyKind::OnePoint: return letter == 3;
  }
  return false;
}

double FamilyDescriptor::letter_ratio_upper(int letter, const Box& cell) const {
  if (kind == FamilyKind::ExactOverlap && letter == 1) return cell.c[0].hi;
  if (kind == FamilyKind::OnePoint && letter == 3) return cell.c[0].hi;
  return ratios.at(letter);
}

double FamilyDescriptor::word_ratio_upper_on(const Word& w, const Box& cell) const {
  double r = 1.0;
  for (int letter : w.letters) r = nudge_up(r * letter_ratio_upper(letter, cell), 1);
  return r;
}

double FamilyDescriptor::word_motion_upper(const Word& w, const Box& cell) const {
  // C_w = sum over moving positions of (prefix ratio product) * (per-letter
  // motion factor). Translated maps move with factor 1; the multiplicative
  // case parameters enter as t*x with |x| bounded by the hull.
  double factor = motion_constant;
  if (kind == FamilyKind::ExactOverlap || kind == FamilyKind::OnePoint) {
    double sup = 0;
    for (int i = 0; i < base.hull.dim; ++i) {
      const Interval& iv = base.hull.c[static_cast<size_t>(i)];
      sup = std::max({sup, std::abs(iv.lo), std::abs(iv.hi)});
    }
    factor = motion_constant * sup;
  }
  double prefix = 1.0;
  double total = 0.0;
  for (int letter : w.letters) {
    if (letter_moves(letter)) total = nudge_up(total + prefix * factor, 2);
    prefix = nudge_up(prefix * letter_ratio_upper(letter, cell), 1);
  }
  return total;
}

}  // namespace genpos
