#include "genpos/certify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace genpos {

namespace {

void echo_holder(Certificate& c, const HolderData& h) {
  c.inputs["alpha"] = h.alpha;
  c.inputs["beta"] = h.beta;
  c.inputs["C0"] = h.C0;
  c.inputs["M0"] = h.M0;
  c.inputs["dim_product"] = h.dim_product;
  c.inputs["dim_domain"] = h.dim_domain;
}

}  // namespace

Certificate genpos_bound(const HolderData& h) {
  if (!(h.alpha > 0) || !(h.beta > 0))
    throw std::domain_error("alpha and beta must be positive");
  if (!(h.C0 > 0) || !(h.M0 > 0))
    throw std::domain_error("C0 and M0 must be positive");
  if (h.dim_product < 0 || h.dim_domain < 0)
    throw std::domain_error("dimensions must be nonnegative");
  Certificate c;
  c.bound = std::min((h.beta / h.alpha) * h.dim_product, h.dim_domain);
  c.threshold = h.dim_domain;
  c.holds = c.bound < c.threshold;
  echo_holder(c, h);
  c.conclusion = c.holds
                     ? "exceptional parameters have dimension below the domain; "
                       "the images are disjoint for almost every parameter"
                     : "bound does not separate from the domain dimension";
  return c;
}

HolderData corollary_preset(CorollaryExample which, double first, double second,
                            double dim_product, double dim_domain) {
  HolderData h;
  h.alpha = 1;
  h.beta = 1;
  h.dim_product = dim_product;
  h.dim_domain = dim_domain;
  switch (which) {
    case CorollaryExample::ScalingByZ:
      if (!(second > 0))
        throw std::domain_error("inf |z| over A must be positive (0 outside closure(A))");
      if (!(first > 0)) throw std::domain_error("disc radius must be positive");
      h.C0 = first;
      h.M0 = second;
      return h;
    case CorollaryExample::EscapingTranslation:
      if (!(first > 0) || !(second > first))
        throw std::domain_error("escaping translation needs M2 > M1 > 0");
      h.C0 = first;
      h.M0 = second - first;
      return h;
    case CorollaryExample::BiLipschitzTranslation:
      if (!(first > 0) || !(second >= first))
        throw std::domain_error("bi-Lipschitz constants need 0 < L- <= L+");
      h.C0 = second;
      h.M0 = first;
      return h;
  }
  throw std::logic_error("unknown corollary example");
}

double displacement_bound(double C, double rbar, double dist) {
  if (!(rbar > 0 && rbar < 1)) throw std::domain_error("rbar must lie in (0,1)");
  if (!(C > 0)) throw std::domain_error("C must be positive");
  if (dist < 0) throw std::domain_error("distance must be nonnegative");
  return C * dist / (1.0 - rbar);
}

namespace {

double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

Vec uniform_in_box(std::mt19937_64& g, const Box& b) {
  Vec t = Vec::zero(b.dim);
  for (int i = 0; i < b.dim; ++i) {
    const Interval& iv = b.c[static_cast<size_t>(i)];
    t[i] = iv.lo + uniform01(g) * (iv.hi - iv.lo);
  }
  return t;
}

}  // namespace

DisplacementReport empirical_displacement_check(const FamilyDescriptor& fam,
                                                int samples, int depth,
                                                std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  std::mt19937_64 gen(seed);
  DisplacementReport report;
  report.samples = samples;
  report.depth = depth;
  report.seed = seed;

  int m = fam.base.map_count();
  double diam = fam.base.hull.diameter_upper();
  double correction = 2.0 * std::pow(fam.rbar(), depth) * diam;

  for (int s = 0; s < samples; ++s) {
    Word prefix;
    prefix.letters.reserve(static_cast<size_t>(depth));
    for (int i = 0; i < depth; ++i)
      prefix.letters.push_back(1 + static_cast<int>(gen() % static_cast<std::uint64_t>(m)));
    Vec t = uniform_in_box(gen, fam.domain);
    Vec t2 = uniform_in_box(gen, fam.domain);
    Address addr{prefix, 1};
    PointEstimate a = address_point(fam.instantiate(t), addr, depth);
    PointEstimate b = address_point(fam.instantiate(t2), addr, depth);
    double observed = (a.point - b.point).norm();
    double bound =
        displacement_bound(fam.motion_constant, fam.rbar(), (t - t2).norm()) +
        correction;
    double ratio = observed / bound;
    if (ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.witness_prefix = prefix;
      report.witness_t = t;
      report.witness_t_prime = t2;
    }
  }
  report.pass = report.max_ratio <= 1.0;
  return report;
}

namespace {

bool is_power_of(const Word& w, int letter, int min_count = 1) {
  if (static_cast<int>(w.size()) < min_count) return false;
  return std::all_of(w.letters.begin(), w.letters.end(),
                     [&](int l) { return l == letter; });
}

// Sum over occurrences of `letter` in w of the ratio product of the letters
// before it; optionally skips a leading occurrence.
double occurrence_sum(const RatioVector& r, const Word& w, int letter, bool skip_head) {
  double prefix = 1.0, total = 0.0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w.at(i) == letter && !(skip_head && i == 0))
      total = nudge_up(total + prefix, 2);
    prefix = nudge_up(prefix * r.at(w.at(i)), 1);
  }
  return total;
}

struct MarginCertificateData {
  double cj = 0, Ck = 0, rj = 0, rk = 0, rbar = 0, C = 1, dim_domain = 0;
  RatioVector dimension_ratios;
};

MarginCertificateData resolve_margin_constants(const FamilyDescriptor& fam,
                                               const Word& j, const Word& k,
                                               std::optional<double> cj_opt,
                                               std::optional<double> Ck_opt,
                                               std::optional<double> dimD_opt) {
  MarginCertificateData d;
  d.C = fam.motion_constant;
  d.rbar = fam.rbar();
  d.dimension_ratios = fam.ratios;
  d.rj = fam.ratios.word_ratio_upper(j);
  d.rk = fam.ratios.word_ratio_upper(k);
  switch (fam.kind) {
    case FamilyKind::ExactOverlap: {
      if (!is_power_of(j, 1) || !is_power_of(k, 2))
        throw std::invalid_argument(
            "exact-overlap certificates take j = [1]^m (parameter-dependent side) "
            "and k = [2]^n");
      int m = static_cast<int>(j.size());
      int n = static_cast<int>(k.size());
      double bn = std::pow(fam.b, n);
      d.cj = 8.0 * bn;
      d.Ck = 0.0;
      d.rj = 9.0 * bn / 8.0;
      d.rk = bn;
      d.rbar = 1.0 / 9.0;
      d.dim_domain = 1.0;
      // Ratio vector on the exceptional interval: t is dominated there by
      // (min(9 b^n/8, 9^-m))^(1/m).
      double t_bar = std::pow(std::min(9.0 * bn / 8.0, std::pow(9.0, -m)), 1.0 / m);
      d.dimension_ratios = RatioVector({t_bar, fam.b, 1.0 / 9.0});
      break;
    }
    case FamilyKind::OnePoint: {
      bool j_ok = !j.empty() && j.at(0) == 3 &&
                  is_power_of(Word{std::vector<int>(j.letters.begin() + 1,
                                                    j.letters.end())},
                              1, 0);
      bool k_ok = !k.empty() && k.at(0) == 4 &&
                  is_power_of(Word{std::vector<int>(k.letters.begin() + 1,
                                                    k.letters.end())},
                              6, 0);
      if (!j_ok || !k_ok)
        throw std::invalid_argument(
            "one-point certificates take j = [3]+[1]^m and k = [4]+[6]^n");
      int m = static_cast<int>(j.size()) - 1;
      double pm = std::pow(fam.p, m);
      d.cj = pm / 3.0;
      d.Ck = 0.0;
      d.rj = pm / 36.0;
      d.rk = 3.0 * pm / 36.0;
      d.rbar = 1.0 / 36.0;
      d.dim_domain = 1.0;
      break;
    }
    case FamilyKind::TranslationSingle:
    case FamilyKind::TranslationAll: {
      if (j.empty())
        throw std::invalid_argument("translation certificates need a nonempty j");
      int moving = fam.kind == FamilyKind::TranslationSingle ? fam.translated_index
                                                             : j.at(0);
      if (j.at(0) != moving)
        throw std::invalid_argument(
            "translation certificates need j to start with the translated index");
      d.cj = 1.0 - occurrence_sum(fam.ratios, j, moving, true);
      if (!(d.cj > 0) && !cj_opt)
        throw std::domain_error(
            "no internal anti-Lipschitz constant for this word; supply c_j");
      d.Ck = occurrence_sum(fam.ratios, k, moving, false);
      d.dim_domain = fam.base.dim();
      break;
    }
  }
  if (cj_opt) d.cj = *cj_opt;
  if (Ck_opt) d.Ck = *Ck_opt;
  if (dimD_opt) d.dim_domain = *dimD_opt;
  if (!(d.cj > 0)) throw std::domain_error("c_j must be positive");
  if (d.Ck < 0) throw std::domain_error("C_k must be nonnegative");
  return d;
}

}  // namespace

Certificate margin_certificate(const FamilyDescriptor& fam, const Word& j,
                               const Word& k, std::optional<double> cj,
                               std::optional<double> Ck,
                               std::optional<double> dim_domain) {
  if (!word_meet(j, k).incomparable)
    throw std::invalid_argument("words must be incomparable");
  MarginCertificateData d = resolve_margin_constants(fam, j, k, cj, Ck, dim_domain);

  double margin =
      nudge_down(d.cj - d.Ck - (d.rj + d.rk) * d.C / (1.0 - d.rbar), 4);
  double s_up = similarity_dimension_upper(d.dimension_ratios);

  Certificate c;
  c.margin = margin;
  c.bound = nudge_up(2.0 * s_up, 1);
  c.threshold = d.dim_domain;
  c.holds = margin > 0 && c.bound < c.threshold;
  c.inputs["c_j"] = d.cj;
  c.inputs["C_k"] = d.Ck;
  c.inputs["r_j"] = d.rj;
  c.inputs["r_k"] = d.rk;
  c.inputs["rbar"] = d.rbar;
  c.inputs["C"] = d.C;
  c.inputs["s_r"] = s_up;
  c.inputs["dim_domain"] = d.dim_domain;
  c.conclusion = c.holds
                     ? "K_j and K_k are disjoint for almost every parameter in D"
                     : "certificate does not hold";
  return c;
}

Certificate translation_corollary_single(const RatioVector& r, int k, int m,
                                         int ambient_dim) {
  if (k == m) throw std::invalid_argument("map indices must differ");
  if (k < 1 || m < 1 || k > static_cast<int>(r.size()) || m > static_cast<int>(r.size()))
    throw std::invalid_argument("map index out of range");
  double rbar = r.max_entry();
  double sum = nudge_up(r.at(k) + r.at(m) + rbar, 2);
  double s_up = similarity_dimension_upper(r);
  Certificate c;
  c.margin = nudge_down(1.0 - (r.at(k) + r.at(m)) / (1.0 - rbar), 4);
  c.bound = nudge_up(2.0 * s_up, 1);
  c.threshold = ambient_dim;
  c.holds = sum < 1.0 && c.bound < c.threshold;
  c.inputs["r_k"] = r.at(k);
  c.inputs["r_m"] = r.at(m);
  c.inputs["rbar"] = rbar;
  c.inputs["s_r"] = s_up;
  c.inputs["ambient_dim"] = ambient_dim;
  c.conclusion =
      c.holds ? "K_k,t and K_m,t are disjoint for almost all t in R^n"
              : "certificate does not hold";
  return c;
}

Certificate translation_corollary_ssc(const RatioVector& r, int ambient_dim) {
  std::vector<double> sorted = r.entries;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double rbar = sorted[0];
  double worst_sum = nudge_up(sorted[0] + sorted[1] + rbar, 2);
  double s_up = similarity_dimension_upper(r);
  Certificate c;
  c.margin = nudge_down(1.0 - (sorted[0] + sorted[1]) / (1.0 - rbar), 4);
  c.bound = nudge_up(2.0 * s_up, 1);
  c.threshold = ambient_dim;
  c.holds = worst_sum < 1.0 && c.bound < c.threshold;
  c.inputs["worst_pair_sum"] = worst_sum;
  c.inputs["rbar"] = rbar;
  c.inputs["s_r"] = s_up;
  c.inputs["ambient_dim"] = ambient_dim;
  c.conclusion = c.holds
                     ? "the translated system satisfies the strong separation "
                       "condition for almost all translation tuples"
                     : "certificate does not hold";
  return c;
}

}  // namespace genpos
