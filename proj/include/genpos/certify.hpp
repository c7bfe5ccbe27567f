#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "genpos/family.hpp"
#include "genpos/moran.hpp"

namespace genpos {

/// Hölder/anti-Hölder data of a parametrized pair of images: the dimension
/// bound min{(beta/alpha) dim(L1 x L2), dim D} needs only these constants.
struct HolderData {
  double alpha = 1;
  double beta = 1;
  double C0 = 1;
  double M0 = 1;
  double dim_product = 0;  // dim_H (L1 x L2)
  double dim_domain = 0;   // dim_H D
};

/// Output of every certificate routine. holds is true only when the computed
/// exceptional-set bound is strictly below the parameter-domain dimension
/// (and the margin is positive where one applies), with all comparisons
/// rounded conservatively.
struct Certificate {
  double bound = 0;      // upper bound on the exceptional-set dimension
  double threshold = 0;  // dimension of the parameter domain
  std::optional<double> margin;  // separation margin, when a margin-style certificate applies
  bool holds = false;
  std::map<std::string, double> inputs;  // echo of every constant used
  std::string conclusion;
};

/// Dimension bound for the exceptional parameter set: bound =
/// min{(beta/alpha) dim_product, dim_domain}; holds iff bound < dim_domain.
Certificate genpos_bound(const HolderData& h);

enum class CorollaryExample {
  ScalingByZ,            // B vs z*A, z in a disc; needs 0 outside the closure of A
  EscapingTranslation,   // M2 t + f(B,t) vs A with an M1-Lipschitz f, M2 > M1
  BiLipschitzTranslation // bi-Lipschitz distortion of a translation
};

/// Fills HolderData (alpha = beta = 1) for the three stock situations:
///   ScalingByZ:            first = disc radius (C0), second = inf|z| over A (M0)
///   EscapingTranslation:   first = M1 (C0), second = M2 (M0 = M2 - M1)
///   BiLipschitzTranslation:first = L- (M0), second = L+ (C0)
/// Throws when the example's hypotheses fail.
HolderData corollary_preset(CorollaryExample which, double first, double second,
                            double dim_product, double dim_domain);

/// Uniform displacement bound C * dist / (1 - rbar) for addressed points.
double displacement_bound(double C, double rbar, double dist);

struct DisplacementReport {
  bool pass = false;
  double max_ratio = 0;  // max observed / bound, after the depth correction
  int samples = 0;
  int depth = 0;
  std::uint64_t seed = 0;
  // Witness of the worst (or first failing) sample.
  Word witness_prefix;
  Vec witness_t, witness_t_prime;
};

/// Samples random (address, t, t') triples and checks the observed point
/// displacement against displacement_bound plus the address truncation
/// correction 2 rbar^depth diam(V). Identical seeds give identical reports.
DisplacementReport empirical_displacement_check(const FamilyDescriptor& fam,
                                                int samples, int depth,
                                                std::uint64_t seed);

/// Separation margin certificate for incomparable words j, k:
///   margin = c_j - C_k - (r_j + r_k) C / (1 - rbar),
/// holds iff margin > 0 and s_r < dim_domain / 2 (then the pieces K_j and
/// K_k are disjoint for almost every parameter). c_j and C_k are computed
/// internally for the case and translation families and may be overridden.
Certificate margin_certificate(const FamilyDescriptor& fam, const Word& j,
                               const Word& k, std::optional<double> cj = {},
                               std::optional<double> Ck = {},
                               std::optional<double> dim_domain = {});

/// Translating the single map k: holds iff r_k + r_m + rbar < 1 and
/// s_r < n/2; then K_k and K_m are disjoint for almost all translations.
Certificate translation_corollary_single(const RatioVector& r, int k, int m,
                                         int ambient_dim);

/// Translating every map independently: holds iff r_j + r_k + rbar < 1 for
/// every pair and s_r < n/2; then the system satisfies the strong separation
/// condition for almost all translation tuples.
Certificate translation_corollary_ssc(const RatioVector& r, int ambient_dim);

}  // namespace genpos
