#pragma once

#include <string>

#include "genpos/system.hpp"

namespace genpos {

enum class FamilyKind {
  TranslationSingle,  // one map translated by t in R^n
  TranslationAll,     // every map translated by its own t_k, t in R^(m*n)
  ExactOverlap,       // S_1(x)=t x, S_2(x)=b x, S_3(x)=(x+8)/9 on [0,1]; t is the parameter
  OnePoint,           // six-map system on [0,1]; q (the S_3 ratio) is the parameter
};

std::string family_kind_name(FamilyKind kind);

/// One-parameter (or vector-parameter) family of systems with its uniform
/// motion constant C and a ratio vector valid across the whole parameter
/// domain. Every built-in kind has C = 1.
struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::TranslationSingle;
  IFSystem base;          // reference system; its hull is invariant for all t in the domain
  Box domain;             // parameter box D
  double motion_constant = 1.0;
  RatioVector ratios;     // dominates the map ratios for every t in D
  int translated_index = 0;  // 1-based, TranslationSingle only
  double b = 0;              // ExactOverlap fixed ratio
  double p = 0, r = 0;       // OnePoint fixed ratios

  static FamilyDescriptor translation_single(IFSystem base, int index, Box domain);
  static FamilyDescriptor translation_all(IFSystem base, Box domain);
  static FamilyDescriptor exact_overlap(double b, Box t_domain);
  static FamilyDescriptor one_point(double p, double r, Box q_domain);

  int param_dim() const { return domain.dim; }
  double rbar() const { return ratios.max_entry(); }

  /// System at parameter t; its hull is the family hull.
  IFSystem instantiate(const Vec& t) const;

  /// True when the map at `letter` depends on the parameter.
  bool letter_moves(int letter) const;

  /// Upper bound for the ratio of the map at `letter`, valid on `cell`.
  double letter_ratio_upper(int letter, const Box& cell) const;

  /// Upper bound for the word ratio r_w on `cell`.
  double word_ratio_upper_on(const Word& w, const Box& cell) const;

  /// Upper bound C_w for sup ||S_{w,t'}(x) - S_{w,t}(x)|| / ||t'-t|| over the
  /// hull and the parameter cell.
  double word_motion_upper(const Word& w, const Box& cell) const;
};

}  // namespace genpos
