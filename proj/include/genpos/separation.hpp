#pragma once

#include <utility>
#include <vector>

#include "genpos/family.hpp"
#include "genpos/system.hpp"

namespace genpos {

enum class SeparationStatus { Disjoint, Undecided };

enum class UndecidedReason { None, ToleranceReached, DepthCapReached };

/// Verdict of the pair-disjointness procedure. Disjoint verdicts are sound:
/// the gap is a certified lower bound on the distance between the two pieces
/// under outward-rounded interval arithmetic. Intersection is never claimed.
struct SeparationVerdict {
  SeparationStatus status = SeparationStatus::Undecided;
  double gap = 0;               // valid when Disjoint; always > 0 then
  double overlap_diameter = 0;  // valid when Undecided: scale of the smallest unresolved pair
  int depth_used = 0;
  UndecidedReason reason = UndecidedReason::None;
};

/// Branch-and-bound on box pairs (S_{j u}(V), S_{k v}(V)). Pairs with a
/// certified positive distance are pruned; the pair with the largest combined
/// diameter is refined first (deterministic lexicographic tie-break). A pair
/// is abandoned as unresolved when both boxes shrink below tol or its depth
/// exceeds max_depth.
SeparationVerdict check_pair_disjoint(const IFSystem& system, const Word& j,
                                      const Word& k, double tol, int max_depth);

struct PairVerdict {
  int first = 0;
  int second = 0;
  SeparationVerdict verdict;
};

struct SscReport {
  std::vector<PairVerdict> pairs;
  bool ssc_holds = false;
  double min_gap = 0;  // over Disjoint pairs; 0 when none
};

/// Runs check_pair_disjoint on all unordered first-level pairs.
SscReport check_ssc(const IFSystem& system, double tol, int max_depth);

struct SweepCell {
  Box cell;
  SeparationStatus status = SeparationStatus::Undecided;
  double gap_or_overlap = 0;  // Disjoint: certified whole-cell gap; Undecided: unresolved scale
  int depth_used = 0;
};

struct SweepReport {
  Box domain;
  int cells_per_axis = 0;
  std::vector<SweepCell> cells;
  double disjoint_fraction = 0;
  double undecided_measure = 0;
  std::vector<Box> exceptional_cover;  // adjacent non-Disjoint cells merged (1-D)
};

/// Classifies a uniform grid over the parameter domain. Each cell is sampled
/// at its center; a cell counts as Disjoint only when the certified gap
/// exceeds the cell's motion bound
///     (C_j + C_k + (r_j + r_k) C / (1 - rbar)) * cell_radius,
/// which bounds how far both pieces can move across the cell, so Disjoint
/// cells are sound for every parameter they contain.
///
/// For exact-overlap families the pair (j, k) must be ([1], [2]) and the
/// sweep classifies the family's exceptional structure: the piece pairs
/// S_1^m(K_3) vs S_2^n(K_3) for all m != n up to max_mn, each checked at
/// first level against its own motion bound. Other kinds sweep the single
/// word pair (j, k) through check_pair_disjoint.
///
/// Cells are independent and may be evaluated concurrently (the GENPOS_THREADS
/// environment variable caps the worker count); the report is identical to
/// sequential evaluation.
SweepReport exceptional_set_sweep(const FamilyDescriptor& fam, const Word& j,
                                  const Word& k, int cells, double tol,
                                  int max_depth, int max_mn = 4);

}  // namespace genpos
