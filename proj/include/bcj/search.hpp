#pragma once

// Folding abelian-cycle images into a span of wedge^2 B_2 and comparing it
// with the non-index-matched subspace W.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bcj/cycles.hpp"
#include "bcj/gf2.hpp"
#include "bcj/wedge.hpp"

namespace bcj {

/// Sums of index-matched basis elements that are taken as known to lie in
/// the image (not machine-derived from a disjoint spine pair).
struct FamilyElement {
  WedgeElem element;
  std::string label;
  /// Always begins with "asserted:".
  std::string provenance;
};

inline constexpr const char* kFamilyProvenanceTwoIndex = "asserted:cokernel-two-index-family";
inline constexpr const char* kFamilyProvenanceFourIndex = "asserted:cokernel-four-index-family";

/// a_i b_i ^ a_i b_j + a_j b_j ^ a_i b_j for i != j, then
/// a_i b_j ^ b_i a_k + a_l b_j ^ b_l a_k for distinct i, j, k, l (g >= 4).
std::vector<FamilyElement> cokernel_families(int genus);

/// Index-matched slots a_i x ^ b_i y with x, y distinct variables whose
/// handles differ from i (the type whose count grows cubically).
std::vector<std::size_t> cubic_type_slots(int genus);

struct SearchParams {
  int genus = 4;
  int max_support = 3;
  bool include_bp = false;
  bool include_families = false;
  Disjointness disjointness = Disjointness::kSymplecticOrthogonal;
  int workers = 1;
};

struct CokernelStats {
  std::size_t cubic_type_formula = 0;     // g(2g-2)(2g-3)
  std::size_t family_span_formula = 0;    // (g-1)(2g-2)(2g-3)
  std::size_t cubic_gap_formula = 0;      // difference of the two
  std::size_t quadratic_bound_formula = 0;  // 4g^2 - 10g + 6
  std::size_t cubic_type_slots = 0;       // distinct slots of that type
  std::size_t cubic_type_uncovered = 0;   // codim of span within span + those slots
  std::size_t four_index_family_rank = 0; // rank of the four-index family alone
};

struct ImageReport {
  SearchParams params;
  Dims dims;
  std::size_t descriptors = 0;
  std::size_t cycles_enumerated = 0;
  std::size_t distinct_images = 0;
  std::size_t rank = 0;
  /// dim wedge^2 B_2 - rank.
  std::size_t codim = 0;
  std::size_t search_rank = 0;
  std::size_t family_elements = 0;
  std::size_t family_rank_gain = 0;
  std::vector<std::size_t> missing_slots;
  std::vector<std::string> missing;
  /// Orbit label -> label of the first cycle after which the running span
  /// contains an element of that orbit. With several workers each keeps its
  /// own running span and the earliest cycle over all workers is reported,
  /// so the value depends on the worker count (but not on scheduling).
  std::map<std::string, std::string> orbit_hits;
  CokernelStats cokernel;
  double elapsed_seconds = 0.0;
  gf2::SpanBasis span{0};

  bool w_covered() const { return missing_slots.empty(); }
};

/// Requires genus >= 2.
ImageReport image_rank_report(const SearchParams& params);

}  // namespace bcj
