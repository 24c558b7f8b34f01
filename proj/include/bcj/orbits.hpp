#pragma once

// Partial Sp-orbits of the non-index-matched basis of wedge^2 B_2 under
// the handle swaps (a_i <-> b_i) and handle transpositions (i <-> j).

#include <cstddef>
#include <string>
#include <vector>

#include "bcj/wedge.hpp"

namespace bcj {

struct OrbitClass {
  /// Roman numeral I..XI, or "?" when no catalog pattern matches.
  std::string label;
  /// Sorted wedge slots.
  std::vector<std::size_t> members;
  /// First catalog pattern found in the class, e.g. "a1*b1 ^ a2*b2".
  std::string representative;
};

struct OrbitReport {
  int genus = 0;
  /// Sorted by label order I..XI; unlabeled components last.
  std::vector<OrbitClass> classes;
  /// Non-fatal classification problems.
  std::vector<std::string> errors;

  std::size_t member_count() const;
  const OrbitClass* find(const std::string& label) const;
};

/// The eleven pattern families with indices i, j, k, l instantiated as
/// 1, 2, 3, 4. Entries needing a handle above the genus are skipped by
/// orbit_classes.
struct OrbitPattern {
  std::string label;
  std::vector<std::string> elements;
};
const std::vector<OrbitPattern>& orbit_patterns();

/// Slot image of a wedge basis element under a variable permutation given
/// by an Sp generator that permutes basis variables.
std::size_t permute_slot(const WedgeSpace& space, std::size_t slot, const std::vector<int>& var_perm);

/// Connected components under all swaps and transpositions, labeled by the
/// pattern catalog.
OrbitReport orbit_classes(int genus);

}  // namespace bcj
