#pragma once

// Abelian cycles built from pairs of commuting Torelli generators, and the
// deterministic enumeration of handle-disjoint genus-1 spine pairs.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bcj/bcjmap.hpp"
#include "bcj/surface.hpp"
#include "bcj/wedge.hpp"

namespace bcj {

using CurveDescriptor = std::variant<SeparatingTwist, BPMap>;

BoolPoly sigma(const CurveDescriptor& c);
/// Handles used by all classes of the descriptor (basis and C).
HandleSet support(const CurveDescriptor& c);
std::string describe(const CurveDescriptor& c);

/// Which machine-checked predicate admits a pair of descriptors.
enum class Disjointness {
  /// Disjoint handle supports (conservative).
  kHandleSupport,
  /// Handle-disjoint, or two spines spanning mod-2 orthogonal planes.
  kSymplecticOrthogonal,
};

/// "support" or "orthogonal".
std::string to_string(Disjointness d);
/// Inverse of to_string; ArgumentError otherwise.
Disjointness parse_disjointness(const std::string& text);

/// Why two descriptors are taken to commute.
struct DisjointnessCertificate {
  enum class Kind { kSupportDisjoint, kSymplecticOrthogonal, kAsserted };
  Kind kind = Kind::kSupportDisjoint;
  /// Provenance for asserted certificates.
  std::string source;

  static DisjointnessCertificate support_disjoint() { return {}; }
  static DisjointnessCertificate symplectic_orthogonal() {
    return {Kind::kSymplecticOrthogonal, {}};
  }
  static DisjointnessCertificate asserted(std::string source) {
    return {Kind::kAsserted, std::move(source)};
  }
  /// "support-disjoint", "symplectic-orthogonal" or "asserted:<source>".
  std::string to_string() const;
};

struct AbelianCycle {
  CurveDescriptor first;
  CurveDescriptor second;
  DisjointnessCertificate certificate;
  std::string label;
};

/// Throws DisjointnessError when a support-disjoint certificate does not
/// hold, a symplectic-orthogonal one is attached to anything but two
/// separating twists with mutually orthogonal bases, or an asserted one
/// carries no provenance.
void check_certificate(const AbelianCycle& c);

/// sigma(first) ^ sigma(second). FiltrationError if either value leaves B_2.
WedgeElem cycle_image(const AbelianCycle& c);

/// Genus-1 spines (x, y), x.y = 1, with at most max_support handles, in the
/// order of increasing (x, y) coordinate masks.
std::vector<Spine> enumerate_spines(int genus, int max_support);

/// Bounding pair descriptors on genus-1 spines whose sigma value lies in B_2,
/// with every class supported on at most max_support handles.
std::vector<BPMap> enumerate_bp_descriptors(int genus, int max_support);

struct SpineCycleParams {
  int genus = 2;
  int max_support = 1;
  bool include_bp = false;
  Disjointness disjointness = Disjointness::kHandleSupport;
  /// Keep only the first spine of every mod-2 plane; other spines of the
  /// same plane have the same sigma value and the same partners.
  bool one_per_plane = false;
};

/// Candidate descriptor used by the search: a spine twist or a BP map.
struct SearchDescriptor {
  CurveDescriptor curve;
  HandleSet support;
  std::string label;
  /// Set for spine twists.
  std::optional<Spine> spine;
};

/// All descriptors in emission order (spines first, then BP maps).
std::vector<SearchDescriptor> search_descriptors(const SpineCycleParams& params);

/// Calls visit(i, j) for every unordered pair i < j of descriptors admitted
/// by the predicate, in a fixed order. Pairs involving a BP map are only
/// admitted when handle-disjoint. Stops early if visit returns false.
/// When stride > 1 only leading indices i with i % stride == offset are used.
void for_each_disjoint_pair(const std::vector<SearchDescriptor>& descriptors,
                            const std::function<bool(std::size_t, std::size_t)>& visit,
                            std::size_t stride = 1, std::size_t offset = 0,
                            Disjointness disjointness = Disjointness::kHandleSupport);

/// Streams every admitted cycle; swap-symmetric pairs appear once. Each
/// cycle carries the weakest certificate that holds for it.
/// Returns the number of cycles emitted.
std::size_t enumerate_spine_cycles(const SpineCycleParams& params,
                                   const std::function<bool(const AbelianCycle&)>& visit);

}  // namespace bcj
