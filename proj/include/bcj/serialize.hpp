#pragma once

// JSON encodings shared by the CLI, reports and tests. Classes are integer
// arrays of length 2g in coordinate order a1..ag, b1..bg; BoolPoly is an
// array of monomials, each an ascending array of variable indices.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bcj/casson_morita.hpp"
#include "bcj/orbits.hpp"
#include "bcj/search.hpp"
#include "bcj/wedge.hpp"

namespace bcj::io {

using nlohmann::json;

inline constexpr const char* kToolName = "bcj";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

json to_json(const HClass& u);
json to_json(const ZHClass& u);
/// Entries must be 0 or 1.
HClass hclass_from_json(int genus, const json& j);
ZHClass zhclass_from_json(int genus, const json& j);

/// {"genus", "basis": [[A, B], ...], "label"}.
json to_json(const SubsurfaceBasis& s, const std::string& label = {});
json to_json(const ZSubsurfaceBasis& s, const std::string& label = {});
SubsurfaceBasis subsurface_basis_from_json(const json& j);
ZSubsurfaceBasis zsubsurface_basis_from_json(const json& j);

/// {"genus", "spine": [x, y], "label"}.
json to_json(const Spine& s, const std::string& label = {});
Spine spine_from_json(const json& j);

json to_json(const BoolPoly& p);
BoolPoly bool_poly_from_json(int genus, const json& j);

/// [{"monomial": [[p, q], ...], "coeff": "<decimal>"}, ...].
json to_json(const CMPoly& x);
CMPoly cm_poly_from_json(int genus, const json& j);

/// {"genus", "L": [[...], ...]}; a bare 2g x 2g array is also accepted.
json to_json(const LinkingMatrix& L);
/// Throws SchemaError on shape problems and ConsistencyError on L^T - L != J.
LinkingMatrix linking_matrix_from_json(const json& j);

struct CatalogEntry {
  enum class Type { kSeparating, kBp };
  Type type = Type::kSeparating;
  ZSubsurfaceBasis basis;
  std::optional<ZHClass> C;
  std::string label;
};

struct Catalog {
  int genus = 1;
  std::vector<CatalogEntry> entries;
};

/// {"genus": g, "entries": [{"type": "separating"|"bp", "basis": [[A, B], ...],
/// "C": [...], "label": "..."}]}, or a bare entry array (genus inferred from
/// the first class). Throws SchemaError naming the offending entry.
Catalog catalog_from_json(const json& j);
json to_json(const Catalog& c);

/// Rendered values for one entry. Throws SchemaError naming the entry when
/// the data is not a valid separating or bounding pair descriptor.
struct EvalResult {
  std::string label;
  std::string type;
  BoolPoly sigma{1};
  /// Only for separating entries whose basis is integrally symplectic.
  std::optional<CMPoly> rho;
  std::optional<BoolPoly> mu_rho;
};
EvalResult eval_entry(const CatalogEntry& e, int genus, std::size_t index);
json to_json(const EvalResult& r);

json to_json(const Dims& d);
json to_json(const OrbitReport& r);
json to_json(const ImageReport& r);
json to_json(const DiagramCheck& c);
json to_json(const DiagramReport& r);

/// 64-bit FNV-1a, used to fingerprint input files in report manifests.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

/// Compact, sorted-key serialization with a trailing newline; identical
/// inputs give byte-identical output.
std::string dump(const json& j);

}  // namespace bcj::io
