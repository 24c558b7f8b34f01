#include "bcj/serialize.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

#include "bcj/bcjmap.hpp"
#include "bcj/errors.hpp"

namespace bcj::io {

namespace {

const json& require_field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(where + ": missing field '" + key + "'");
  }
  return j.at(key);
}

std::vector<std::int64_t> int_array(const json& j, std::size_t length, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected an integer array");
  if (j.size() != length) {
    throw SchemaError(where + ": expected " + std::to_string(length) + " coordinates, got " +
                      std::to_string(j.size()));
  }
  std::vector<std::int64_t> out;
  out.reserve(length);
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw SchemaError(where + ": coordinates must be integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

int genus_field(const json& j, const std::string& where) {
  const json& g = require_field(j, "genus", where);
  if (!g.is_number_integer()) throw SchemaError(where + ": genus must be an integer");
  const int genus = g.get<int>();
  if (genus < 1 || genus > kMaxGenus) {
    throw SchemaError(where + ": genus " + std::to_string(genus) + " out of range");
  }
  return genus;
}

std::string label_field(const json& j) {
  if (j.is_object() && j.contains("label")) {
    if (!j.at("label").is_string()) throw SchemaError("label must be a string");
    return j.at("label").get<std::string>();
  }
  return {};
}

template <typename Basis, typename Parse>
Basis basis_from_pairs(int genus, const json& pairs, const std::string& where, Parse parse) {
  if (!pairs.is_array()) throw SchemaError(where + ": basis must be an array of [A, B] pairs");
  Basis out{genus, {}};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const json& p = pairs[i];
    const std::string at = where + ": basis pair " + std::to_string(i + 1);
    if (!p.is_array() || p.size() != 2) throw SchemaError(at + " must be [A, B]");
    out.pairs.emplace_back(parse(genus, p[0], at), parse(genus, p[1], at));
  }
  return out;
}

HClass parse_h(int genus, const json& j, const std::string& where) {
  const auto ints = int_array(j, static_cast<std::size_t>(2 * genus), where);
  for (std::int64_t v : ints) {
    if (v != 0 && v != 1) throw SchemaError(where + ": mod-2 coordinates must be 0 or 1");
  }
  return HClass::from_ints(genus, ints);
}

ZHClass parse_z(int genus, const json& j, const std::string& where) {
  return ZHClass(genus, int_array(j, static_cast<std::size_t>(2 * genus), where));
}

}  // namespace

json to_json(const HClass& u) { return u.to_ints(); }
json to_json(const ZHClass& u) { return u.coords(); }
HClass hclass_from_json(int genus, const json& j) { return parse_h(genus, j, "class"); }
ZHClass zhclass_from_json(int genus, const json& j) { return parse_z(genus, j, "class"); }

json to_json(const SubsurfaceBasis& s, const std::string& label) {
  json pairs = json::array();
  for (const auto& [A, B] : s.pairs) pairs.push_back({to_json(A), to_json(B)});
  return {{"genus", s.genus}, {"basis", pairs}, {"label", label}};
}

json to_json(const ZSubsurfaceBasis& s, const std::string& label) {
  json pairs = json::array();
  for (const auto& [A, B] : s.pairs) pairs.push_back({to_json(A), to_json(B)});
  return {{"genus", s.genus}, {"basis", pairs}, {"label", label}};
}

SubsurfaceBasis subsurface_basis_from_json(const json& j) {
  const int g = genus_field(j, "basis");
  return basis_from_pairs<SubsurfaceBasis>(g, require_field(j, "basis", "basis"), "basis", parse_h);
}

ZSubsurfaceBasis zsubsurface_basis_from_json(const json& j) {
  const int g = genus_field(j, "basis");
  return basis_from_pairs<ZSubsurfaceBasis>(g, require_field(j, "basis", "basis"), "basis", parse_z);
}

json to_json(const Spine& s, const std::string& label) {
  return {{"genus", s.x.genus()}, {"spine", {to_json(s.x), to_json(s.y)}}, {"label", label}};
}

Spine spine_from_json(const json& j) {
  const int g = genus_field(j, "spine");
  const json& xy = require_field(j, "spine", "spine");
  if (!xy.is_array() || xy.size() != 2) throw SchemaError("spine: expected [x, y]");
  return Spine{parse_h(g, xy[0], "spine x"), parse_h(g, xy[1], "spine y")};
}

json to_json(const BoolPoly& p) {
  json out = json::array();
  for (VarMask m : p.terms()) {
    json vars = json::array();
    for (VarMask w = m; w != 0; w &= w - 1) vars.push_back(std::countr_zero(w));
    out.push_back(vars);
  }
  return out;
}

BoolPoly bool_poly_from_json(int genus, const json& j) {
  if (!j.is_array()) throw SchemaError("polynomial: expected an array of monomials");
  std::vector<VarMask> monomials;
  for (const auto& m : j) {
    if (!m.is_array()) throw SchemaError("polynomial: monomials must be index arrays");
    VarMask mask = 0;
    for (const auto& v : m) {
      if (!v.is_number_integer()) throw SchemaError("polynomial: variable indices must be integers");
      const int k = v.get<int>();
      if (k < 0 || k >= 2 * genus) {
        throw SchemaError("polynomial: variable index " + std::to_string(k) + " out of range");
      }
      mask |= VarMask{1} << k;
    }
    monomials.push_back(mask);
  }
  return BoolPoly(genus, std::move(monomials));
}

json to_json(const CMPoly& x) {
  json out = json::array();
  for (const auto& [m, c] : x.terms()) {
    json symbols = json::array();
    for (std::uint16_t id : m) {
      const CMSymbol s = cm_symbol_of(x.genus(), id);
      symbols.push_back({s.p, s.q});
    }
    out.push_back({{"monomial", symbols}, {"coeff", c.str()}});
  }
  return out;
}

CMPoly cm_poly_from_json(int genus, const json& j) {
  if (!j.is_array()) throw SchemaError("cm polynomial: expected an array of terms");
  CMPoly out(genus);
  for (const auto& t : j) {
    const json& symbols = require_field(t, "monomial", "cm polynomial term");
    const json& coeff = require_field(t, "coeff", "cm polynomial term");
    if (!symbols.is_array()) throw SchemaError("cm polynomial: monomial must be an array");
    CMMonomial m;
    for (const auto& s : symbols) {
      if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer()) {
        throw SchemaError("cm polynomial: symbols must be [p, q] integer pairs");
      }
      int p = s[0].get<int>();
      int q = s[1].get<int>();
      if (p > q) throw SchemaError("cm polynomial: symbol [p, q] must have p <= q");
      try {
        m.push_back(cm_symbol_id(genus, {p, q}));
      } catch (const DimensionError& e) {
        throw SchemaError(std::string("cm polynomial: ") + e.what());
      }
    }
    std::sort(m.begin(), m.end());
    BigInt c;
    if (coeff.is_number_integer()) {
      c = coeff.get<std::int64_t>();
    } else if (coeff.is_string()) {
      try {
        c = BigInt(coeff.get<std::string>());
      } catch (const std::exception&) {
        throw SchemaError("cm polynomial: bad coefficient '" + coeff.get<std::string>() + "'");
      }
    } else {
      throw SchemaError("cm polynomial: coefficient must be an integer or decimal string");
    }
    out.add_term(std::move(m), c);
  }
  return out;
}

json to_json(const LinkingMatrix& L) { return {{"genus", L.genus()}, {"L", L.entries()}}; }

LinkingMatrix linking_matrix_from_json(const json& j) {
  const json* rows = &j;
  int genus = 0;
  if (j.is_object()) {
    genus = genus_field(j, "linking matrix");
    rows = &require_field(j, "L", "linking matrix");
  }
  if (!rows->is_array() || rows->empty() || rows->size() % 2 != 0) {
    throw SchemaError("linking matrix: expected a 2g x 2g integer array");
  }
  if (genus == 0) genus = static_cast<int>(rows->size() / 2);
  if (rows->size() != static_cast<std::size_t>(2 * genus)) {
    throw SchemaError("linking matrix: genus " + std::to_string(genus) + " needs " +
                      std::to_string(2 * genus) + " rows");
  }
  std::vector<std::vector<std::int64_t>> L;
  for (std::size_t p = 0; p < rows->size(); ++p) {
    L.push_back(int_array((*rows)[p], rows->size(), "linking matrix row " + std::to_string(p)));
  }
  return LinkingMatrix(genus, std::move(L));
}

Catalog catalog_from_json(const json& j) {
  const json* entries = &j;
  Catalog cat;
  cat.genus = 0;
  if (j.is_object()) {
    cat.genus = genus_field(j, "catalog");
    entries = &require_field(j, "entries", "catalog");
  }
  if (!entries->is_array()) throw SchemaError("catalog: entries must be an array");
  for (std::size_t i = 0; i < entries->size(); ++i) {
    const json& e = (*entries)[i];
    std::string where = "catalog entry " + std::to_string(i);
    if (e.is_object() && e.contains("label") && e.at("label").is_string()) {
      where += " ('" + e.at("label").get<std::string>() + "')";
    }
    if (!e.is_object()) throw SchemaError(where + ": expected an object");
    const json& type = require_field(e, "type", where);
    if (!type.is_string()) throw SchemaError(where + ": type must be a string");
    CatalogEntry entry;
    if (type == "separating") {
      entry.type = CatalogEntry::Type::kSeparating;
    } else if (type == "bp") {
      entry.type = CatalogEntry::Type::kBp;
    } else {
      throw SchemaError(where + ": unknown type '" + type.get<std::string>() + "'");
    }
    const json& pairs = require_field(e, "basis", where);
    if (cat.genus == 0) {
      // Infer from the first coordinate array.
      if (!pairs.is_array() || pairs.empty() || !pairs[0].is_array() || pairs[0].empty() ||
          !pairs[0][0].is_array() || pairs[0][0].size() % 2 != 0 || pairs[0][0].empty()) {
        throw SchemaError(where + ": cannot infer genus; add a top-level \"genus\"");
      }
      cat.genus = static_cast<int>(pairs[0][0].size() / 2);
    }
    try {
      entry.label = label_field(e);
      entry.basis = basis_from_pairs<ZSubsurfaceBasis>(cat.genus, pairs, where, parse_z);
      if (entry.type == CatalogEntry::Type::kBp) {
        entry.C = parse_z(cat.genus, require_field(e, "C", where), where + ": C");
      } else if (e.contains("C")) {
        throw SchemaError(where + ": separating entries take no C");
      }
    } catch (const SchemaError&) {
      throw;
    } catch (const Error& err) {
      throw SchemaError(where + ": " + err.what());
    }
    cat.entries.push_back(std::move(entry));
  }
  if (cat.genus == 0) cat.genus = 1;
  return cat;
}

json to_json(const Catalog& c) {
  json entries = json::array();
  for (const auto& e : c.entries) {
    json pairs = json::array();
    for (const auto& [A, B] : e.basis.pairs) pairs.push_back({to_json(A), to_json(B)});
    json j = {{"type", e.type == CatalogEntry::Type::kBp ? "bp" : "separating"},
              {"basis", pairs},
              {"label", e.label}};
    if (e.C) j["C"] = to_json(*e.C);
    entries.push_back(std::move(j));
  }
  return {{"genus", c.genus}, {"entries", entries}};
}

EvalResult eval_entry(const CatalogEntry& e, int genus, std::size_t index) {
  const std::string where =
      "catalog entry " + std::to_string(index) + (e.label.empty() ? "" : " ('" + e.label + "')");
  EvalResult r;
  r.label = e.label.empty() ? "entry " + std::to_string(index) : e.label;
  r.type = e.type == CatalogEntry::Type::kBp ? "bp" : "separating";
  r.sigma = BoolPoly(genus);
  try {
    const SubsurfaceBasis basis = e.basis.mod2();
    if (e.type == CatalogEntry::Type::kBp) {
      r.sigma = sigma(make_bp_map(basis, e.C->mod2()));
    } else {
      r.sigma = sigma(make_separating_twist(basis));
      if (is_symplectic_basis(e.basis)) {
        r.rho = rho_separating(e.basis);
        r.mu_rho = mu(*r.rho);
      }
    }
  } catch (const Error& err) {
    throw SchemaError(where + ": " + err.what());
  }
  return r;
}

json to_json(const EvalResult& r) {
  json j = {{"label", r.label},
            {"type", r.type},
            {"sigma", to_string(r.sigma)},
            {"sigma_monomials", to_json(r.sigma)}};
  if (r.rho) {
    j["rho"] = to_string(*r.rho);
    j["mu_rho"] = to_string(*r.mu_rho);
  }
  return j;
}

json to_json(const Dims& d) {
  return {{"genus", d.genus},          {"d", d.d},
          {"dim_wedge", d.dim_wedge},  {"dim_w", d.dim_w},
          {"dim_im", d.dim_im},        {"cubic_type", d.cubic_type},
          {"lead_ratio", d.lead_ratio}};
}

json to_json(const OrbitReport& r) {
  const WedgeSpace space(r.genus);
  json classes = json::array();
  for (const auto& c : r.classes) {
    json members = json::array();
    for (std::size_t s : c.members) members.push_back(space.slot_name(s));
    classes.push_back({{"label", c.label},
                       {"size", c.members.size()},
                       {"representative", c.representative},
                       {"members", members}});
  }
  return {{"genus", r.genus},
          {"class_count", r.classes.size()},
          {"member_count", r.member_count()},
          {"classes", classes},
          {"errors", r.errors}};
}

json to_json(const ImageReport& r) {
  const CokernelStats& ck = r.cokernel;
  return {
      {"genus", r.params.genus},
      {"parameters",
       {{"max_support", r.params.max_support},
        {"include_families", r.params.include_families},
        {"include_bp", r.params.include_bp},
        {"disjointness", to_string(r.params.disjointness)},
        {"workers", r.params.workers}}},
      {"rank", r.rank},
      {"search_rank", r.search_rank},
      {"codim", r.codim},
      {"dims", to_json(r.dims)},
      {"w_covered", r.w_covered()},
      {"missing", r.missing},
      {"missing_slots", r.missing_slots},
      {"orbit_hits", r.orbit_hits},
      {"counts",
       {{"descriptors", r.descriptors},
        {"cycles", r.cycles_enumerated},
        {"distinct_images", r.distinct_images},
        {"family_elements", r.family_elements},
        {"family_rank_gain", r.family_rank_gain}}},
      {"cokernel",
       {{"cubic_type_formula", ck.cubic_type_formula},
        {"family_span_formula", ck.family_span_formula},
        {"cubic_gap_formula", ck.cubic_gap_formula},
        {"quadratic_bound_formula", ck.quadratic_bound_formula},
        {"cubic_type_slots", ck.cubic_type_slots},
        {"cubic_type_uncovered", ck.cubic_type_uncovered},
        {"four_index_family_rank", ck.four_index_family_rank}}},
      {"timing", {{"elapsed_seconds", r.elapsed_seconds}}},
  };
}

json to_json(const DiagramCheck& c) {
  return {{"name", c.name},
          {"trials", c.trials},
          {"failures", c.failures},
          {"passed", c.passed()},
          {"witnesses", c.witnesses}};
}

json to_json(const DiagramReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"genus", r.genus},
          {"trials", r.trials},
          {"seed", r.seed},
          {"passed", r.passed()},
          {"checks", checks}};
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace bcj::io
