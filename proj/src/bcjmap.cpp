#include "bcj/bcjmap.hpp"

#include "bcj/errors.hpp"

namespace bcj {

namespace {

void require_valid(const SubsurfaceBasis& basis, const char* where) {
  if (auto check = is_symplectic_basis(basis); !check) {
    throw BasisError(std::string(where) + ": " + check.diagnostic);
  }
}

BoolPoly sum_of_products(const SubsurfaceBasis& basis) {
  BoolPoly acc(basis.genus);
  for (const auto& [a, b] : basis.pairs) acc += bar(a) * bar(b);
  return acc;
}

}  // namespace

SeparatingTwist make_separating_twist(SubsurfaceBasis basis, std::string label) {
  require_valid(basis, "separating twist");
  return SeparatingTwist{std::move(basis), std::move(label)};
}

BPMap make_bp_map(SubsurfaceBasis basis, HClass C, std::string label) {
  require_valid(basis, "bounding pair map");
  require_same_genus(basis.genus, C.genus(), "bounding pair map");
  for (std::size_t i = 0; i < basis.pairs.size(); ++i) {
    if (intersect(C, basis.pairs[i].first) != 0 || intersect(C, basis.pairs[i].second) != 0) {
      throw GeometryError("bounding pair map: C = " + to_string(C) +
                          " is not orthogonal to pair " + std::to_string(i + 1) +
                          " of the subsurface basis");
    }
  }
  return BPMap{std::move(basis), std::move(C), std::move(label)};
}

BoolPoly sigma(const SeparatingTwist& t) {
  require_valid(t.basis, "sigma");
  return sum_of_products(t.basis);
}

BoolPoly sigma(const BPMap& m) {
  // Revalidate: the struct is an aggregate and may not come from make_bp_map.
  const BPMap& checked = make_bp_map(m.basis, m.C, m.label);
  return sum_of_products(checked.basis) * (bar(checked.C) + BoolPoly::one(checked.C.genus()));
}

BoolPoly sigma_spine(const Spine& s) {
  if (intersect(s.x, s.y) != 1) {
    throw SpineError("invalid spine (" + to_string(s.x) + ", " + to_string(s.y) + ")");
  }
  return bar(s.x) * bar(s.y);
}

bool is_index_matched(int genus, VarMask m1, VarMask m2) {
  if (m1 == m2) throw ArgumentError("is_index_matched: monomials must differ");
  if (monomial_degree(m1) > 2 || monomial_degree(m2) > 2) {
    throw FiltrationError("is_index_matched: monomials must have degree <= 2");
  }
  const VarMask a_part = genus >= 32 ? ~std::uint32_t{0} : (VarMask{1} << genus) - 1;
  const VarMask a1 = m1 & a_part;
  const VarMask a2 = m2 & a_part;
  const VarMask b1 = (m1 >> genus) & a_part;
  const VarMask b2 = (m2 >> genus) & a_part;
  return (a1 & b2) != 0 || (a2 & b1) != 0;
}

}  // namespace bcj
