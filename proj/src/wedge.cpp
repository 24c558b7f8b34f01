#include "bcj/wedge.hpp"

#include <algorithm>

#include "bcj/bcjmap.hpp"
#include "bcj/errors.hpp"

namespace bcj {

WedgeSpace::WedgeSpace(int genus) : genus_(genus), basis_(genus) {
  const std::size_t n = basis_.size();
  row_start_.resize(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) row_start_[i + 1] = row_start_[i] + (n - i - 1);
}

std::size_t WedgeSpace::slot(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (i == j || j >= d()) throw ArgumentError("WedgeSpace::slot: need distinct in-range indices");
  return row_start_[i] + (j - i - 1);
}

std::size_t WedgeSpace::slot_of_monomials(VarMask m1, VarMask m2) const {
  return slot(basis_.index_of(m1), basis_.index_of(m2));
}

std::pair<std::size_t, std::size_t> WedgeSpace::pair_of(std::size_t s) const {
  if (s >= dimension()) throw ArgumentError("WedgeSpace::pair_of: slot out of range");
  const auto it = std::upper_bound(row_start_.begin(), row_start_.end(), s);
  const auto i = static_cast<std::size_t>(it - row_start_.begin()) - 1;
  return {i, i + 1 + (s - row_start_[i])};
}

std::pair<VarMask, VarMask> WedgeSpace::monomials_of(std::size_t s) const {
  const auto [i, j] = pair_of(s);
  return {basis_[i], basis_[j]};
}

std::string WedgeSpace::slot_name(std::size_t s) const {
  const auto [m1, m2] = monomials_of(s);
  return monomial_to_string(genus_, m1) + " ^ " + monomial_to_string(genus_, m2);
}

bool WedgeSpace::slot_index_matched(std::size_t s) const {
  const auto [m1, m2] = monomials_of(s);
  return is_index_matched(genus_, m1, m2);
}

WedgeElem::WedgeElem(int genus) : genus_(genus), coords_(WedgeSpace(genus).dimension()) {}

WedgeElem::WedgeElem(int genus, gf2::BitVec coords) : genus_(genus), coords_(std::move(coords)) {
  if (coords_.size() != WedgeSpace(genus).dimension()) {
    throw DimensionError("WedgeElem: coordinate length does not match genus");
  }
}

WedgeElem& WedgeElem::operator+=(const WedgeElem& other) {
  require_same_genus(genus_, other.genus_, "WedgeElem::operator+");
  coords_ ^= other.coords_;
  return *this;
}

WedgeElem wedge_monomials(int genus, VarMask m1, VarMask m2) {
  const WedgeSpace space(genus);
  gf2::BitVec v(space.dimension());
  if (m1 != m2) v.set(space.slot_of_monomials(m1, m2));
  return WedgeElem(genus, std::move(v));
}

WedgeElem wedge(const BoolPoly& p, const BoolPoly& q) {
  require_same_genus(p.genus(), q.genus(), "wedge");
  if (p.degree() > 2 || q.degree() > 2) {
    throw FiltrationError(
        "wedge: factors must lie in B_2; classes from the Tor summand are not detectable here");
  }
  const WedgeSpace space(p.genus());
  gf2::BitVec v(space.dimension());
  for (VarMask m1 : p.terms()) {
    const std::size_t i = space.basis().index_of(m1);
    for (VarMask m2 : q.terms()) {
      const std::size_t j = space.basis().index_of(m2);
      if (i != j) v.flip(space.slot(i, j));
    }
  }
  return WedgeElem(p.genus(), std::move(v));
}

void wedge_indices(const WedgeSpace& space, const std::vector<std::uint32_t>& p,
                   const std::vector<std::uint32_t>& q, gf2::BitVec& out) {
  for (std::uint32_t i : p) {
    for (std::uint32_t j : q) {
      if (i != j) out.flip(space.slot(i, j));
    }
  }
}

WedgeElem parse_wedge(int genus, const std::string& text) {
  const WedgeSpace space(genus);
  gf2::BitVec v(space.dimension());
  std::size_t pos = 0;
  while (pos <= text.size()) {
    // Terms are separated by '+' at the top level; each term is "m1 ^ m2".
    const std::size_t plus = text.find('+', pos);
    std::string term = text.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    term.erase(0, term.find_first_not_of(" \t"));
    term.erase(term.find_last_not_of(" \t") + 1);
    const std::size_t caret = term.find('^');
    if (caret == std::string::npos) {
      if (term != "0") throw SchemaError("cannot parse wedge term '" + term + "'");
      if (plus == std::string::npos) break;
      pos = plus + 1;
      continue;
    }
    const VarMask m1 = parse_monomial(genus, term.substr(0, caret));
    const VarMask m2 = parse_monomial(genus, term.substr(caret + 1));
    if (m1 != m2) v.flip(space.slot_of_monomials(m1, m2));
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return WedgeElem(genus, std::move(v));
}

std::string to_string(const WedgeElem& w) {
  if (w.is_zero()) return "0";
  const WedgeSpace space(w.genus());
  std::string out;
  for (std::size_t s : w.slots()) {
    if (!out.empty()) out += " + ";
    out += space.slot_name(s);
  }
  return out;
}

Dims dims(int genus) {
  const WedgeSpace space(genus);
  Dims out;
  out.genus = genus;
  out.d = space.d();
  out.dim_wedge = space.dimension();
  const auto& basis = space.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (is_index_matched(genus, basis[i], basis[j])) ++out.dim_im;
    }
  }
  out.dim_w = out.dim_wedge - out.dim_im;
  const auto g = static_cast<std::size_t>(genus);
  out.cubic_type = g * (2 * g - 2) * (g >= 2 ? 2 * g - 3 : 0);
  out.lead_ratio = static_cast<double>(out.dim_im) / (4.0 * static_cast<double>(g * g * g));
  return out;
}

}  // namespace bcj
