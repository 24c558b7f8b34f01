#pragma once

// Boolean (square-free) polynomials over F_2 in the 2g variables
// a1..ag, b1..bg, and the related maps out of homology.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bcj/gf2.hpp"
#include "bcj/surface.hpp"

namespace bcj {

/// Subset of variables; bit k is the variable of homology coordinate k.
/// The empty mask is the constant monomial 1.
using VarMask = std::uint64_t;

int monomial_degree(VarMask m);

/// Canonical monomial order: degree first, then lexicographic on the
/// ascending tuple of variable indices. The constant comes first.
bool monomial_less(VarMask lhs, VarMask rhs);

class BoolMonomial {
 public:
  BoolMonomial(int genus, VarMask mask);

  int genus() const { return genus_; }
  VarMask mask() const { return mask_; }
  int degree() const { return monomial_degree(mask_); }
  bool divides(const BoolMonomial& other) const { return (mask_ & ~other.mask_) == 0; }
  bool operator==(const BoolMonomial& other) const = default;

 private:
  int genus_;
  VarMask mask_;
};

class BoolPoly {
 public:
  explicit BoolPoly(int genus);
  /// Sums the given monomials mod 2 (repeated monomials cancel in pairs).
  BoolPoly(int genus, std::vector<VarMask> monomials);

  static BoolPoly zero(int genus) { return BoolPoly(genus); }
  static BoolPoly one(int genus) { return BoolPoly(genus, {VarMask{0}}); }
  static BoolPoly var(int genus, std::size_t k);
  static BoolPoly monomial(int genus, VarMask mask) { return BoolPoly(genus, {mask}); }

  int genus() const { return genus_; }
  /// Monomials in canonical ascending order.
  const std::vector<VarMask>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool contains(VarMask m) const;
  /// Degree of the top monomial; -1 for the zero polynomial.
  int degree() const;

  BoolPoly& operator+=(const BoolPoly& other);
  friend BoolPoly operator+(BoolPoly lhs, const BoolPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BoolPoly operator*(const BoolPoly& lhs, const BoolPoly& rhs);

  bool operator==(const BoolPoly& other) const = default;

 private:
  int genus_;
  std::vector<VarMask> terms_;
};

BoolPoly poly_add(const BoolPoly& p, const BoolPoly& q);
BoolPoly poly_mul(const BoolPoly& p, const BoolPoly& q);

/// Throws FiltrationError if p has degree above max_degree.
const BoolPoly& require_degree(const BoolPoly& p, int max_degree);

/// Variable name for coordinate k ("a3", "b1").
std::string variable_name(int genus, std::size_t k);
/// "a1*b1" style; "1" for the constant.
std::string monomial_to_string(int genus, VarMask m);
/// Sum of monomials, highest degree first, e.g. "a1*b1 + a2 + 1"; "0" when empty.
std::string to_string(const BoolPoly& p);
BoolPoly parse_bool_poly(int genus, std::string_view text);
VarMask parse_monomial(int genus, std::string_view text);

/// The bar map H -> B: linear part plus the count of intersecting basis
/// pairs (a_i, b_i) inside the support, mod 2.
BoolPoly bar(const HClass& c);

/// Mod-2 self-linking form, stored by its values on the 2g basis classes.
class SelfLinkingForm {
 public:
  SelfLinkingForm(int genus, gf2::BitVec basis_values);
  /// Form number `index` in [0, 2^{2g}): bit k of index is the value on e_k.
  static SelfLinkingForm from_index(int genus, std::uint64_t index);

  int genus() const { return genus_; }
  const gf2::BitVec& basis_values() const { return values_; }
  bool on_basis(std::size_t k) const { return values_.test(k); }
  /// omega(u), extended by omega(u + v) = omega(u) + omega(v) + u.v.
  bool operator()(const HClass& u) const;

 private:
  int genus_;
  gf2::BitVec values_;
};

/// Algebra homomorphism B -> F_2 sending each variable to omega(e_k).
bool evaluate(const BoolPoly& p, const SelfLinkingForm& omega);

/// 2g x 2g matrix over F_2 stored by columns (column k is M e_k).
class SpMatrix {
 public:
  SpMatrix(int genus, std::vector<HClass> columns);

  static SpMatrix identity(int genus);
  /// a_i <-> b_i.
  static SpMatrix handle_swap(int genus, int handle);
  /// a_i <-> a_j, b_i <-> b_j.
  static SpMatrix handle_transposition(int genus, int i, int j);
  /// x -> x + (x.v) v.
  static SpMatrix transvection(const HClass& v);

  int genus() const { return genus_; }
  const HClass& column(std::size_t k) const { return columns_.at(k); }
  HClass apply(const HClass& u) const;
  /// (*this) * rhs: apply rhs first.
  SpMatrix operator*(const SpMatrix& rhs) const;
  /// M^T J M == J over F_2.
  bool is_symplectic() const;

  bool operator==(const SpMatrix& other) const = default;

 private:
  int genus_;
  std::vector<HClass> columns_;
};

/// Algebra endomorphism of B sending each variable e_k to bar(M e_k).
/// Satisfies substitute_sp(M, bar(c)) == bar(M c) and
/// substitute_sp(M2, substitute_sp(M1, p)) == substitute_sp(M2 * M1, p).
/// Throws MatrixError unless M is symplectic.
BoolPoly substitute_sp(const SpMatrix& m, const BoolPoly& p);

/// Canonical ordered basis of B_2: 1, a1..ag, b1..bg, then the degree-2
/// monomials lexicographically by (lower variable, higher variable).
class B2Basis {
 public:
  explicit B2Basis(int genus);

  int genus() const { return genus_; }
  std::size_t size() const { return monomials_.size(); }
  VarMask operator[](std::size_t index) const { return monomials_[index]; }
  const std::vector<VarMask>& monomials() const { return monomials_; }
  /// Throws FiltrationError for degree > 2.
  std::size_t index_of(VarMask m) const;

 private:
  int genus_;
  std::vector<VarMask> monomials_;
};

/// 2g^2 + g + 1.
std::size_t b2_dimension(int genus);
std::size_t b2_index(int genus, VarMask m);
inline B2Basis b2_basis(int genus) { return B2Basis(genus); }

/// Coordinates of a degree <= 2 polynomial in the B2Basis order.
gf2::BitVec b2_coords(const BoolPoly& p);

}  // namespace bcj
