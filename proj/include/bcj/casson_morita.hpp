#pragma once

// The integral Casson-Morita algebra: commutative Z-algebra on symbols
// l(u, v) subject to l(v, u) = l(u, v) + u.v and bilinearity. Elements are
// stored in normal form over the ordered symbols l(e_p, e_q), p <= q.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bcj/boolring.hpp"
#include "bcj/surface.hpp"

namespace bcj {

using BigInt = boost::multiprecision::cpp_int;

/// l(e_p, e_q) with p <= q in coordinate order a1..ag, b1..bg.
struct CMSymbol {
  int p = 0;
  int q = 0;
  auto operator<=>(const CMSymbol&) const = default;
};

/// 2g^2 + g.
std::size_t cm_symbol_count(int genus);
/// Dense id of a symbol; ids follow the (p, q) lexicographic order.
std::uint16_t cm_symbol_id(int genus, CMSymbol s);
CMSymbol cm_symbol_of(int genus, std::uint16_t id);
/// "l(a1,b2)".
std::string cm_symbol_name(int genus, CMSymbol s);

/// Sorted multiset of symbol ids; empty is the unit monomial.
using CMMonomial = std::vector<std::uint16_t>;

class CMPoly {
 public:
  explicit CMPoly(int genus) : genus_(genus) {}
  static CMPoly constant(int genus, BigInt c);
  static CMPoly symbol(int genus, CMSymbol s);

  int genus() const { return genus_; }
  const std::map<CMMonomial, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest number of symbols in a monomial; -1 for zero.
  int degree() const;
  /// Adds c * m, dropping the entry if it cancels.
  void add_term(CMMonomial m, const BigInt& c);

  CMPoly& operator+=(const CMPoly& other);
  CMPoly& operator-=(const CMPoly& other);
  CMPoly operator-() const;
  friend CMPoly operator+(CMPoly lhs, const CMPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend CMPoly operator-(CMPoly lhs, const CMPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend CMPoly operator*(const CMPoly& lhs, const CMPoly& rhs);
  CMPoly scaled(const BigInt& c) const;
  bool operator==(const CMPoly& other) const = default;

 private:
  int genus_;
  std::map<CMMonomial, BigInt> terms_;
};

CMPoly cm_add(const CMPoly& x, const CMPoly& y);
CMPoly cm_mul(const CMPoly& x, const CMPoly& y);

/// l(u, v) expanded bilinearly, with every l(e_p, e_q), p > q, rewritten as
/// l(e_q, e_p) + e_q.e_p.
CMPoly cm_generator(const ZHClass& u, const ZHClass& v);

/// Morita's expression for the twist about the separating curve cutting off
/// a subsurface with integral symplectic basis (A_i, B_i):
///   -sum_i [l(A_i,A_i) l(B_i,B_i) - l(A_i,B_i) l(B_i,A_i)]
///   - 2 sum_{i<j} [l(A_i,A_j) l(B_i,B_j) - l(A_i,B_j) l(A_j,B_i)].
/// Throws BasisError on a non-symplectic basis.
CMPoly rho_separating(const ZSubsurfaceBasis& basis);

/// Reduction to B: l(a_i,a_i) -> a_i, l(b_i,b_i) -> b_i, every other
/// normal-form symbol -> 0, coefficients mod 2.
BoolPoly mu(const CMPoly& x);

/// Integer linking data, L[p][q] = lk(e_p, e_q^+).
class LinkingMatrix {
 public:
  /// Throws ConsistencyError naming the first (p, q) with
  /// L[q][p] - L[p][q] != e_p.e_q, or DimensionError on a bad shape.
  LinkingMatrix(int genus, std::vector<std::vector<std::int64_t>> entries);
  /// Diagonal 0, L[b_i][a_i] = 1, everything else 0.
  static LinkingMatrix standard_model(int genus);
  /// standard_model plus a random symmetric matrix with entries in
  /// [-bound, bound].
  static LinkingMatrix random_valid(int genus, std::uint64_t seed, std::int64_t bound = 3);

  int genus() const { return genus_; }
  std::int64_t operator()(std::size_t p, std::size_t q) const { return entries_[p][q]; }
  const std::vector<std::vector<std::int64_t>>& entries() const { return entries_; }

 private:
  int genus_;
  std::vector<std::vector<std::int64_t>> entries_;
};

/// Substitutes l(e_p, e_q) -> L[p][q].
BigInt epsilon(const LinkingMatrix& L, const CMPoly& x);
/// Evaluates p at the self-linking form u -> u^T L u mod 2.
bool selflink_eval(const LinkingMatrix& L, const BoolPoly& p);

/// "-l(a1,a1)*l(b1,b1) + l(a1,b1)^2 + l(a1,b1)"; "0" when empty.
std::string to_string(const CMPoly& x);

/// Random integral symplectic basis of a genus-h subsurface: the standard
/// basis on h random handles moved by `moves` random integral transvections
/// x -> x + (x.v) v with small v.
ZSubsurfaceBasis random_integral_basis(int genus, int h, std::uint64_t seed, int moves = 4);

/// Applies the integral transvection x -> x + (x.v) v to every class.
ZSubsurfaceBasis transvect(const ZSubsurfaceBasis& s, const ZHClass& v);

struct DiagramCheck {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// At most a few failing inputs, rendered as text.
  std::vector<std::string> witnesses;
  bool passed() const { return failures == 0; }
};

struct DiagramReport {
  int genus = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<DiagramCheck> checks;
  bool passed() const;
};

/// Right square for a fixed linking matrix over `trials` random curves.
DiagramCheck right_square_check(const LinkingMatrix& L, std::size_t trials, std::uint64_t seed);

/// (a) mu(rho(T_c)) == sigma(T_c); (b) mu(l(u,u)) == bar(u mod 2);
/// (c) epsilon(L, rho(T_c)) mod 2 == selflink_eval(L, sigma(T_c));
/// (d) mu(rho f) ^ mu(rho g) == sigma f ^ sigma g on disjoint pairs.
/// With exhaustive_mu, (b) runs over all 2^{2g} classes with 0/1 lifts.
DiagramReport verify_diagrams(int genus, std::size_t trials, std::uint64_t seed,
                              bool exhaustive_mu = false);

}  // namespace bcj
