#pragma once

// Homology model of the genus-g surface with one boundary component.
//
// Coordinates follow a fixed convention used by every other module:
// position k in [0, g) is a_{k+1}, position g + k is b_{k+1}. Handle
// indices exposed to users are 1-based (a1, b1, ...).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcj/gf2.hpp"

namespace bcj {

/// Largest genus supported; monomials are packed into 64-bit masks.
inline constexpr int kMaxGenus = 32;

void require_genus(int g);
void require_same_genus(int g1, int g2, const char* where);

/// Mod-2 first homology class.
class HClass {
 public:
  explicit HClass(int genus);
  HClass(int genus, gf2::BitVec coords);

  static HClass a(int genus, int handle);
  static HClass b(int genus, int handle);
  /// Builds from 2g integer coordinates, reduced mod 2.
  static HClass from_ints(int genus, const std::vector<std::int64_t>& coords);
  /// Bit k of mask is coordinate k.
  static HClass from_mask(int genus, std::uint64_t mask);

  int genus() const { return genus_; }
  const gf2::BitVec& coords() const { return coords_; }
  bool coeff(std::size_t k) const { return coords_.test(k); }
  bool is_zero() const { return coords_.none(); }
  std::uint64_t mask() const;
  std::vector<std::int64_t> to_ints() const;

  HClass& operator+=(const HClass& other);
  friend HClass operator+(HClass lhs, const HClass& rhs) {
    lhs += rhs;
    return lhs;
  }
  bool operator==(const HClass& other) const = default;

 private:
  int genus_;
  gf2::BitVec coords_;
};

/// Integral first homology class.
class ZHClass {
 public:
  explicit ZHClass(int genus);
  ZHClass(int genus, std::vector<std::int64_t> coords);

  static ZHClass a(int genus, int handle);
  static ZHClass b(int genus, int handle);

  int genus() const { return genus_; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::int64_t coeff(std::size_t k) const { return coords_.at(k); }
  HClass mod2() const;

  ZHClass& operator+=(const ZHClass& other);
  friend ZHClass operator+(ZHClass lhs, const ZHClass& rhs) {
    lhs += rhs;
    return lhs;
  }
  ZHClass scaled(std::int64_t n) const;
  bool operator==(const ZHClass& other) const = default;

 private:
  int genus_;
  std::vector<std::int64_t> coords_;
};

/// Mod-2 intersection pairing: a_i . b_i = 1, all other basis pairs 0.
int intersect(const HClass& u, const HClass& v);
/// Integral pairing with a_i . b_i = +1 = -(b_i . a_i).
std::int64_t intersect(const ZHClass& u, const ZHClass& v);

/// Set of 1-based handle indices, packed as a bit mask (bit i-1 for handle i).
class HandleSet {
 public:
  HandleSet() = default;
  explicit HandleSet(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits() const { return bits_; }
  bool contains(int handle) const { return (bits_ >> (handle - 1)) & 1u; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool disjoint(const HandleSet& other) const { return (bits_ & other.bits_) == 0; }
  std::vector<int> handles() const;

  HandleSet operator|(const HandleSet& other) const { return HandleSet(bits_ | other.bits_); }
  bool operator==(const HandleSet& other) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Handles on which u has a nonzero a- or b-coefficient.
HandleSet support(const HClass& u);
HandleSet support(const ZHClass& u);

/// A pair of classes meeting once mod 2; the spine of a genus-1 separating
/// curve.
struct Spine {
  HClass x;
  HClass y;

  HandleSet support() const;
  bool operator==(const Spine& other) const = default;
};

/// Throws SpineError unless x . y = 1.
Spine make_spine(const HClass& x, const HClass& y);

struct SpinePair {
  int genus;
  Spine first;
  Spine second;
  std::string label;
};

/// Conservative disjointness: true iff the two spines use disjoint handles.
/// Throws SpineError if either spine is invalid.
bool spines_disjointly_realizable(const Spine& s1, const Spine& s2);

/// True iff span{x, y} and span{x', y'} are orthogonal under the mod-2
/// intersection form. Such a pair of planes extends to a symplectic basis,
/// which lifts to Sp(2g, Z) and hence to a mapping class carrying two
/// standard disjoint spines onto curves realizing the pair. Implied by
/// spines_disjointly_realizable. Throws SpineError on invalid spines.
bool spines_orthogonal(const Spine& s1, const Spine& s2);

/// Symplectic basis (A_1, B_1, ..., A_h, B_h) of a subsurface.
struct SubsurfaceBasis {
  int genus = 1;
  std::vector<std::pair<HClass, HClass>> pairs;

  std::size_t subsurface_genus() const { return pairs.size(); }
  HandleSet support() const;
  bool operator==(const SubsurfaceBasis& other) const = default;
};

struct ZSubsurfaceBasis {
  int genus = 1;
  std::vector<std::pair<ZHClass, ZHClass>> pairs;

  std::size_t subsurface_genus() const { return pairs.size(); }
  HandleSet support() const;
  SubsurfaceBasis mod2() const;
  bool operator==(const ZSubsurfaceBasis& other) const = default;
};

/// Outcome of a symplectic-basis check; diagnostic names the first violation.
struct BasisCheck {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

BasisCheck is_symplectic_basis(const SubsurfaceBasis& s);
BasisCheck is_symplectic_basis(const ZSubsurfaceBasis& s);

/// Standard basis ((a_i, b_i) for i in handles).
SubsurfaceBasis standard_basis(int genus, const std::vector<int>& handles);
ZSubsurfaceBasis standard_zbasis(int genus, const std::vector<int>& handles);

/// Elementary symplectic moves on a mod-2 basis (0-based pair indices).
enum class RebaseMove {
  kSwap,       // (A_i, B_i) -> (B_i, A_i)
  kShear,      // A_i -> A_i + B_i
  kCrossAdd,   // A_i -> A_i + A_j, B_j -> B_j + B_i
  kCrossDual,  // A_i -> A_i + B_j, A_j -> A_j + B_i
  kPermute,    // exchange pairs i and j
};

SubsurfaceBasis apply_rebase_move(const SubsurfaceBasis& s, RebaseMove move, std::size_t i,
                                  std::size_t j = 0);

/// Random sequence of elementary moves, deterministic per seed. The result
/// spans the same subspace and is again symplectic.
SubsurfaceBasis random_symplectic_rebase(const SubsurfaceBasis& s, std::uint64_t seed,
                                         int num_moves = 24);

/// "a1+b2" style rendering; "0" for the zero class.
std::string to_string(const HClass& u);
std::string to_string(const ZHClass& u);
/// Parses "a1+b2", "0", and for ZHClass signed multiples such as "2a1-b3".
HClass parse_hclass(int genus, const std::string& text);
ZHClass parse_zhclass(int genus, const std::string& text);

}  // namespace bcj
