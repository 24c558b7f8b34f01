#pragma once

// The exterior square of B_2 and its canonical slot indexing.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bcj/boolring.hpp"
#include "bcj/gf2.hpp"

namespace bcj {

/// Slot layout of wedge^2 B_2. Slot of the basis pair (i < j) of B2Basis
/// indices is i*(2d - i - 1)/2 + (j - i - 1), i.e. pairs in lexicographic
/// order. Persisted reports refer to these slot numbers.
class WedgeSpace {
 public:
  explicit WedgeSpace(int genus);

  int genus() const { return genus_; }
  const B2Basis& basis() const { return basis_; }
  /// d = dim B_2.
  std::size_t d() const { return basis_.size(); }
  /// C(d, 2).
  std::size_t dimension() const { return d() * (d() - 1) / 2; }

  std::size_t slot(std::size_t i, std::size_t j) const;
  std::size_t slot_of_monomials(VarMask m1, VarMask m2) const;
  std::pair<std::size_t, std::size_t> pair_of(std::size_t slot) const;
  std::pair<VarMask, VarMask> monomials_of(std::size_t slot) const;
  /// "a1*b1 ^ a2*b2".
  std::string slot_name(std::size_t slot) const;
  bool slot_index_matched(std::size_t slot) const;

 private:
  int genus_;
  B2Basis basis_;
  std::vector<std::size_t> row_start_;
};

class WedgeElem {
 public:
  explicit WedgeElem(int genus);
  WedgeElem(int genus, gf2::BitVec coords);

  int genus() const { return genus_; }
  const gf2::BitVec& coords() const { return coords_; }
  bool is_zero() const { return coords_.none(); }
  std::vector<std::size_t> slots() const { return coords_.set_positions(); }

  WedgeElem& operator+=(const WedgeElem& other);
  friend WedgeElem operator+(WedgeElem lhs, const WedgeElem& rhs) {
    lhs += rhs;
    return lhs;
  }
  bool operator==(const WedgeElem& other) const = default;

 private:
  int genus_;
  gf2::BitVec coords_;
};

/// Basis element m1 ^ m2; zero when m1 == m2.
WedgeElem wedge_monomials(int genus, VarMask m1, VarMask m2);

/// Bilinear, alternating product of two degree <= 2 polynomials. Throws
/// FiltrationError for higher degree inputs.
WedgeElem wedge(const BoolPoly& p, const BoolPoly& q);

/// Same product on B_2 coordinate index lists; used by the search loop.
void wedge_indices(const WedgeSpace& space, const std::vector<std::uint32_t>& p,
                   const std::vector<std::uint32_t>& q, gf2::BitVec& out);

/// Parses "a1*b1 ^ a2*b2 + 1 ^ a3".
WedgeElem parse_wedge(int genus, const std::string& text);
std::string to_string(const WedgeElem& w);

struct Dims {
  int genus = 0;
  std::size_t d = 0;
  std::size_t dim_wedge = 0;
  std::size_t dim_w = 0;
  std::size_t dim_im = 0;
  /// g(2g-2)(2g-3): the both-quadratic, distinct-index index-matched type.
  std::size_t cubic_type = 0;
  /// dim_im / (4 g^3), reported only.
  double lead_ratio = 0.0;
};

/// Dimension bookkeeping; dim_im counted by scanning every basis pair.
Dims dims(int genus);

}  // namespace bcj
