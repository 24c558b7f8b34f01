#pragma once

// Bit-packed vectors over F_2 and an incrementally maintained row space.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bcj::gf2 {

/// Fixed-length vector over F_2 packed into 64-bit words. Bit k lives in
/// word k / 64 at position k % 64; bits past size() are always zero.
class BitVec {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVec() = default;
  explicit BitVec(std::size_t length);

  static BitVec unit(std::size_t length, std::size_t pos);
  /// Parses a string of '0'/'1' characters, position 0 first.
  static BitVec from_string(std::string_view bits);

  std::size_t size() const { return length_; }
  bool test(std::size_t pos) const;
  void set(std::size_t pos, bool value = true);
  void flip(std::size_t pos);

  bool none() const;
  bool any() const { return !none(); }
  std::size_t count() const;
  /// Lowest set position, or npos for the zero vector.
  std::size_t find_first() const;
  std::vector<std::size_t> set_positions() const;

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec lhs, const BitVec& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  /// Parity of the coordinatewise product.
  bool dot(const BitVec& other) const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::string to_string() const;

  bool operator==(const BitVec& other) const = default;

 private:
  void require_same_length(const BitVec& other) const;

  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const noexcept;
};

/// Row space of a set of vectors, kept in fully reduced row-echelon form.
/// The pivot of a row is its lowest set position; no row has a set bit at
/// the pivot of another row, and rows are sorted by pivot.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t length);

  std::size_t length() const { return length_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<BitVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the span. Returns true iff v was outside the previous span.
  bool insert(const BitVec& v);
  bool contains(const BitVec& v) const;
  /// Remainder of v after elimination against the rows.
  BitVec reduce(const BitVec& v) const;
  /// Fast membership test for the standard basis vector e_pos.
  bool contains_unit(std::size_t pos) const;
  /// Inserts every row of other; the result is independent of merge order.
  void merge(const SpanBasis& other);

 private:
  void require_length(const BitVec& v) const;

  std::size_t length_;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
  // pivot position -> row index, or -1
  std::vector<std::int32_t> row_of_pivot_;
};

/// Rank over F_2 of a list of equal-length rows.
std::size_t mat_rank(std::span<const BitVec> rows);

}  // namespace bcj::gf2
