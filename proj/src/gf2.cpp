#include "bcj/gf2.hpp"

#include <algorithm>
#include <bit>

#include "bcj/errors.hpp"

namespace bcj::gf2 {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t length) {
  return (length + kWordBits - 1) / kWordBits;
}
}  // namespace

BitVec::BitVec(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitVec BitVec::unit(std::size_t length, std::size_t pos) {
  BitVec v(length);
  v.set(pos);
  return v;
}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ArgumentError("BitVec::from_string: expected '0' or '1'");
    }
  }
  return v;
}

bool BitVec::test(std::size_t pos) const {
  if (pos >= length_) throw DimensionError("BitVec: position out of range");
  return (words_[pos / kWordBits] >> (pos % kWordBits)) & 1u;
}

void BitVec::set(std::size_t pos, bool value) {
  if (pos >= length_) throw DimensionError("BitVec: position out of range");
  const std::uint64_t mask = std::uint64_t{1} << (pos % kWordBits);
  if (value) {
    words_[pos / kWordBits] |= mask;
  } else {
    words_[pos / kWordBits] &= ~mask;
  }
}

void BitVec::flip(std::size_t pos) {
  if (pos >= length_) throw DimensionError("BitVec: position out of range");
  words_[pos / kWordBits] ^= std::uint64_t{1} << (pos % kWordBits);
}

bool BitVec::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVec::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t BitVec::find_first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return npos;
}

std::vector<std::size_t> BitVec::set_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  require_same_length(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitVec::dot(const BitVec& other) const {
  require_same_length(other);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

std::string BitVec::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

void BitVec::require_same_length(const BitVec& other) const {
  if (length_ != other.length_) {
    throw DimensionError("BitVec: length mismatch (" + std::to_string(length_) + " vs " +
                         std::to_string(other.length_) + ")");
  }
}

std::size_t BitVecHash::operator()(const BitVec& v) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
  for (std::uint64_t w : v.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

SpanBasis::SpanBasis(std::size_t length) : length_(length), row_of_pivot_(length, -1) {}

void SpanBasis::require_length(const BitVec& v) const {
  if (v.size() != length_) {
    throw DimensionError("SpanBasis: vector length " + std::to_string(v.size()) +
                         " does not match ambient dimension " + std::to_string(length_));
  }
}

BitVec SpanBasis::reduce(const BitVec& v) const {
  require_length(v);
  // Rows carry no bits at foreign pivots, so the pivot bits of v decide
  // exactly which rows get eliminated.
  BitVec r = v;
  const auto words = v.words();
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    std::uint64_t w = words[wi];
    while (w != 0) {
      const std::size_t pos = wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
      w &= w - 1;
      const std::int32_t row = row_of_pivot_[pos];
      if (row >= 0) r ^= rows_[static_cast<std::size_t>(row)];
    }
  }
  return r;
}

bool SpanBasis::contains(const BitVec& v) const { return reduce(v).none(); }

bool SpanBasis::contains_unit(std::size_t pos) const {
  if (pos >= length_) throw DimensionError("SpanBasis: position out of range");
  const std::int32_t row = row_of_pivot_[pos];
  return row >= 0 && rows_[static_cast<std::size_t>(row)].count() == 1;
}

bool SpanBasis::insert(const BitVec& v) {
  BitVec r = reduce(v);
  const std::size_t pivot = r.find_first();
  if (pivot == BitVec::npos) return false;

  for (BitVec& row : rows_) {
    if (row.test(pivot)) row ^= r;
  }
  const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto offset = at - pivots_.begin();
  pivots_.insert(at, pivot);
  rows_.insert(rows_.begin() + offset, std::move(r));
  for (std::size_t i = static_cast<std::size_t>(offset); i < pivots_.size(); ++i) {
    row_of_pivot_[pivots_[i]] = static_cast<std::int32_t>(i);
  }
  return true;
}

void SpanBasis::merge(const SpanBasis& other) {
  if (other.length_ != length_) throw DimensionError("SpanBasis::merge: length mismatch");
  for (const BitVec& row : other.rows_) insert(row);
}

std::size_t mat_rank(std::span<const BitVec> rows) {
  if (rows.empty()) return 0;
  SpanBasis basis(rows.front().size());
  for (const BitVec& row : rows) basis.insert(row);
  return basis.rank();
}

}  // namespace bcj::gf2
