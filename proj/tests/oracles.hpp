#pragma once

// Independent reference implementations used only by tests. They share no
// code with the library beyond plain integer masks, and trade speed for
// obviousness.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// Rank of small F_2 row sets by counting the distinct XOR combinations.
inline std::size_t span_rank_by_enumeration(const std::vector<std::uint64_t>& rows) {
  std::set<std::uint64_t> span{0};
  for (std::uint64_t r : rows) {
    std::set<std::uint64_t> next = span;
    for (std::uint64_t s : span) next.insert(s ^ r);
    span = std::move(next);
  }
  std::size_t rank = 0;
  while ((std::size_t{1} << rank) < span.size()) ++rank;
  return rank;
}

// Gaussian elimination with pivot = highest set bit, i.e. a different
// pivoting rule from the library.
inline std::size_t rank_high_pivot(std::vector<std::vector<std::uint64_t>> rows) {
  std::size_t rank = 0;
  const std::size_t words = rows.empty() ? 0 : rows[0].size();
  for (std::size_t w = words; w-- > 0;) {
    for (int bit = 63; bit >= 0; --bit) {
      const std::uint64_t m = std::uint64_t{1} << bit;
      auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                             [&](const auto& r) { return (r[w] & m) != 0; });
      if (it == rows.end()) continue;
      std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), it);
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (k != rank && (rows[k][w] & m)) {
          for (std::size_t x = 0; x < words; ++x) rows[k][x] ^= rows[rank][x];
        }
      }
      ++rank;
    }
  }
  return rank;
}

// Square-free polynomial as a set of monomial masks.
using Poly = std::set<std::uint64_t>;

inline Poly add(const Poly& p, const Poly& q) {
  Poly out = p;
  for (auto m : q) {
    if (!out.erase(m)) out.insert(m);
  }
  return out;
}

inline Poly mul(const Poly& p, const Poly& q) {
  Poly out;
  for (auto a : p) {
    for (auto b : q) {
      const auto m = a | b;
      if (!out.erase(m)) out.insert(m);
    }
  }
  return out;
}

inline int pairing(int g, std::uint64_t u, std::uint64_t v) {
  int s = 0;
  for (int i = 0; i < g; ++i) {
    s ^= static_cast<int>(((u >> i) & 1) & ((v >> (g + i)) & 1));
    s ^= static_cast<int>(((u >> (g + i)) & 1) & ((v >> i) & 1));
  }
  return s;
}

// bar(u) built up one coordinate at a time from bar(x + e) = bar(x) + e + x.e.
inline Poly bar(int g, std::uint64_t u) {
  Poly p;
  std::uint64_t x = 0;
  for (int k = 0; k < 2 * g; ++k) {
    if (!((u >> k) & 1)) continue;
    const std::uint64_t e = std::uint64_t{1} << k;
    p = add(p, Poly{e});
    if (pairing(g, x, e)) p = add(p, Poly{0});
    x |= e;
  }
  return p;
}

// omega(u) built the same way from the basis values.
inline int omega(int g, std::uint64_t values, std::uint64_t u) {
  int w = 0;
  std::uint64_t x = 0;
  for (int k = 0; k < 2 * g; ++k) {
    if (!((u >> k) & 1)) continue;
    const std::uint64_t e = std::uint64_t{1} << k;
    w ^= static_cast<int>((values >> k) & 1) ^ pairing(g, x, e);
    x |= e;
  }
  return w;
}

inline int evaluate(const Poly& p, std::uint64_t values) {
  int s = 0;
  for (auto m : p) s ^= ((m & ~values) == 0) ? 1 : 0;
  return s;
}

// Monomials of degree <= 2 in 2g variables, any order.
inline std::vector<std::uint64_t> b2_monomials(int g) {
  std::vector<std::uint64_t> out{0};
  const int n = 2 * g;
  for (int k = 0; k < n; ++k) out.push_back(std::uint64_t{1} << k);
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) out.push_back((std::uint64_t{1} << p) | (std::uint64_t{1} << q));
  }
  return out;
}

// a_i x ^ b_i y: some handle has a_i in one factor and b_i in the other.
inline bool index_matched(int g, std::uint64_t m1, std::uint64_t m2) {
  for (int i = 0; i < g; ++i) {
    const std::uint64_t a = std::uint64_t{1} << i;
    const std::uint64_t b = std::uint64_t{1} << (g + i);
    if (((m1 & a) && (m2 & b)) || ((m1 & b) && (m2 & a))) return true;
  }
  return false;
}

struct PairCounts {
  std::size_t total = 0;
  std::size_t matched = 0;
};

inline PairCounts count_pairs(int g) {
  const auto mons = b2_monomials(g);
  PairCounts c;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    for (std::size_t j = i + 1; j < mons.size(); ++j) {
      ++c.total;
      if (index_matched(g, mons[i], mons[j])) ++c.matched;
    }
  }
  return c;
}

}  // namespace oracle
