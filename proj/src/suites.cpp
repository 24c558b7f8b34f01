#include "bcj/suites.hpp"

#include <bit>
#include <functional>

#include "bcj/cycles.hpp"
#include "bcj/errors.hpp"

namespace bcj {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

void record(DiagramCheck& check, bool ok, const std::function<std::string()>& witness) {
  ++check.trials;
  if (ok) return;
  ++check.failures;
  if (check.witnesses.size() < kMaxWitnesses) check.witnesses.push_back(witness());
}

std::string describe(const SubsurfaceBasis& s) {
  std::string out = "[";
  for (const auto& [A, B] : s.pairs) {
    if (out.size() > 1) out += "; ";
    out += "(" + to_string(A) + ", " + to_string(B) + ")";
  }
  return out + "]";
}

std::string describe(const SpMatrix& m) {
  std::string out = "cols[";
  for (std::size_t k = 0; k < static_cast<std::size_t>(2 * m.genus()); ++k) {
    if (k > 0) out += ", ";
    out += to_string(m.column(k));
  }
  return out + "]";
}

HClass random_nonzero_class(int genus, Rng& rng) {
  const std::uint64_t count = 1ULL << (2 * genus);
  return HClass::from_mask(genus, 1 + rng.below(count - 1));
}

// Moves C into the orthogonal complement of the basis span.
HClass project_orthogonal(const SubsurfaceBasis& s, HClass c) {
  for (const auto& [A, B] : s.pairs) {
    const bool ca = intersect(c, A) != 0;
    const bool cb = intersect(c, B) != 0;
    if (ca) c += B;
    if (cb) c += A;
  }
  return c;
}

void check_separating(DiagramCheck& check, const SpMatrix& m, const SubsurfaceBasis& s) {
  const BoolPoly lhs = substitute_sp(m, sigma(SeparatingTwist{s, {}}));
  const BoolPoly rhs = sigma(SeparatingTwist{transform(m, s), {}});
  record(check, lhs == rhs, [&] {
    return "M = " + describe(m) + ", basis " + describe(s) + ": M.sigma = " + to_string(lhs) +
           ", sigma(M basis) = " + to_string(rhs);
  });
}

void check_bp(DiagramCheck& check, const SpMatrix& m, const SubsurfaceBasis& s, const HClass& c) {
  const BoolPoly lhs = substitute_sp(m, sigma(BPMap{s, c, {}}));
  const BoolPoly rhs = sigma(BPMap{transform(m, s), m.apply(c), {}});
  record(check, lhs == rhs, [&] {
    return "M = " + describe(m) + ", bp basis " + describe(s) + " C = " + to_string(c) +
           ": M.sigma = " + to_string(lhs) + ", sigma(M data) = " + to_string(rhs);
  });
}

}  // namespace

SubsurfaceBasis transform(const SpMatrix& m, const SubsurfaceBasis& s) {
  SubsurfaceBasis out{s.genus, {}};
  for (const auto& [A, B] : s.pairs) out.pairs.emplace_back(m.apply(A), m.apply(B));
  return out;
}

SpMatrix random_sp_word(int genus, Rng& rng, int length) {
  SpMatrix m = SpMatrix::identity(genus);
  for (int step = 0; step < length; ++step) {
    const auto kind = rng.below(3);
    if (kind == 0) {
      m = SpMatrix::handle_swap(genus, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(genus)))) * m;
    } else if (kind == 1 && genus >= 2) {
      const int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(genus)));
      int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(genus - 1)));
      if (j >= i) ++j;
      m = SpMatrix::handle_transposition(genus, i, j) * m;
    } else {
      m = SpMatrix::transvection(random_nonzero_class(genus, rng)) * m;
    }
  }
  return m;
}

std::vector<SpMatrix> sp4_elements() {
  std::vector<SpMatrix> out;
  constexpr int g = 2;
  // Columns are 4-bit masks; enumerate all 2^16 matrices with independent
  // checks on the Gram matrix before building objects.
  for (std::uint32_t packed = 0; packed < (1u << 16); ++packed) {
    std::uint64_t cols[4];
    for (int k = 0; k < 4; ++k) cols[k] = (packed >> (4 * k)) & 0xFu;
    auto pair = [](std::uint64_t x, std::uint64_t y) {
      const std::uint64_t t = ((x & 3u) & (y >> 2)) ^ ((x >> 2) & (y & 3u));
      return std::popcount(t) & 1;
    };
    bool ok = true;
    for (int p = 0; p < 4 && ok; ++p) {
      for (int q = p + 1; q < 4 && ok; ++q) {
        const int want = (q == p + 2) ? 1 : 0;
        ok = pair(cols[p], cols[q]) == want;
      }
    }
    if (!ok) continue;
    std::vector<HClass> columns;
    for (int k = 0; k < 4; ++k) columns.push_back(HClass::from_mask(g, cols[k]));
    out.emplace_back(g, std::move(columns));
  }
  return out;
}

SubsurfaceBasis random_subsurface_basis(int genus, int h, std::uint64_t seed) {
  return random_integral_basis(genus, h, seed).mod2();
}

DiagramCheck basis_independence_suite(int genus, int h, std::size_t trials, std::uint64_t seed) {
  if (h < 1 || h > genus) throw ArgumentError("subsurface genus must lie in [1, genus]");
  DiagramCheck check{"basis-independence-h" + std::to_string(h), 0, 0, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = derive_seed(seed, t);
    const SubsurfaceBasis basis = random_subsurface_basis(genus, h, s);
    const SubsurfaceBasis moved = random_symplectic_rebase(basis, derive_seed(s, 1));
    const BoolPoly lhs = sigma(SeparatingTwist{basis, {}});
    const BoolPoly rhs = sigma(SeparatingTwist{moved, {}});
    record(check, lhs == rhs, [&] {
      return "basis " + describe(basis) + " vs " + describe(moved) + ": " + to_string(lhs) +
             " != " + to_string(rhs);
    });
  }
  return check;
}

DiagramCheck equivariance_exhaustive_g2() {
  constexpr int g = 2;
  DiagramCheck check{"equivariance-sp4-exhaustive", 0, 0, {}};
  const auto group = sp4_elements();
  const auto spines = enumerate_spines(g, 2);
  std::vector<std::pair<SubsurfaceBasis, HClass>> bps;
  for (const auto& m : enumerate_bp_descriptors(g, 2)) bps.emplace_back(m.basis, m.C);
  const SubsurfaceBasis full = standard_basis(g, {1, 2});
  for (const SpMatrix& m : group) {
    for (const Spine& s : spines) check_separating(check, m, SubsurfaceBasis{g, {{s.x, s.y}}});
    check_separating(check, m, full);
    for (const auto& [basis, c] : bps) check_bp(check, m, basis, c);
  }
  return check;
}

DiagramCheck equivariance_random_words(int genus, std::size_t words, std::uint64_t seed) {
  DiagramCheck check{"equivariance-random-words", 0, 0, {}};
  for (std::size_t t = 0; t < words; ++t) {
    Rng rng(derive_seed(seed, t));
    const SpMatrix m = random_sp_word(genus, rng, 1 + static_cast<int>(rng.below(12)));
    const int h = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(genus, 3))));
    const SubsurfaceBasis basis = random_subsurface_basis(genus, h, rng.next());
    check_separating(check, m, basis);
    if (h < genus) {
      const HClass c = project_orthogonal(basis, random_nonzero_class(genus, rng));
      check_bp(check, m, basis, c);
    }
  }
  return check;
}

DiagramCheck composition_law_suite(int genus, std::size_t trials, std::uint64_t seed) {
  DiagramCheck check{"composition-law", 0, 0, {}};
  const auto n = static_cast<std::uint64_t>(2 * genus);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    const SpMatrix m1 = random_sp_word(genus, rng, 1 + static_cast<int>(rng.below(8)));
    const SpMatrix m2 = random_sp_word(genus, rng, 1 + static_cast<int>(rng.below(8)));
    std::vector<VarMask> monomials;
    const auto terms = 1 + rng.below(6);
    for (std::uint64_t k = 0; k < terms; ++k) {
      VarMask mask = 0;
      const auto degree = rng.below(4);
      for (std::uint64_t d = 0; d < degree; ++d) mask |= VarMask{1} << rng.below(n);
      monomials.push_back(mask);
    }
    const BoolPoly p(genus, monomials);
    const BoolPoly lhs = substitute_sp(m2, substitute_sp(m1, p));
    const BoolPoly rhs = substitute_sp(m2 * m1, p);
    record(check, lhs == rhs, [&] {
      return "M1 = " + describe(m1) + ", M2 = " + describe(m2) + ", p = " + to_string(p) +
             ": " + to_string(lhs) + " != " + to_string(rhs);
    });
  }
  return check;
}

}  // namespace bcj
