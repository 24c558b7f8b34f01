#include <gtest/gtest.h>

#include "bcj/bcjmap.hpp"
#include "bcj/errors.hpp"
#include "bcj/random.hpp"
#include "bcj/suites.hpp"
#include "oracles.hpp"

using namespace bcj;

namespace {

HClass a(int g, int i) { return HClass::a(g, i); }
HClass b(int g, int i) { return HClass::b(g, i); }

}  // namespace

TEST(SigmaSeparating, GenusOneSpine) {
  const int g = 3;
  for (int i = 1; i <= g; ++i) {
    const BoolPoly expect = BoolPoly::var(g, static_cast<std::size_t>(i - 1)) *
                            BoolPoly::var(g, static_cast<std::size_t>(g + i - 1));
    EXPECT_EQ(sigma(SeparatingTwist{standard_basis(g, {i}), {}}), expect);
  }
}

TEST(SigmaSeparating, OrbitFiveSpine) {
  const int g = 3;
  const SubsurfaceBasis s{g, {{a(g, 1) + b(g, 1), a(g, 1) + a(g, 2)}}};
  EXPECT_EQ(sigma(SeparatingTwist{s, {}}), parse_bool_poly(g, "a1*b1 + a1*a2 + a2*b1 + a2"));
}

TEST(SigmaSeparating, EmptyBasisIsZero) {
  EXPECT_TRUE(sigma(SeparatingTwist{SubsurfaceBasis{3, {}}, {}}).is_zero());
}

TEST(SigmaSeparating, RejectsNonSymplectic) {
  const SubsurfaceBasis bad{2, {{a(2, 1), a(2, 2)}}};
  EXPECT_THROW(sigma(SeparatingTwist{bad, {}}), BasisError);
}

TEST(SigmaBp, Examples) {
  const int g = 2;
  EXPECT_TRUE(sigma(BPMap{SubsurfaceBasis{g, {}}, a(g, 1), {}}).is_zero());
  const BoolPoly v = sigma(make_bp_map(standard_basis(g, {2}), a(g, 1)));
  EXPECT_EQ(to_string(v), "a1*a2*b2 + a2*b2");
}

// The BP value checked pointwise on all 16 self-linking forms against an
// independent expansion of (bar A bar B)(bar C + 1).
TEST(SigmaBp, PointwiseOracleG2) {
  const int g = 2;
  const BoolPoly v = sigma(make_bp_map(standard_basis(g, {2}), a(g, 1)));
  const oracle::Poly expect =
      oracle::mul(oracle::mul(oracle::bar(g, 0b0010), oracle::bar(g, 0b1000)),
                  oracle::add(oracle::bar(g, 0b0001), oracle::Poly{0}));
  for (std::uint64_t w = 0; w < 16; ++w) {
    ASSERT_EQ(evaluate(v, SelfLinkingForm::from_index(g, w)), oracle::evaluate(expect, w) != 0);
  }
}

TEST(SigmaBp, RejectsNonOrthogonalC) {
  EXPECT_THROW(make_bp_map(standard_basis(2, {2}), b(2, 2)), GeometryError);
}

TEST(SigmaBp, DegreeAtMostThree) {
  Rng rng(4);
  for (int t = 0; t < 1000; ++t) {
    const int g = 2 + static_cast<int>(rng.below(4));
    const int h = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(g - 1)));
    const SubsurfaceBasis s = random_subsurface_basis(g, h, rng.next());
    HClass c = HClass::from_mask(g, rng.below(1ULL << (2 * g)));
    for (const auto& [A, B] : s.pairs) {
      const bool ca = intersect(c, A) != 0, cb = intersect(c, B) != 0;
      if (ca) c += B;
      if (cb) c += A;
    }
    ASSERT_LE(sigma(make_bp_map(s, c)).degree(), 3);
  }
}

TEST(IndexMatched, Examples) {
  const int g = 3;
  EXPECT_TRUE(is_index_matched(g, parse_monomial(g, "a1*b2"), parse_monomial(g, "b1*a3")));
  EXPECT_FALSE(is_index_matched(g, parse_monomial(g, "a1*b1"), parse_monomial(g, "a2*b2")));
  EXPECT_TRUE(is_index_matched(g, parse_monomial(g, "a1"), parse_monomial(g, "b1")));
  EXPECT_THROW(is_index_matched(g, 1, 1), ArgumentError);
}

TEST(IndexMatched, AgreesWithOracle) {
  for (int g = 1; g <= 4; ++g) {
    const auto mons = oracle::b2_monomials(g);
    for (std::size_t i = 0; i < mons.size(); ++i) {
      for (std::size_t j = i + 1; j < mons.size(); ++j) {
        ASSERT_EQ(is_index_matched(g, mons[i], mons[j]), oracle::index_matched(g, mons[i], mons[j]));
      }
    }
  }
}

TEST(BasisIndependence, ThousandRebasesPerSubsurfaceGenus) {
  for (int h = 1; h <= 3; ++h) {
    const DiagramCheck c = basis_independence_suite(5, h, 1000, 42 + static_cast<std::uint64_t>(h));
    EXPECT_EQ(c.trials, 1000u);
    EXPECT_TRUE(c.passed()) << (c.witnesses.empty() ? "" : c.witnesses.front());
  }
}

TEST(Equivariance, ExhaustiveSp4) {
  const auto group = sp4_elements();
  ASSERT_EQ(group.size(), 720u);
  for (const auto& m : group) ASSERT_TRUE(m.is_symplectic());
  const DiagramCheck c = equivariance_exhaustive_g2();
  EXPECT_GT(c.trials, 0u);
  EXPECT_TRUE(c.passed()) << (c.witnesses.empty() ? "" : c.witnesses.front());
}

TEST(Equivariance, RandomWordsAndCompositionLaw) {
  for (int g = 2; g <= 5; ++g) {
    const DiagramCheck w = equivariance_random_words(g, 200, 100 + static_cast<std::uint64_t>(g));
    EXPECT_TRUE(w.passed()) << g;
    const DiagramCheck c = composition_law_suite(g, 200, 200 + static_cast<std::uint64_t>(g));
    EXPECT_TRUE(c.passed()) << g;
  }
}
