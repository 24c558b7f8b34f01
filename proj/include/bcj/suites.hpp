#pragma once

// Randomized and exhaustive consistency suites for sigma: independence of
// the chosen subsurface basis and Sp-equivariance.

#include <cstdint>
#include <vector>

#include "bcj/bcjmap.hpp"
#include "bcj/casson_morita.hpp"
#include "bcj/random.hpp"

namespace bcj {

/// Image of every basis class under M.
SubsurfaceBasis transform(const SpMatrix& m, const SubsurfaceBasis& s);

/// Random word of length `length` in handle swaps, handle transpositions and
/// transvections by random nonzero classes.
SpMatrix random_sp_word(int genus, Rng& rng, int length);

/// All 720 elements of Sp(4, F_2), in increasing column-mask order.
std::vector<SpMatrix> sp4_elements();

/// Random mod-2 symplectic basis of a genus-h subsurface.
SubsurfaceBasis random_subsurface_basis(int genus, int h, std::uint64_t seed);

/// sigma(basis) == sigma(random_symplectic_rebase(basis)) over `trials`
/// random genus-h bases in genus `genus`.
DiagramCheck basis_independence_suite(int genus, int h, std::size_t trials, std::uint64_t seed);

/// substitute_sp(M, sigma(c)) == sigma(M c) for every M in Sp(4, F_2) and
/// every genus-1 spine curve and BP map on spines with support <= 2.
DiagramCheck equivariance_exhaustive_g2();

/// The same identity for `words` random words M and random separating and
/// BP data.
DiagramCheck equivariance_random_words(int genus, std::size_t words, std::uint64_t seed);

/// substitute_sp(M2, substitute_sp(M1, p)) == substitute_sp(M2 * M1, p) for
/// random words and random polynomials of degree <= 3.
DiagramCheck composition_law_suite(int genus, std::size_t trials, std::uint64_t seed);

}  // namespace bcj
