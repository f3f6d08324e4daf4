#pragma once

#include <cstdint>

#include "tcas/rational.hpp"
#include "tcas/tensor.hpp"

namespace tcas {

/// The two constants relating the copies of the (k, k-2) bundle inside the
/// (1,1) and (0,2) injector blocks:
///   B_{A..B..} = b_coefficient * alpha_{[A_2|B..|A..]}
///   alpha_{A..B..} = alpha_coefficient * B_{A..B..}   (alternated over A_1..A_k)
struct BAlphaConstants {
  Rational b_coefficient;
  Rational alpha_coefficient;
  int samples = 0;
};

/// B built from alpha with a given coefficient: x * alpha_{[A_2|B_2..B_k|A_3..A_k]}.
Tensor b_from_alpha(const Tensor& alpha, const Rational& x, int k);

/// alpha reconstructed from B: alternation over A_1..A_k of B_{A_1..A_{k-1}; A_k B_3..B_k}.
Tensor alpha_from_b(const Tensor& b, int k);

/// Solves v_{[alpha beta_1] beta-dot} = 0 for the coefficient of the WW (x) WW
/// term on pseudorandom alpha sections, then reads off alpha = y B.
/// Throws EngineDefect when the linear condition has no solution or the
/// samples disagree.
BAlphaConstants verify_B_alpha(int n, int k, std::uint64_t seed = 1, int samples = 3);

}  // namespace tcas
