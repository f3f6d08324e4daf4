#pragma once

#include <optional>
#include <vector>

#include "tcas/bullet.hpp"
#include "tcas/rational.hpp"
#include "tcas/tensor.hpp"
#include "tcas/tractor_section.hpp"

namespace tcas {

/// Which constituent of slot 2 an intermediate result is projected onto:
/// 1 keeps the primed-symmetric A component, 2 keeps alpha.
TSection keep_branch(const TSection& s, int branch);

/// xi (x) xi (x) xi (x) xi in the jet layout [4 primed-up | 4 unprimed-down].
Tensor fourth_power(const Tensor& xi);

/// Four bullets by xi starting from a section with only sigma, projecting each
/// intermediate section and keeping one slot-2 branch after the second step.
/// Returns the projected rho component.
Tensor symbol_path(const Tensor& xi, const Tensor& sigma, int branch,
                   const ActionCoefficients& coeffs = ActionCoefficients::derived());

/// phi(omega (x) sigma) followed by the projection onto the bottom bundle;
/// layout [A1 A2 A.. | B1 B2 B..] like rho.
Tensor nonstandard_symbol(const Tensor& omega, const Tensor& sigma);

/// Covectors sum_i c_i e_i over the 2n elementary one-forms with nonnegative
/// integer c summing to `degree`. Values on these points determine a
/// homogeneous polynomial of that degree.
std::vector<Tensor> lattice_covectors(int n, int degree);

/// The constant c with path = c * target (target nonzero), or nullopt if the
/// two are not proportional.
std::optional<Rational> proportionality(const Tensor& path, const Tensor& target);

/// Projection to the bottom bundle of
///   8 xi_{J'A1} xi_{I'B1} xi^{(I'}_{(B2} xi^{J')}_{A2)} sigma_{A..B..},
/// the hand-expanded leading term of the first path.
Tensor path_representative(const Tensor& xi, const Tensor& sigma);

/// Projection of xi_{J'A1} xi^{J'}_{A2} xi_{I'B1} xi^{I'}_{B2} sigma_{A..B..}.
Tensor contracted_square(const Tensor& xi, const Tensor& sigma);

struct PathConstants {
  Rational branch1;
  Rational branch2;
  std::size_t samples = 0;
};

/// Constants c_b with symbol_path(xi, sigma, b) = c_b nonstandard_symbol(xi^4, sigma)
/// over the degree-4 covector lattice and a basis of sigma. Throws EngineDefect
/// if proportionality fails or the constant varies.
PathConstants path_constants(int n, int k, const ActionCoefficients& coeffs = ActionCoefficients::derived());

/// Symbol of M on a section: xi.(xi.s)_1 + sign * xi.(xi.s)_2 (projected).
TSection m_symbol(const Tensor& xi, const TSection& s, const Rational& sign,
                  const ActionCoefficients& coeffs = ActionCoefficients::derived());

/// True iff the projected symbols of M o d (on sigma, into nu) and d o M (on mu,
/// into rho) vanish for every covector of the degree-3 lattice and every
/// spanning input. sign = -1 is the operator; sign = +1 is the mutation.
bool verify_Md_symbol_vanishes(int n, int k, const Rational& sign = Rational(-1),
                               const ActionCoefficients& coeffs = ActionCoefficients::derived());

}  // namespace tcas
