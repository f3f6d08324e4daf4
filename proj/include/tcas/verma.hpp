#pragma once

#include <vector>

#include "tcas/rational.hpp"
#include "tcas/tensor.hpp"

namespace tcas {

/// Elements of (x)^r g_{-1}^* (x) V_{k-2} are tensors with slot layout
///   [r primed-up | r unprimed-down | (k-2) unprimed-down (E) | (k-2) unprimed-down (F)]
/// where the i-th primed slot and the i-th unprimed slot together form the
/// i-th g_{-1}^* factor, and the V-factor is projector-stable for the
/// two-column diagram (k-2, k-2) with columns E and F.
struct JetComponent {
  int r = 0;
  int k = 2;
  Tensor value;

  static Signature signature(int r, int k);
  static JetComponent zero(int n, int r, int k);
};

/// Signature of V_m: 2m unprimed-down slots (two columns of height m).
Signature v_signature(int m);

/// Coefficients of a g_0-homomorphism K Phi11 + L Phi12 + M Phi21 + N Phi22.
struct LiftCoefficients {
  Rational K, L, M, N;
  Rational sum() const { return K + L + M + N; }
};

/// Complete contraction of four primed-up slots (slots 0..3) with two eps_down
/// factors; all other slots are carried along unchanged.
///   c1: eps_{01} eps_{23},  c2: eps_{03} eps_{12},  c3: eps_{02} eps_{31}.
Tensor contraction_c(int i, const Tensor& omega);

/// One of the three maps (x)^4 R^{n*} -> (2,2) acting on slots 0..3 (ordered
/// A1 A2 B1 B2): the pair average of the displayed reordering, projected onto
/// the two skew columns (A1 A2), (B1 B2), minus total alternation. Trailing
/// slots are carried along.
Tensor projection_p(int j, const Tensor& t);

/// Projection of [A1 A2 B1 B2 | E | F] onto V_k with columns (A1 A2 E) and
/// (B1 B2 F): alternation over each column, then the normalized (k,k) Young
/// projector. It is the identity on the copy of V_k inside the product of the
/// two column exterior powers. Result layout: [A1 A2 E | B1 B2 F].
Tensor v_k_projection(const Tensor& t, int k);

/// Phi_ii = c_i o p_i, Phi_ij = -2 c_i o p_j (i != j), followed by the
/// projection to V_k. psi is a degree-4 jet component.
Tensor phi_map(int i, int j, const JetComponent& psi);

/// (K Phi11 + L Phi12 + M Phi21 + N Phi22)(psi); K+L+M+N must be 1.
Tensor lift_map(const LiftCoefficients& c, const JetComponent& psi);

/// The symbol map phi: Phi11 restricted to symmetric arguments.
Tensor phi_symbol(const JetComponent& psi);

/// Density coefficient of the first sum of the g_1 action: the displayed
/// (k-2).
Rational displayed_density_coefficient(int k);

/// First sum of the g_1 action: sum_i [Z, X_i] acting on the V-valued
/// psi(X_1..^X_i..X_4) (density term with `density` plus each V slot).
JetComponent g1_action_first_sum(const Tensor& Z, const JetComponent& psi, const Rational& density);
JetComponent g1_action_first_sum(const Tensor& Z, const JetComponent& psi);

/// Second sum: -sum_{i<j} psi(.., [[Z,X_i],X_j] in place of X_j, X_i omitted, ..).
JetComponent g1_action_second_sum(const Tensor& Z, const JetComponent& psi);

/// Z . psi for psi of degree 3; Z has signature (primed-up, unprimed-down).
JetComponent g1_action(const Tensor& Z, const JetComponent& psi);

/// Basis of Ker((x) alternation over slots 1..3) inside the tensors
/// [primed-up, unprimed-down x3] skew in slots 1,2; deterministic order.
std::vector<Tensor> witness_kernel_basis(int n);

/// omega = eps^{A'B'} wbar^{C'}_{ABC}, layout [A' B' C' | A B C].
Tensor witness_omega(const Tensor& wbar);

/// psi = omega (x) v as a degree-3 jet component.
JetComponent jet_product(const Tensor& omega, const Tensor& v, int k);

/// The lift applied to Z . (omega(wbar) (x) v). Throws ContractViolation when
/// K+L+M+N != 1.
Tensor obstruction_witness(const LiftCoefficients& c, const Tensor& Z, const Tensor& wbar, const Tensor& v);

/// (1/2)(Z_{I'B2} wbar^{I'}_{A1A2B1} + Z_{I'A2} wbar^{I'}_{B1B2A1}) (x) v, projected to V_k.
Tensor obstruction_closed_form(const Tensor& Z, const Tensor& wbar, const Tensor& v);

/// Spanning set of V_m: normalized projections of basis tensors, deduplicated.
std::vector<Tensor> v_spanning_set(int n, int m);

/// Z_{I'D} wbar^{I'}_{ABC}, layout [A B C D].
Tensor lowered_pairing(const Tensor& Z, const Tensor& wbar);

}  // namespace tcas
