#pragma once

#include "tcas/tensor.hpp"
#include "tcas/tractor_section.hpp"

namespace tcas {

/// Scalars in front of the mu and rho rows of the component action.
///
/// derived() follows from the injector relations phi.YY = 2 phi^{[A'}_I WW^{B']I..},
/// phi.WW = -phi^{A'}_I XX^{I..} and the symmetrized pairing of injectors;
/// printed() sets both rows to coefficient one,
/// which disagrees with the form-pair computation by these factors.
struct ActionCoefficients {
  Rational mu_row;
  Rational rho_row;

  static ActionCoefficients derived() { return {4, Rational(1, 2)}; }
  static ActionCoefficients printed() { return {1, 1}; }
};

/// Action of a one-form phi^{A'}_A on a section, written component by
/// component in the splitting (c_mu, c_rho from ActionCoefficients):
///
///   mu'    = c_mu phi^{A'}_{[A_2} sigma_{A..]B..}
///   A'     = phi^{(A'}_{[A_2} mu^{B')}_{|B..|A..]} + (A <-> B)
///   alpha' = phi_{I'[A_1} mu^{I'}_{A..]B..}
///   nu'    = 2 phi_{I'[A_1} A^{I'A'}_{A..]B..} + 2 phi^{A'}_{[B_2} alpha_{|A|B..]}
///            - k (-1)^k phi^{A'}_{[A_1} alpha_{A..]B..}
///   rho'   = c_rho (phi_{I'[A_1} nu^{I'}_{|B|A..]} + phi_{I'[B_1} nu^{I'}_{|A|B..]})
///
/// Components are returned as representatives; project them to compare
/// against the form-pair route.
TSection bullet_on_T(const Tensor& phi, const TSection& s,
                     const ActionCoefficients& coeffs = ActionCoefficients::derived());

/// Elementary one-form e^{a'}_{a}: one at (a', a), zero elsewhere.
Tensor basis_one_form(int n, int primed, int unprimed);

/// All 2n elementary one-forms, primed index outermost.
std::vector<Tensor> basis_one_forms(int n);

}  // namespace tcas
