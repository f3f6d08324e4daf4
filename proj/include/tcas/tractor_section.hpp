#pragma once

#include <array>
#include <string>
#include <vector>

#include "tcas/exterior.hpp"
#include "tcas/rng.hpp"
#include "tcas/tensor.hpp"
#include "tcas/young.hpp"

namespace tcas {

/// The six constituents of the five-slot tractor series (slot 2 has two).
enum class Component { Sigma, Mu, A, Alpha, Nu, Rho };

inline constexpr std::array<Component, 6> kAllComponents = {
    Component::Sigma, Component::Mu, Component::A, Component::Alpha, Component::Nu, Component::Rho};

std::string component_name(Component c);
/// Composition-series slot (0..4) of the component.
int component_slot(Component c);
/// Number of leading primed-up slots (0, 1 or 2).
int component_primed(Component c);
/// Young diagram of the unprimed slots (full column heights).
YoungDiagram component_diagram(Component c, int k);
/// Slot layout: [primed-up..., first unprimed group, second unprimed group].
Signature component_signature(Component c, int k);
/// Density weight of the component.
int component_weight(Component c, int k);

/// Projection onto the irreducible bundle of the component: normalized Young
/// projector on the unprimed slots, symmetrization of the primed pair for A.
Tensor project_component(Component c, const Tensor& t, int k);

/// A section of the tractor bundle in a fixed splitting, one spinor tensor
/// per constituent.
///
/// Layouts (k >= 2; bold groups are multi-indices):
///   sigma [k-2 | k-2], mu [A' | k-1 | k-2], A [A' B' | k-1 | k-1],
///   alpha [k | k-2],   nu [A' | k | k-1],   rho [k | k].
struct TSection {
  int n = 0;
  int k = 0;
  Tensor sigma, mu, A, alpha, nu, rho;

  static TSection zero(int n, int k);

  Tensor& component(Component c);
  const Tensor& component(Component c) const;

  bool is_zero() const;
  /// True when every component already lies in its irreducible bundle.
  bool is_projected() const;
  TSection projected() const;

  TSection& operator+=(const TSection& o);
  TSection& operator-=(const TSection& o);
  TSection& operator*=(const Rational& s);
  friend TSection operator+(TSection a, const TSection& b) { return a += b; }
  friend TSection operator-(TSection a, const TSection& b) { return a -= b; }
  friend TSection operator*(const Rational& s, TSection a) { return a *= s; }
  friend bool operator==(const TSection& a, const TSection& b);

  std::string describe() const;
};

/// Section in the form-pair model (symmetric under exchanging the two forms).
FormPair embed(const TSection& s);
/// Inverse of embed on its image.
TSection extract(const FormPair& v);

/// Contribution of the alpha term contracted with Y Y' X.. (x) X..: the part of
/// embed(alpha) that lives in the (1, 1) block before symmetrization.
FormPair alpha_mixed_block(const Tensor& alpha, int k);

/// Projected basis tensors of one component, zero images dropped.
std::vector<Tensor> component_spanning_set(Component c, int n, int k);
/// Sections with one nonzero component, over every component's spanning set.
std::vector<TSection> section_spanning_set(int n, int k);
/// Projected section with small integer entries.
TSection random_section(int n, int k, Lcg& rng);
/// Random tensor of the given component, projected.
Tensor random_component(Component c, int n, int k, Lcg& rng);

}  // namespace tcas
