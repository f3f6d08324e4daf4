#pragma once

#include <string>

#include "tcas/forms.hpp"
#include "tcas/tensor.hpp"
#include "tcas/tractor_section.hpp"

namespace tcas {

enum class SymmetryKind {
  WType,   // W^{A'B' D}_{A B C}: skew primed pair, trace-free and symmetric in (A B C)
  CYType,  // (d P)^{A'B'C'}_{A B C}: skew in A'B', symmetric in (A B C)
  Generic  // no symmetry at all
};

struct SymmetryClass {
  SymmetryKind kind;

  std::string label() const;
  /// Number of unprimed lower indices the class is symmetric in (0 for Generic).
  int symmetric_unprimed() const;
  /// Signature of a representative tensor of the class.
  Signature signature() const;
  /// Projector identities: skew primed pair, symmetric triple, trace-free (W-type).
  bool contains(const Tensor& t) const;
};

/// True iff every tensor in the target's unprimed slots that carries the class
/// symmetry on some three of them (the remaining slots filled by arbitrary
/// section factors) is annihilated by the target's Young projector.
///
/// Evaluated exactly: for each placement of the symmetric triple the operator
/// (Young projector) o (symmetrizer) is built in the group algebra of the slot
/// permutations and applied to every basis tensor.
bool projection_kills_symmetric(const SymmetryClass& c, Component target, int n, int k);

/// Same, with the target given as a bundle; it must be one of the two bottom
/// constituents of tractor_T_series(k, n).
bool projection_kills_symmetric(const SymmetryClass& c, const IrreducibleBundle& target, int n, int k);

}  // namespace tcas
