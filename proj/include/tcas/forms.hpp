#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcas/rational.hpp"
#include "tcas/young.hpp"

namespace tcas {

/// S^s E^{A'} (x) (Young module of the unprimed cotangent spinors) [w].
struct IrreducibleBundle {
  int s = 0;
  YoungDiagram diagram;
  int w = 0;

  /// Columns of full height n are traded for a density factor E[-1] each.
  IrreducibleBundle canonical(int n) const;
  /// Rank of the bundle: (s + 1) * dim(diagram, n).
  std::int64_t rank(int n) const;
  std::string str() const;
  friend bool operator==(const IrreducibleBundle&, const IrreducibleBundle&) = default;
};

/// Graded pieces of a filtered bundle; slot 0 is the top (lowest homogeneity).
struct CompositionSeries {
  std::vector<std::vector<IrreducibleBundle>> slots;

  std::size_t constituents() const;
  std::int64_t rank(int n) const;
};

/// Irreducible components of j-forms on a Grassmannian of type (2, n).
std::vector<IrreducibleBundle> decompose_forms(int j, int n);

/// Composition series of tractor k-forms (E[1]-twisted k-2 forms, E^{A'} (x) (k-1)-forms, k-forms).
CompositionSeries cotractor_form_series(int k, int n);

/// Five-slot series of the two-column (k, k) tractor bundle twisted by E[-k].
/// Diagrams are reported with their full column heights (k, k-1, ...), only
/// zero-height columns are dropped; call canonical() for the density-wrapped form.
CompositionSeries tractor_T_series(int k, int n);

using EigenvalueTable = std::vector<std::vector<Rational>>;

/// Casimir eigenvalue of every constituent, slot structure preserved.
EigenvalueTable eigenvalue_table(const CompositionSeries& series, int m);

nlohmann::json to_json(const IrreducibleBundle& b);
nlohmann::json to_json(const CompositionSeries& s);
nlohmann::json to_json(const EigenvalueTable& t);
std::string to_text(const CompositionSeries& s);

}  // namespace tcas
