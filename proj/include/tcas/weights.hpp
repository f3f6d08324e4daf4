#pragma once

#include <span>
#include <vector>

#include "tcas/rational.hpp"

namespace tcas {

struct IrreducibleBundle;

/// Rank data for sl(m) with m = n + 2.
struct RankData {
  int n;
  int m() const { return n + 2; }

  static RankData for_n(int n);
};

/// Weight of sl(m) in epsilon coordinates. Coordinates always sum to zero.
class Weight {
 public:
  explicit Weight(int m);
  explicit Weight(std::vector<Rational> coords);

  int m() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](int i) const { return coords_[i]; }

  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& s);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<Rational> coords_;
};

/// Trace-form pairing: Euclidean dot product of epsilon coordinates.
Rational pairing(const Weight& a, const Weight& b);

/// omega_i = e_1 + ... + e_i - (i/m)(e_1 + ... + e_m).  i == m gives zero.
Weight fundamental_weight(int i, int m);

/// Sum of the fundamental weights (= half the sum of positive roots).
Weight rho(int m);

/// <lambda, lambda + 2 rho>.
Rational casimir_eigenvalue(const Weight& lambda);

/// Weight from fundamental-weight coordinates: sum_i c[i-1] * omega_i.
Weight from_fundamental(std::span<const Rational> c, int m);

/// Minus lowest weight of an irreducible Grassmannian bundle:
///   s(w1 - w2) + sum over columns (w_{h+2} - w2) + w * w2.
Weight bundle_minus_lowest_weight(const IrreducibleBundle& b, int m);

}  // namespace tcas
