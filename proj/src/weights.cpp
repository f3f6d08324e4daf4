#include "tcas/weights.hpp"

#include <string>

#include "tcas/errors.hpp"
#include "tcas/forms.hpp"

namespace tcas {

RankData RankData::for_n(int n) {
  if (n < 2) throw DomainError("RankData: n must be at least 2, got " + std::to_string(n));
  return RankData{n};
}

Weight::Weight(int m) : coords_(static_cast<std::size_t>(m)) {
  if (m < 1) throw DomainError("Weight: m must be positive");
}

Weight::Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("Weight: m must be positive");
  Rational sum;
  for (const auto& c : coords_) sum += c;
  if (!sum.is_zero()) throw DomainError("Weight: coordinates must sum to zero");
}

bool Weight::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.m() != m()) throw DomainError("Weight: rank mismatch");
  for (int i = 0; i < m(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.m() != m()) throw DomainError("Weight: rank mismatch");
  for (int i = 0; i < m(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Rational pairing(const Weight& a, const Weight& b) {
  if (a.m() != b.m()) throw DomainError("pairing: rank mismatch");
  Rational acc;
  for (int i = 0; i < a.m(); ++i) acc += a[i] * b[i];
  return acc;
}

Weight fundamental_weight(int i, int m) {
  if (m < 2) throw DomainError("fundamental_weight: m must be at least 2");
  if (i < 1 || i > m)
    throw DomainError("fundamental_weight: index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(m));
  std::vector<Rational> c(static_cast<std::size_t>(m));
  const Rational shift(i, m);
  for (int j = 0; j < m; ++j) c[j] = (j < i ? Rational(1) : Rational(0)) - shift;
  return Weight(std::move(c));
}

Weight rho(int m) {
  if (m < 2) throw DomainError("rho: m must be at least 2");
  std::vector<Rational> c(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) c[j] = Rational(m - 1 - 2 * j, 2);
  return Weight(std::move(c));
}

Rational casimir_eigenvalue(const Weight& lambda) {
  const Weight shifted = lambda + Rational(2) * rho(lambda.m());
  return pairing(lambda, shifted);
}

Weight from_fundamental(std::span<const Rational> c, int m) {
  Weight w(m);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) w += c[i] * fundamental_weight(static_cast<int>(i) + 1, m);
  return w;
}

Weight bundle_minus_lowest_weight(const IrreducibleBundle& b, int m) {
  const int n = m - 2;
  if (n < 1) throw DomainError("bundle_minus_lowest_weight: m must be at least 3");
  const auto& cols = b.diagram.columns();
  if (cols.size() > 2)
    throw DomainError("bundle_minus_lowest_weight: at most two columns are allowed");
  const Weight w1 = fundamental_weight(1, m);
  const Weight w2 = fundamental_weight(2, m);
  Weight out = Rational(b.s) * (w1 - w2);
  for (int h : cols) {
    if (h > n)
      throw DomainError("bundle_minus_lowest_weight: column height " + std::to_string(h) +
                        " exceeds n = " + std::to_string(n));
    out += fundamental_weight(h + 2, m) - w2;
  }
  out += Rational(b.w) * w2;
  return out;
}

}  // namespace tcas
