#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tcas/rational.hpp"
#include "tcas/tensor.hpp"

namespace tcas {

std::int64_t binomial(int n, int k);

/// k-element subsets of {0, ..., dim-1} in lexicographic order; the basis of
/// the k-th exterior power of the standard cotractor (dim = n + 2).
class ExteriorBasis {
 public:
  ExteriorBasis(int dim, int k);

  int dim() const { return dim_; }
  int degree() const { return k_; }
  int size() const { return static_cast<int>(sets_.size()); }
  const std::vector<int>& set(int i) const { return sets_[i]; }
  /// Number of primed coordinates (0 or 1) in basis element i.
  int primed_count(int i) const { return primed_[i]; }

  /// Basis position and reordering sign of an index tuple; sign 0 when an index repeats.
  std::pair<int, int> locate(std::span<const int> tuple) const;

 private:
  int dim_;
  int k_;
  std::vector<std::vector<int>> sets_;
  std::vector<int> primed_;
  std::vector<int> index_of_mask_;
};

const ExteriorBasis& exterior_basis(int dim, int k);

/// Element of (Lambda^k T*) (x) (Lambda^k T*) for the standard cotractor T* of
/// dimension n + 2, stored as a matrix of strictly-increasing components:
/// entry (S, T) equals v_{s_1..s_k t_1..t_k}.
class FormPair {
 public:
  FormPair(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const ExteriorBasis& basis() const { return *basis_; }
  int side() const { return basis_->size(); }

  Rational& operator()(int s, int t) { return m_[static_cast<std::size_t>(s) * side() + t]; }
  const Rational& operator()(int s, int t) const {
    return m_[static_cast<std::size_t>(s) * side() + t];
  }

  bool is_zero() const;
  FormPair transposed() const;
  /// (V + V^T) / 2: the symmetric part under exchanging the two form groups.
  FormPair symmetrized() const;

  FormPair& operator+=(const FormPair& o);
  FormPair& operator-=(const FormPair& o);
  FormPair& operator*=(const Rational& s);
  friend FormPair operator+(FormPair a, const FormPair& b) { return a += b; }
  friend FormPair operator-(FormPair a, const FormPair& b) { return a -= b; }
  friend FormPair operator*(const Rational& s, FormPair a) { return a *= s; }
  friend bool operator==(const FormPair& a, const FormPair& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.m_ == b.m_;
  }

  /// Dense tractor tensor with 2k tractor-down slots.
  Tensor to_dense() const;
  static FormPair from_dense(const Tensor& t, int k);

 private:
  int n_;
  int k_;
  const ExteriorBasis* basis_;
  std::vector<Rational> m_;
};

/// Image in the form-pair model of a fully lowered spinor coefficient
/// contracted with the injector pattern (Y^p X^{k-p}) (x) (Y^q X^{k-q}).
///
/// `coefficient` has slot layout [p primed-down | k-p unprimed-down |
/// q primed-down | k-q unprimed-down]. Each tractor group is alternated (as an
/// average); the two groups are not symmetrized here.
FormPair injector_image(const Tensor& coefficient, int p, int q, int k);

/// Inverse reading of one (p, q) block: the coefficient tensor with layout as
/// above whose injector image has the given block. Only meaningful for
/// coefficients alternated within each group.
Tensor read_injector_block(const FormPair& v, int p, int q);

/// Matrix of the one-form action on Lambda^k: (phi . v)_S = sum_T D(S, T) v_T.
std::vector<Rational> bullet_matrix(const Tensor& phi, int n, int k);

/// Derivation action of a one-form phi^{A'}_A on a form pair.
FormPair bullet(const Tensor& phi, const FormPair& v);

/// Alternation over the first k + 1 tractor indices, v_{[alpha beta_1] beta-dot}.
/// Returned as a (k+1)-form / (k-1)-form component table (rows, columns).
std::vector<Rational> alternate_first_k_plus_one(const FormPair& v);

/// Dense derivation action on every tractor-down slot of t.
Tensor bullet_dense(const Tensor& phi, const Tensor& t);

/// Injectors of the fixed splitting: first two cotractor coordinates primed.
struct InjectorBasis {
  int n;
  int k;
  Tensor X;   // X^A_alpha          [U^, t]
  Tensor Y;   // Y^{A'}_alpha       [P^, t]
  Tensor XX;  // X^{A_1..A_k}_{alpha_1..alpha_k}                [U^ x k, t x k]
  Tensor WW;  // Y^{A'}_{[alpha_1} X^{A_2}..X^{A_k}_{alpha_k]}   [P^, U^ x (k-1), t x k]
  Tensor YY;  // Y^{A'} Y^{B'} X^{A_3}..X^{A_k}, alternated       [P^, P^, U^ x (k-2), t x k]

  static InjectorBasis build(int n, int k);
};

}  // namespace tcas
