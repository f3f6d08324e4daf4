#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tcas/rational.hpp"

namespace tcas {

/// Index families. Primed indices have dimension 2, unprimed indices have
/// dimension n, tractor indices have dimension n + 2 (first two coordinates
/// are the primed block of the fixed splitting).
enum class IndexKind { Primed, Unprimed, Tractor };
enum class Variance { Up, Down };

struct Slot {
  IndexKind kind;
  Variance variance;
  friend bool operator==(const Slot&, const Slot&) = default;
};

inline constexpr Slot kPrimedUp{IndexKind::Primed, Variance::Up};
inline constexpr Slot kPrimedDown{IndexKind::Primed, Variance::Down};
inline constexpr Slot kUnprimedUp{IndexKind::Unprimed, Variance::Up};
inline constexpr Slot kUnprimedDown{IndexKind::Unprimed, Variance::Down};
inline constexpr Slot kTractorDown{IndexKind::Tractor, Variance::Down};

using Signature = std::vector<Slot>;

/// `count` copies of `slot`.
Signature repeat(Slot slot, int count);
/// Concatenation of signatures.
Signature concat(std::initializer_list<Signature> parts);

std::string to_string(const Signature& sig);

/// The skew pairing on the primed index.
///
/// eps_up(0,1) = +1 fixes the orientation; eps_down is chosen so that raising
/// (v^B = v_A eps^{AB}) followed by lowering (v_B = v^A eps_{AB}) is the
/// identity, which forces eps_down(0,1) = -1.
struct Epsilon {
  static Rational up(int a, int b);
  static Rational down(int a, int b);
};

/// All permutations of {0..m-1} together with their signs, in lexicographic order.
const std::vector<std::pair<std::vector<int>, int>>& permutations_with_sign(int m);

/// Dense multi-index array of exact rationals with a typed index signature and
/// a density weight. Components are stored row-major (last slot fastest).
class Tensor {
 public:
  Tensor() = default;
  Tensor(int n, Signature sig, int weight = 0);

  int n() const { return n_; }
  int rank() const { return static_cast<int>(sig_.size()); }
  const Signature& signature() const { return sig_; }
  const Slot& slot(int i) const { return sig_[i]; }
  int dim(int i) const { return dims_[i]; }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t size() const { return data_.size(); }
  int weight() const { return weight_; }
  void set_weight(int w) { weight_ = w; }

  std::span<const Rational> data() const { return data_; }
  std::span<Rational> data() { return data_; }
  const Rational& operator[](std::size_t flat) const { return data_[flat]; }
  Rational& operator[](std::size_t flat) { return data_[flat]; }

  std::size_t offset(std::span<const int> idx) const;
  const Rational& at(std::span<const int> idx) const { return data_[offset(idx)]; }
  Rational& at(std::span<const int> idx) { return data_[offset(idx)]; }
  const Rational& at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }
  Rational& at(std::initializer_list<int> idx) {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }

  bool is_zero() const;
  std::size_t nonzero_count() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Rational& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Rational& s, Tensor a) { return a *= s; }
  friend Tensor operator*(Tensor a, const Rational& s) { return a *= s; }
  /// Component-wise equality; signature and weight must agree too.
  friend bool operator==(const Tensor& a, const Tensor& b);

  /// Slot i of the result is slot perm[i] of this tensor.
  Tensor permuted(std::span<const int> perm) const;
  Tensor permuted(std::initializer_list<int> perm) const {
    return permuted(std::span<const int>(perm.begin(), perm.size()));
  }

  /// Average over all permutations of the listed slots.
  Tensor symmetrize(std::span<const int> slots) const;
  /// Signed average over all permutations of the listed slots.
  Tensor alternate(std::span<const int> slots) const;
  Tensor symmetrize(std::initializer_list<int> s) const {
    return symmetrize(std::span<const int>(s.begin(), s.size()));
  }
  Tensor alternate(std::initializer_list<int> s) const {
    return alternate(std::span<const int>(s.begin(), s.size()));
  }

  /// Trace over an (up, down) pair of slots of the same kind.
  Tensor contract(int slot_up, int slot_down) const;

  /// v^B = v_A eps^{AB} on a primed-down slot; density weight increases by one.
  Tensor raise_primed(int slot) const;
  /// v_B = v^A eps_{AB} on a primed-up slot; density weight decreases by one.
  Tensor lower_primed(int slot) const;

  /// Visits every multi-index in row-major order.
  void for_each_index(const std::function<void(std::span<const int>, std::size_t)>& fn) const;

  /// "sig [..] w=..: {i,j,..}=value, ..." listing of the nonzero entries.
  std::string describe(std::size_t max_entries = 16) const;

 private:
  Tensor signed_permutation_average(std::span<const int> slots, bool with_sign) const;
  void require_compatible(const Tensor& o, const char* what) const;

  int n_ = 0;
  Signature sig_;
  std::vector<int> dims_;
  std::vector<std::size_t> strides_;
  std::vector<Rational> data_;
  int weight_ = 0;
};

int index_dimension(IndexKind kind, int n);

Tensor outer(const Tensor& a, const Tensor& b);

}  // namespace tcas
