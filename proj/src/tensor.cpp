#include "tcas/tensor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "tcas/errors.hpp"

namespace tcas {

Signature repeat(Slot slot, int count) { return Signature(static_cast<std::size_t>(count), slot); }

Signature concat(std::initializer_list<Signature> parts) {
  Signature out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string to_string(const Signature& sig) {
  std::string s;
  for (const auto& sl : sig) {
    char c = sl.kind == IndexKind::Primed ? 'p' : sl.kind == IndexKind::Unprimed ? 'u' : 't';
    s += sl.variance == Variance::Up ? static_cast<char>(c - 32) : c;
  }
  return s;
}

Rational Epsilon::up(int a, int b) {
  if (a == b) return 0;
  return a == 0 ? 1 : -1;
}

Rational Epsilon::down(int a, int b) {
  if (a == b) return 0;
  return a == 0 ? -1 : 1;
}

const std::vector<std::pair<std::vector<int>, int>>& permutations_with_sign(int m) {
  static std::mutex mu;
  static std::map<int, std::vector<std::pair<std::vector<int>, int>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<std::vector<int>, int>> out;
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (p[i] > p[j]) ++inversions;
    out.emplace_back(p, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(p.begin(), p.end()));
  return cache.emplace(m, std::move(out)).first->second;
}

int index_dimension(IndexKind kind, int n) {
  switch (kind) {
    case IndexKind::Primed: return 2;
    case IndexKind::Unprimed: return n;
    case IndexKind::Tractor: return n + 2;
  }
  return 0;
}

Tensor::Tensor(int n, Signature sig, int weight) : n_(n), sig_(std::move(sig)), weight_(weight) {
  if (n < 1) throw DomainError("Tensor: n must be positive");
  dims_.resize(sig_.size());
  strides_.resize(sig_.size());
  std::size_t total = 1;
  for (std::size_t i = sig_.size(); i-- > 0;) {
    dims_[i] = index_dimension(sig_[i].kind, n);
    strides_[i] = total;
    total *= static_cast<std::size_t>(dims_[i]);
  }
  data_.assign(total, Rational{});
}

std::size_t Tensor::offset(std::span<const int> idx) const {
  if (idx.size() != sig_.size()) throw ArityError("Tensor::offset: wrong number of indices");
  std::size_t off = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= dims_[i]) throw DomainError("Tensor::offset: index out of range");
    off += strides_[i] * static_cast<std::size_t>(idx[i]);
  }
  return off;
}

bool Tensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_zero(); });
}

std::size_t Tensor::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Rational& r) { return !r.is_zero(); }));
}

void Tensor::require_compatible(const Tensor& o, const char* what) const {
  if (n_ != o.n_ || sig_ != o.sig_)
    throw TypeError(std::string(what) + ": signature mismatch " + to_string(sig_) + " vs " +
                    to_string(o.sig_));
}

Tensor& Tensor::operator+=(const Tensor& o) {
  require_compatible(o, "Tensor::operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  require_compatible(o, "Tensor::operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor& Tensor::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

bool operator==(const Tensor& a, const Tensor& b) {
  return a.n_ == b.n_ && a.sig_ == b.sig_ && a.weight_ == b.weight_ && a.data_ == b.data_;
}

Tensor Tensor::permuted(std::span<const int> perm) const {
  const int r = rank();
  if (static_cast<int>(perm.size()) != r) throw ArityError("Tensor::permuted: bad permutation");
  std::vector<bool> seen(static_cast<std::size_t>(r), false);
  Signature sig(static_cast<std::size_t>(r));
  std::vector<std::size_t> src_stride(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    if (perm[i] < 0 || perm[i] >= r || seen[perm[i]])
      throw ArityError("Tensor::permuted: not a permutation");
    seen[perm[i]] = true;
    sig[i] = sig_[perm[i]];
    src_stride[i] = strides_[perm[i]];
  }
  Tensor out(n_, std::move(sig), weight_);
  if (r == 0) {
    out.data_[0] = data_[0];
    return out;
  }
  std::vector<int> idx(static_cast<std::size_t>(r), 0);
  std::size_t src = 0;
  for (std::size_t dst = 0; dst < out.data_.size(); ++dst) {
    out.data_[dst] = data_[src];
    for (int s = r - 1; s >= 0; --s) {
      if (++idx[s] < out.dims_[s]) {
        src += src_stride[s];
        break;
      }
      src -= src_stride[s] * static_cast<std::size_t>(idx[s] - 1);
      idx[s] = 0;
    }
  }
  return out;
}

Tensor Tensor::signed_permutation_average(std::span<const int> slots, bool with_sign) const {
  const int m = static_cast<int>(slots.size());
  if (m <= 1) return *this;
  for (int s : slots) {
    if (s < 0 || s >= rank()) throw DomainError("symmetrize/alternate: slot out of range");
    if (!(sig_[s] == sig_[slots[0]]))
      throw TypeError("symmetrize/alternate: slots must share kind and variance");
  }
  Tensor out(n_, sig_, weight_);
  std::vector<int> full(static_cast<std::size_t>(rank()));
  long count = 0;
  for (const auto& [p, sign] : permutations_with_sign(m)) {
    std::iota(full.begin(), full.end(), 0);
    for (int i = 0; i < m; ++i) full[slots[i]] = slots[p[i]];
    Tensor term = permuted(full);
    if (with_sign && sign < 0)
      out -= term;
    else
      out += term;
    ++count;
  }
  out *= Rational(1, count);
  return out;
}

Tensor Tensor::symmetrize(std::span<const int> slots) const {
  return signed_permutation_average(slots, false);
}

Tensor Tensor::alternate(std::span<const int> slots) const {
  return signed_permutation_average(slots, true);
}

Tensor Tensor::contract(int slot_up, int slot_down) const {
  if (slot_up < 0 || slot_up >= rank() || slot_down < 0 || slot_down >= rank() ||
      slot_up == slot_down)
    throw DomainError("Tensor::contract: bad slots");
  const Slot& u = sig_[slot_up];
  const Slot& d = sig_[slot_down];
  if (u.kind != d.kind) throw TypeError("Tensor::contract: index kinds differ");
  if (u.variance != Variance::Up || d.variance != Variance::Down)
    throw TypeError("Tensor::contract: need one up and one down slot");
  Signature sig;
  std::vector<int> keep;
  for (int i = 0; i < rank(); ++i)
    if (i != slot_up && i != slot_down) {
      sig.push_back(sig_[i]);
      keep.push_back(i);
    }
  Tensor out(n_, std::move(sig), weight_);
  const int d_len = dims_[slot_up];
  std::vector<int> src(static_cast<std::size_t>(rank()));
  out.for_each_index([&](std::span<const int> idx, std::size_t flat) {
    for (std::size_t i = 0; i < keep.size(); ++i) src[keep[i]] = idx[i];
    Rational acc;
    for (int a = 0; a < d_len; ++a) {
      src[slot_up] = a;
      src[slot_down] = a;
      acc += at(src);
    }
    out.data_[flat] = acc;
  });
  return out;
}

Tensor Tensor::raise_primed(int slot) const {
  if (slot < 0 || slot >= rank()) throw DomainError("raise_primed: slot out of range");
  if (!(sig_[slot] == kPrimedDown)) throw TypeError("raise_primed: slot must be primed-down");
  Signature sig = sig_;
  sig[slot] = kPrimedUp;
  Tensor out(n_, std::move(sig), weight_ + 1);
  std::vector<int> src;
  out.for_each_index([&](std::span<const int> idx, std::size_t flat) {
    src.assign(idx.begin(), idx.end());
    Rational acc;
    for (int a = 0; a < 2; ++a) {
      src[slot] = a;
      acc += at(src) * Epsilon::up(a, idx[slot]);
    }
    out.data_[flat] = acc;
  });
  return out;
}

Tensor Tensor::lower_primed(int slot) const {
  if (slot < 0 || slot >= rank()) throw DomainError("lower_primed: slot out of range");
  if (!(sig_[slot] == kPrimedUp)) throw TypeError("lower_primed: slot must be primed-up");
  Signature sig = sig_;
  sig[slot] = kPrimedDown;
  Tensor out(n_, std::move(sig), weight_ - 1);
  std::vector<int> src;
  out.for_each_index([&](std::span<const int> idx, std::size_t flat) {
    src.assign(idx.begin(), idx.end());
    Rational acc;
    for (int a = 0; a < 2; ++a) {
      src[slot] = a;
      acc += at(src) * Epsilon::down(a, idx[slot]);
    }
    out.data_[flat] = acc;
  });
  return out;
}

void Tensor::for_each_index(
    const std::function<void(std::span<const int>, std::size_t)>& fn) const {
  const int r = rank();
  std::vector<int> idx(static_cast<std::size_t>(r), 0);
  for (std::size_t flat = 0; flat < data_.size(); ++flat) {
    fn(idx, flat);
    for (int s = r - 1; s >= 0; --s) {
      if (++idx[s] < dims_[s]) break;
      idx[s] = 0;
    }
  }
}

std::string Tensor::describe(std::size_t max_entries) const {
  std::ostringstream os;
  os << "sig=" << to_string(sig_) << " n=" << n_ << " w=" << weight_ << " nonzero={";
  std::size_t shown = 0;
  bool truncated = false;
  for_each_index([&](std::span<const int> idx, std::size_t flat) {
    if (data_[flat].is_zero()) return;
    if (shown == max_entries) {
      truncated = true;
      return;
    }
    if (shown++) os << ", ";
    os << '(';
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << ")=" << data_[flat];
  });
  if (truncated) os << ", ...";
  os << '}';
  return os.str();
}

Tensor outer(const Tensor& a, const Tensor& b) {
  if (a.n() != b.n()) throw TypeError("outer: unprimed dimensions differ");
  Signature sig = a.signature();
  sig.insert(sig.end(), b.signature().begin(), b.signature().end());
  Tensor out(a.n(), std::move(sig), a.weight() + b.weight());
  const std::size_t nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < nb; ++j)
      if (!b[j].is_zero()) out[i * nb + j] = a[i] * b[j];
  }
  return out;
}

}  // namespace tcas
