#include "tcas/exterior.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "tcas/errors.hpp"

namespace tcas {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ExteriorBasis::ExteriorBasis(int dim, int k) : dim_(dim), k_(k) {
  if (dim < 1 || dim > 20) throw DomainError("ExteriorBasis: dimension out of range");
  if (k < 0 || k > dim) throw DomainError("ExteriorBasis: degree out of range");
  index_of_mask_.assign(std::size_t{1} << dim, -1);
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    unsigned mask = 0;
    for (int x : cur) mask |= 1u << x;
    index_of_mask_[mask] = static_cast<int>(sets_.size());
    primed_.push_back(static_cast<int>(std::count_if(cur.begin(), cur.end(), [](int x) { return x < 2; })));
    sets_.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == dim - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

std::pair<int, int> ExteriorBasis::locate(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != k_) throw ArityError("ExteriorBasis::locate: wrong length");
  unsigned mask = 0;
  for (int x : tuple) {
    if (x < 0 || x >= dim_) throw DomainError("ExteriorBasis::locate: index out of range");
    if (mask & (1u << x)) return {0, 0};
    mask |= 1u << x;
  }
  int inversions = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (tuple[i] > tuple[j]) ++inversions;
  return {index_of_mask_[mask], inversions % 2 ? -1 : 1};
}

const ExteriorBasis& exterior_basis(int dim, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<ExteriorBasis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{dim, k}];
  if (!slot) slot = std::make_unique<ExteriorBasis>(dim, k);
  return *slot;
}

FormPair::FormPair(int n, int k) : n_(n), k_(k), basis_(&exterior_basis(n + 2, k)) {
  m_.assign(static_cast<std::size_t>(side()) * side(), Rational{});
}

bool FormPair::is_zero() const {
  return std::all_of(m_.begin(), m_.end(), [](const Rational& r) { return r.is_zero(); });
}

FormPair FormPair::transposed() const {
  FormPair out(n_, k_);
  for (int s = 0; s < side(); ++s)
    for (int t = 0; t < side(); ++t) out(t, s) = (*this)(s, t);
  return out;
}

FormPair FormPair::symmetrized() const {
  FormPair out = *this + transposed();
  out *= Rational(1, 2);
  return out;
}

FormPair& FormPair::operator+=(const FormPair& o) {
  if (n_ != o.n_ || k_ != o.k_) throw TypeError("FormPair: shape mismatch");
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
  return *this;
}

FormPair& FormPair::operator-=(const FormPair& o) {
  if (n_ != o.n_ || k_ != o.k_) throw TypeError("FormPair: shape mismatch");
  for (std::size_t i = 0; i < m_.size(); ++i) m_[i] -= o.m_[i];
  return *this;
}

FormPair& FormPair::operator*=(const Rational& s) {
  for (auto& x : m_) x *= s;
  return *this;
}

Tensor FormPair::to_dense() const {
  Tensor out(n_, repeat(kTractorDown, 2 * k_));
  out.for_each_index([&](std::span<const int> idx, std::size_t flat) {
    auto [s, ss] = basis_->locate(idx.subspan(0, k_));
    if (!ss) return;
    auto [t, ts] = basis_->locate(idx.subspan(k_));
    if (!ts) return;
    out[flat] = Rational(ss * ts) * (*this)(s, t);
  });
  return out;
}

FormPair FormPair::from_dense(const Tensor& t, int k) {
  if (t.signature() != repeat(kTractorDown, 2 * k))
    throw TypeError("FormPair::from_dense: expected 2k tractor-down slots");
  FormPair out(t.n(), k);
  std::vector<int> idx(static_cast<std::size_t>(2 * k));
  for (int s = 0; s < out.side(); ++s)
    for (int u = 0; u < out.side(); ++u) {
      std::copy(out.basis().set(s).begin(), out.basis().set(s).end(), idx.begin());
      std::copy(out.basis().set(u).begin(), out.basis().set(u).end(), idx.begin() + k);
      out(s, u) = t.at(idx);
    }
  return out;
}

namespace {

std::vector<int> range(int from, int to) {
  std::vector<int> r;
  for (int i = from; i < to; ++i) r.push_back(i);
  return r;
}

Signature coefficient_signature(int p, int q, int k) {
  return concat({repeat(kPrimedDown, p), repeat(kUnprimedDown, k - p), repeat(kPrimedDown, q),
                 repeat(kUnprimedDown, k - q)});
}

// Spinor indices of a tractor basis element: primed coordinates first, then unprimed (shifted).
void spinor_indices(const std::vector<int>& set, std::vector<int>& out) {
  for (int x : set) out.push_back(x < 2 ? x : x - 2);
}

}  // namespace

FormPair injector_image(const Tensor& coefficient, int p, int q, int k) {
  if (coefficient.signature() != coefficient_signature(p, q, k))
    throw TypeError("injector_image: coefficient signature " + to_string(coefficient.signature()) +
                    " does not match (p, q) = (" + std::to_string(p) + ", " + std::to_string(q) + ")");
  Tensor c = coefficient;
  for (auto group : {range(0, p), range(p, k), range(k, k + q), range(k + q, 2 * k)})
    if (group.size() > 1) c = c.alternate(group);
  FormPair out(c.n(), k);
  const Rational scale(1, binomial(k, p) * binomial(k, q));
  const auto& b = out.basis();
  std::vector<int> idx;
  for (int s = 0; s < out.side(); ++s) {
    if (b.primed_count(s) != p) continue;
    for (int t = 0; t < out.side(); ++t) {
      if (b.primed_count(t) != q) continue;
      idx.clear();
      spinor_indices(b.set(s), idx);
      spinor_indices(b.set(t), idx);
      out(s, t) = c.at(idx) * scale;
    }
  }
  return out;
}

Tensor read_injector_block(const FormPair& v, int p, int q) {
  const int k = v.k();
  Tensor out(v.n(), coefficient_signature(p, q, k));
  const Rational scale(binomial(k, p) * binomial(k, q));
  const auto& b = v.basis();
  std::vector<int> first(static_cast<std::size_t>(k)), second(static_cast<std::size_t>(k));
  out.for_each_index([&](std::span<const int> idx, std::size_t flat) {
    for (int i = 0; i < k; ++i) {
      first[i] = i < p ? idx[i] : idx[i] + 2;
      second[i] = i < q ? idx[k + i] : idx[k + i] + 2;
    }
    auto [s, ss] = b.locate(first);
    if (!ss) return;
    auto [t, ts] = b.locate(second);
    if (!ts) return;
    out[flat] = Rational(ss * ts) * scale * v(s, t);
  });
  return out;
}

namespace {

void require_one_form(const Tensor& phi) {
  if (phi.signature() != Signature{kPrimedUp, kUnprimedDown})
    throw TypeError("bullet: one-form must have signature [primed-up, unprimed-down], got " +
                    to_string(phi.signature()));
}

}  // namespace

std::vector<Rational> bullet_matrix(const Tensor& phi, int n, int k) {
  require_one_form(phi);
  if (phi.n() != n) throw TypeError("bullet_matrix: dimension mismatch");
  const auto& b = exterior_basis(n + 2, k);
  const int side = b.size();
  std::vector<Rational> d(static_cast<std::size_t>(side) * side);
  std::vector<int> tuple;
  for (int s = 0; s < side; ++s) {
    const auto& set = b.set(s);
    for (int i = 0; i < k; ++i) {
      if (set[i] < 2) continue;
      const int a = set[i] - 2;
      for (int beta = 0; beta < 2; ++beta) {
        const Rational& f = phi.at({beta, a});
        if (f.is_zero()) continue;
        tuple = set;
        tuple[i] = beta;
        auto [t, sign] = b.locate(tuple);
        if (sign) d[static_cast<std::size_t>(s) * side + t] -= Rational(sign) * f;
      }
    }
  }
  return d;
}

FormPair bullet(const Tensor& phi, const FormPair& v) {
  const auto d = bullet_matrix(phi, v.n(), v.k());
  const int side = v.side();
  FormPair out(v.n(), v.k());
  for (int s = 0; s < side; ++s)
    for (int u = 0; u < side; ++u) {
      const Rational& x = d[static_cast<std::size_t>(s) * side + u];
      if (x.is_zero()) continue;
      for (int t = 0; t < side; ++t) {
        out(s, t) += x * v(u, t);
        out(t, s) += x * v(t, u);
      }
    }
  return out;
}

std::vector<Rational> alternate_first_k_plus_one(const FormPair& v) {
  const int k = v.k();
  const int dim = v.n() + 2;
  if (k < 1 || k + 1 > dim) throw DomainError("alternate_first_k_plus_one: degree out of range");
  const auto& big = exterior_basis(dim, k + 1);
  const auto& small = exterior_basis(dim, k - 1);
  const auto& b = v.basis();
  std::vector<Rational> out(static_cast<std::size_t>(big.size()) * small.size());
  std::vector<int> head, tail;
  for (int r = 0; r < big.size(); ++r) {
    const auto& rs = big.set(r);
    for (int c = 0; c < small.size(); ++c) {
      Rational acc;
      for (int i = 0; i <= k; ++i) {
        head.clear();
        for (int j = 0; j <= k; ++j)
          if (j != i) head.push_back(rs[j]);
        tail.assign(1, rs[i]);
        tail.insert(tail.end(), small.set(c).begin(), small.set(c).end());
        auto [t, ts] = b.locate(tail);
        if (!ts) continue;
        auto [s, ss] = b.locate(head);
        const int sign = ((k - i) % 2 ? -1 : 1) * ts * ss;
        acc += Rational(sign) * v(s, t);
      }
      out[static_cast<std::size_t>(r) * small.size() + c] = acc * Rational(1, k + 1);
    }
  }
  return out;
}

Tensor bullet_dense(const Tensor& phi, const Tensor& t) {
  require_one_form(phi);
  Tensor out(t.n(), t.signature(), t.weight());
  std::vector<int> slots;
  for (int i = 0; i < t.rank(); ++i)
    if (t.slot(i) == kTractorDown) slots.push_back(i);
  std::vector<int> src;
  out.for_each_index([&](std::span<const int> idx, std::size_t flat) {
    Rational acc;
    for (int s : slots) {
      if (idx[s] < 2) continue;
      const int a = idx[s] - 2;
      src.assign(idx.begin(), idx.end());
      for (int beta = 0; beta < 2; ++beta) {
        src[s] = beta;
        acc -= phi.at({beta, a}) * t.at(src);
      }
    }
    out[flat] = acc;
  });
  return out;
}

namespace {

// Outer product of the given injectors, reordered to [all spinor slots | all tractor slots]
// and alternated over the tractor slots.
Tensor alternated_injector(const std::vector<const Tensor*>& parts) {
  Tensor acc = *parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = outer(acc, *parts[i]);
  const int k = static_cast<int>(parts.size());
  std::vector<int> perm(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < k; ++i) {
    perm[i] = 2 * i;
    perm[k + i] = 2 * i + 1;
  }
  return acc.permuted(perm).alternate(range(k, 2 * k));
}

}  // namespace

InjectorBasis InjectorBasis::build(int n, int k) {
  if (k < 2 || k > n) throw DomainError("InjectorBasis: k must lie in 2..n");
  InjectorBasis ib{n, k, Tensor(n, {kUnprimedUp, kTractorDown}), Tensor(n, {kPrimedUp, kTractorDown}),
                   {}, {}, {}};
  for (int a = 0; a < n; ++a) ib.X.at({a, a + 2}) = 1;
  for (int a = 0; a < 2; ++a) ib.Y.at({a, a}) = 1;
  std::vector<const Tensor*> parts(static_cast<std::size_t>(k), &ib.X);
  ib.XX = alternated_injector(parts);
  parts[0] = &ib.Y;
  ib.WW = alternated_injector(parts);
  parts[1] = &ib.Y;
  ib.YY = alternated_injector(parts);
  return ib;
}

}  // namespace tcas
