#include "tcas/symmetry.hpp"

#include <cstdint>
#include <map>
#include <unordered_map>

#include "tcas/errors.hpp"

namespace tcas {

std::string SymmetryClass::label() const {
  switch (kind) {
    case SymmetryKind::WType: return "W-type";
    case SymmetryKind::CYType: return "CY-type";
    case SymmetryKind::Generic: return "generic";
  }
  return "?";
}

int SymmetryClass::symmetric_unprimed() const { return kind == SymmetryKind::Generic ? 0 : 3; }

Signature SymmetryClass::signature() const {
  switch (kind) {
    case SymmetryKind::WType:
      return {kPrimedUp, kPrimedUp, kUnprimedUp, kUnprimedDown, kUnprimedDown, kUnprimedDown};
    case SymmetryKind::CYType:
      return {kPrimedUp, kPrimedUp, kPrimedUp, kUnprimedDown, kUnprimedDown, kUnprimedDown};
    case SymmetryKind::Generic: break;
  }
  return {kPrimedUp, kPrimedUp, kUnprimedDown, kUnprimedDown, kUnprimedDown};
}

bool SymmetryClass::contains(const Tensor& t) const {
  if (t.signature() != signature()) throw TypeError("SymmetryClass::contains: signature mismatch");
  if (kind == SymmetryKind::Generic) return true;
  if (!(t.alternate({0, 1}) == t)) return false;
  if (!(t.symmetrize({3, 4, 5}) == t)) return false;
  if (kind == SymmetryKind::WType && !t.contract(2, 3).is_zero()) return false;
  return true;
}

namespace {

// Permutations of at most 16 slots packed four bits per position.
using Perm = std::uint64_t;
using GroupElement = std::map<Perm, std::int64_t>;

int image(Perm p, int i) { return static_cast<int>((p >> (4 * i)) & 0xF); }

Perm identity(int n) {
  Perm p = 0;
  for (int i = 0; i < n; ++i) p |= static_cast<Perm>(i) << (4 * i);
  return p;
}

Perm compose(Perm a, Perm b, int n) {  // (a o b)(i) = a(b(i))
  Perm out = 0;
  for (int i = 0; i < n; ++i) out |= static_cast<Perm>(image(a, image(b, i))) << (4 * i);
  return out;
}

GroupElement slot_sum(const std::vector<int>& slots, bool signed_sum, int n) {
  GroupElement out;
  const int m = static_cast<int>(slots.size());
  for (const auto& [p, sign] : permutations_with_sign(m)) {
    Perm pi = identity(n);
    for (int i = 0; i < m; ++i) {
      pi &= ~(static_cast<Perm>(0xF) << (4 * slots[i]));
      pi |= static_cast<Perm>(slots[p[i]]) << (4 * slots[i]);
    }
    out[pi] += signed_sum ? sign : 1;
  }
  return out;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b, int n) {
  GroupElement out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) out[compose(pa, pb, n)] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// True when the operator annihilates every basis tensor of (R^dim)^{(x) slots}.
bool annihilates(const GroupElement& e, int slots, int dim) {
  if (e.empty()) return true;
  std::vector<std::vector<int>> inverse;
  std::vector<std::int64_t> coeff;
  for (const auto& [p, c] : e) {
    std::vector<int> inv(static_cast<std::size_t>(slots));
    for (int i = 0; i < slots; ++i) inv[image(p, i)] = i;
    inverse.push_back(std::move(inv));
    coeff.push_back(c);
  }
  std::uint64_t total = 1;
  for (int i = 0; i < slots; ++i) total *= static_cast<std::uint64_t>(dim);
  std::vector<int> j(static_cast<std::size_t>(slots));
  std::unordered_map<std::uint64_t, std::int64_t> acc;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = slots - 1; i >= 0; --i) {
      j[i] = static_cast<int>(c % dim);
      c /= dim;
    }
    acc.clear();
    for (std::size_t t = 0; t < coeff.size(); ++t) {
      std::uint64_t key = 0;
      for (int q = 0; q < slots; ++q) key = key * dim + j[inverse[t][q]];
      acc[key] += coeff[t];
    }
    for (const auto& kv : acc)
      if (kv.second != 0) return false;
  }
  return true;
}

GroupElement young_operator(const YoungDiagram& d) {
  const int n = d.boxes();
  GroupElement rows{{identity(n), 1}};
  for (int r = 0; r < d.tallest(); ++r) {
    auto pos = d.row_positions(r);
    if (pos.size() > 1) rows = multiply(rows, slot_sum(pos, false, n), n);
  }
  GroupElement cols{{identity(n), 1}};
  for (int c = 0; c < static_cast<int>(d.columns().size()); ++c) {
    auto pos = d.column_positions(c);
    if (pos.size() > 1) cols = multiply(cols, slot_sum(pos, true, n), n);
  }
  return multiply(cols, rows, n);
}

}  // namespace

bool projection_kills_symmetric(const SymmetryClass& c, Component target, int n, int k) {
  if (target != Component::Nu && target != Component::Rho)
    throw DomainError("projection_kills_symmetric: target must be a bottom-two-slot bundle");
  if (k < 2 || k > n) throw DomainError("projection_kills_symmetric: need 2 <= k <= n");
  const YoungDiagram d = component_diagram(target, k);
  const int slots = d.boxes();
  if (slots > 15) throw DomainError("projection_kills_symmetric: too many slots");
  const GroupElement young = young_operator(d);
  const int sym = c.symmetric_unprimed();
  if (sym == 0 || sym > slots) return annihilates(young, slots, n);
  std::vector<int> chosen;
  bool all = true;
  auto rec = [&](auto&& self, int start) -> void {
    if (!all) return;
    if (static_cast<int>(chosen.size()) == sym) {
      if (!annihilates(multiply(young, slot_sum(chosen, false, slots), slots), slots, n)) all = false;
      return;
    }
    for (int s = start; s < slots; ++s) {
      chosen.push_back(s);
      self(self, s + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return all;
}

bool projection_kills_symmetric(const SymmetryClass& c, const IrreducibleBundle& target, int n, int k) {
  const auto series = tractor_T_series(k, n);
  if (target == series.slots[3][0]) return projection_kills_symmetric(c, Component::Nu, n, k);
  if (target == series.slots[4][0]) return projection_kills_symmetric(c, Component::Rho, n, k);
  throw DomainError("projection_kills_symmetric: target " + target.str() +
                    " is not a bottom-two-slot bundle of the series");
}

}  // namespace tcas
