#include "tcas/verma.hpp"

#include <array>
#include <numeric>

#include "tcas/errors.hpp"
#include "tcas/linalg.hpp"
#include "tcas/young.hpp"

namespace tcas {

Signature v_signature(int m) { return repeat(kUnprimedDown, 2 * m); }

Signature JetComponent::signature(int r, int k) {
  return concat({repeat(kPrimedUp, r), repeat(kUnprimedDown, r), v_signature(k - 2)});
}

JetComponent JetComponent::zero(int n, int r, int k) {
  if (k < 2) throw DomainError("JetComponent: need k >= 2");
  return {r, k, Tensor(n, signature(r, k))};
}

namespace {

void require_jet(const JetComponent& psi, int r) {
  if (psi.r != r) throw TypeError("jet component of degree " + std::to_string(r) + " expected");
  if (psi.value.signature() != JetComponent::signature(r, psi.k))
    throw TypeError("jet component: signature " + to_string(psi.value.signature()) + " does not match degree and k");
}

void require_leading(const Tensor& t, Slot slot, int count, const char* what) {
  if (t.rank() < count) throw TypeError(std::string(what) + ": rank too small");
  for (int i = 0; i < count; ++i)
    if (t.slot(i) != slot) throw TypeError(std::string(what) + ": leading slots have the wrong kind");
}

void require_z(const Tensor& Z) {
  if (Z.signature() != Signature{kPrimedUp, kUnprimedDown}) throw TypeError("g1 element must be (primed-up, unprimed-down)");
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Tensor weightless(Tensor t) {
  t.set_weight(0);
  return t;
}

}  // namespace

Tensor contraction_c(int i, const Tensor& omega) {
  static constexpr std::array<std::array<int, 4>, 3> pairs{{{0, 1, 2, 3}, {0, 3, 1, 2}, {0, 2, 3, 1}}};
  if (i < 1 || i > 3) throw DomainError("contraction_c: i must be 1, 2 or 3");
  require_leading(omega, kPrimedUp, 4, "contraction_c");
  const auto& pr = pairs[static_cast<std::size_t>(i - 1)];
  Signature rest(omega.signature().begin() + 4, omega.signature().end());
  Tensor out(omega.n(), rest, omega.weight());
  std::vector<int> full(static_cast<std::size_t>(omega.rank()));
  out.for_each_index([&](std::span<const int> idx, std::size_t flat) {
    std::copy(idx.begin(), idx.end(), full.begin() + 4);
    Rational acc;
    for (int code = 0; code < 16; ++code) {
      for (int s = 0; s < 4; ++s) full[s] = (code >> (3 - s)) & 1;
      const Rational e = Epsilon::down(full[pr[0]], full[pr[1]]) * Epsilon::down(full[pr[2]], full[pr[3]]);
      if (e.is_zero()) continue;
      const Rational& w = omega.at(full);
      if (!w.is_zero()) acc += e * w;
    }
    out[flat] = acc;
  });
  return out;
}

Tensor projection_p(int j, const Tensor& t) {
  // Slot orders (over A1 A2 B1 B2) of the two averaged terms.
  static constexpr std::array<std::array<std::array<int, 4>, 2>, 3> orders{{
      {{{0, 1, 2, 3}, {2, 3, 0, 1}}},
      {{{0, 2, 3, 1}, {2, 0, 1, 3}}},
      {{{0, 3, 1, 2}, {2, 1, 3, 0}}},
  }};
  if (j < 1 || j > 3) throw DomainError("projection_p: j must be 1, 2 or 3");
  require_leading(t, kUnprimedDown, 4, "projection_p");
  Tensor pair_avg(t.n(), t.signature(), t.weight());
  for (const auto& o : orders[static_cast<std::size_t>(j - 1)]) {
    std::vector<int> perm = identity_perm(t.rank());
    for (int s = 0; s < 4; ++s) perm[o[s]] = s;  // value at (x0..x3) reads t at x_{o[s]} in slot s
    pair_avg += t.permuted(perm);
  }
  pair_avg *= Rational(1, 2);
  return pair_avg.alternate({0, 1}).alternate({2, 3}) - t.alternate({0, 1, 2, 3});
}

Tensor v_k_projection(const Tensor& t, int k) {
  if (k < 2) throw DomainError("v_k_projection: need k >= 2");
  if (t.signature() != v_signature(k)) throw TypeError("v_k_projection: expected " + std::to_string(2 * k) + " unprimed-down slots");
  std::vector<int> perm{0, 1};
  for (int s = 0; s < k - 2; ++s) perm.push_back(4 + s);
  perm.push_back(2);
  perm.push_back(3);
  for (int s = 0; s < k - 2; ++s) perm.push_back(k + 2 + s);
  std::vector<int> a(static_cast<std::size_t>(k)), b(static_cast<std::size_t>(k));
  std::iota(a.begin(), a.end(), 0);
  std::iota(b.begin(), b.end(), k);
  return apply_normalized_projector(YoungDiagram({k, k}), t.permuted(perm).alternate(a).alternate(b));
}

Tensor phi_map(int i, int j, const JetComponent& psi) {
  if (i < 1 || i > 2 || j < 1 || j > 2) throw DomainError("phi_map: indices must be 1 or 2");
  require_jet(psi, 4);
  Tensor u = projection_p(j, contraction_c(i, psi.value));
  if (i != j) u *= Rational(-2);
  return weightless(v_k_projection(u, psi.k));
}

Tensor lift_map(const LiftCoefficients& c, const JetComponent& psi) {
  if (c.sum() != Rational(1)) throw ContractViolation("lift coefficients must satisfy K+L+M+N = 1, got " + c.sum().str());
  Tensor out = c.K * phi_map(1, 1, psi);
  if (!c.L.is_zero()) out += c.L * phi_map(1, 2, psi);
  if (!c.M.is_zero()) out += c.M * phi_map(2, 1, psi);
  if (!c.N.is_zero()) out += c.N * phi_map(2, 2, psi);
  return out;
}

Tensor phi_symbol(const JetComponent& psi) { return phi_map(1, 1, psi); }

Rational displayed_density_coefficient(int k) { return Rational(k - 2); }

JetComponent g1_action_first_sum(const Tensor& Z, const JetComponent& psi, const Rational& density) {
  require_z(Z);
  require_jet(psi, 3);
  const int k = psi.k;
  const int vslots = 2 * (k - 2);
  JetComponent out = JetComponent::zero(psi.value.n(), 4, k);
  std::vector<int> in(static_cast<std::size_t>(6 + vslots));
  out.value.for_each_index([&](std::span<const int> idx, std::size_t flat) {
    Rational acc;
    for (int i = 0; i < 4; ++i) {
      int q = 0;
      for (int s = 0; s < 4; ++s) {
        if (s == i) continue;
        in[q] = idx[s];
        in[3 + q] = idx[4 + s];
        ++q;
      }
      for (int s = 0; s < vslots; ++s) in[6 + s] = idx[8 + s];
      const int pi = idx[i];
      const int ui = idx[4 + i];
      if (!density.is_zero()) {
        const Rational& z = Z.at({pi, ui});
        if (!z.is_zero()) acc += density * z * psi.value.at(in);
      }
      for (int s = 0; s < vslots; ++s) {
        const Rational& z = Z.at({pi, idx[8 + s]});
        if (z.is_zero()) continue;
        in[6 + s] = ui;
        acc += z * psi.value.at(in);
        in[6 + s] = idx[8 + s];
      }
    }
    out.value[flat] = acc;
  });
  return out;
}

JetComponent g1_action_first_sum(const Tensor& Z, const JetComponent& psi) {
  return g1_action_first_sum(Z, psi, displayed_density_coefficient(psi.k));
}

JetComponent g1_action_second_sum(const Tensor& Z, const JetComponent& psi) {
  require_z(Z);
  require_jet(psi, 3);
  const int vslots = 2 * (psi.k - 2);
  JetComponent out = JetComponent::zero(psi.value.n(), 4, psi.k);
  std::vector<int> in(static_cast<std::size_t>(6 + vslots));
  out.value.for_each_index([&](std::span<const int> idx, std::size_t flat) {
    for (int s = 0; s < vslots; ++s) in[6 + s] = idx[8 + s];
    Rational acc;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        // X_i dropped; the bracket sits where X_j was.
        int q = 0;
        int jpos = 0;
        for (int s = 0; s < 4; ++s) {
          if (s == i) continue;
          if (s == j) jpos = q;
          in[q] = idx[s];
          in[3 + q] = idx[4 + s];
          ++q;
        }
        const int pi = idx[i], ui = idx[4 + i], pj = idx[j], uj = idx[4 + j];
        if (const Rational& z = Z.at({pi, uj}); !z.is_zero()) {
          in[jpos] = pj;
          in[3 + jpos] = ui;
          acc += z * psi.value.at(in);
        }
        if (const Rational& z = Z.at({pj, ui}); !z.is_zero()) {
          in[jpos] = pi;
          in[3 + jpos] = uj;
          acc += z * psi.value.at(in);
        }
      }
    }
    out.value[flat] = acc;
  });
  return out;
}

JetComponent g1_action(const Tensor& Z, const JetComponent& psi) {
  JetComponent out = g1_action_first_sum(Z, psi);
  out.value += g1_action_second_sum(Z, psi).value;
  return out;
}

std::vector<Tensor> witness_kernel_basis(int n) {
  const Signature sig{kPrimedUp, kUnprimedDown, kUnprimedDown, kUnprimedDown};
  std::vector<Tensor> candidates;
  RationalMatrix rows;
  Tensor e(n, sig);
  for (std::size_t f = 0; f < e.size(); ++f) {
    Tensor b(n, sig);
    b[f] = Rational(1);
    const Tensor a = b.alternate({1, 2});
    Tensor ker = a - a.alternate({1, 2, 3});
    if (ker.is_zero()) continue;
    rows.emplace_back(ker.data().begin(), ker.data().end());
    candidates.push_back(std::move(ker));
  }
  std::vector<Tensor> basis;
  for (std::size_t i : independent_rows(rows)) basis.push_back(candidates[i]);
  return basis;
}

Tensor witness_omega(const Tensor& wbar) {
  if (wbar.signature() != Signature{kPrimedUp, kUnprimedDown, kUnprimedDown, kUnprimedDown})
    throw TypeError("witness_omega: expected (primed-up, unprimed-down x3)");
  Tensor eps(wbar.n(), {kPrimedUp, kPrimedUp});
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) eps.at({a, b}) = Epsilon::up(a, b);
  return weightless(outer(eps, wbar));
}

JetComponent jet_product(const Tensor& omega, const Tensor& v, int k) {
  if (v.signature() != v_signature(k - 2)) throw TypeError("jet_product: V factor has the wrong shape");
  JetComponent psi{3, k, weightless(outer(omega, v))};
  require_jet(psi, 3);
  return psi;
}

namespace {

int k_of(const Tensor& v) { return v.rank() / 2 + 2; }

// Z_{I'X} wbar^{I'}_{PQR} in the slot order [X P Q R].
Tensor pairing_raw(const Tensor& Z, const Tensor& wbar) {
  require_z(Z);
  return weightless(outer(Z.lower_primed(0), wbar).contract(2, 0));
}

}  // namespace

Tensor lowered_pairing(const Tensor& Z, const Tensor& wbar) { return pairing_raw(Z, wbar).permuted({1, 2, 3, 0}); }

Tensor obstruction_witness(const LiftCoefficients& c, const Tensor& Z, const Tensor& wbar, const Tensor& v) {
  if (c.sum() != Rational(1)) throw ContractViolation("lift coefficients must satisfy K+L+M+N = 1, got " + c.sum().str());
  const int k = k_of(v);
  return lift_map(c, g1_action(Z, jet_product(witness_omega(wbar), v, k)));
}

Tensor obstruction_closed_form(const Tensor& Z, const Tensor& wbar, const Tensor& v) {
  const Tensor raw = pairing_raw(Z, wbar);  // [X P Q R]
  // Z_{I'B2} wbar_{A1A2B1}: X=B2, (P,Q,R)=(A1,A2,B1).
  // Z_{I'A2} wbar_{B1B2A1}: X=A2, (P,Q,R)=(B1,B2,A1).
  Tensor t = raw.permuted({1, 2, 3, 0}) + raw.permuted({3, 0, 1, 2});
  t *= Rational(1, 2);
  return weightless(v_k_projection(weightless(outer(t, v)), k_of(v)));
}

std::vector<Tensor> v_spanning_set(int n, int m) {
  if (m == 0) {
    Tensor one(n, {});
    one[0] = Rational(1);
    return {one};
  }
  const YoungDiagram d({m, m});
  std::vector<Tensor> candidates;
  RationalMatrix rows;
  const Signature sig = v_signature(m);
  Tensor shape(n, sig);
  for (std::size_t f = 0; f < shape.size(); ++f) {
    Tensor b(n, sig);
    b[f] = Rational(1);
    Tensor p = apply_normalized_projector(d, b);
    if (p.is_zero()) continue;
    rows.emplace_back(p.data().begin(), p.data().end());
    candidates.push_back(std::move(p));
  }
  std::vector<Tensor> basis;
  for (std::size_t i : independent_rows(rows)) basis.push_back(candidates[i]);
  return basis;
}

}  // namespace tcas
