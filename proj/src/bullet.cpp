#include "tcas/bullet.hpp"

#include <numeric>

#include "tcas/errors.hpp"

namespace tcas {

namespace {

std::vector<int> seq(int from, int to) {
  std::vector<int> r(static_cast<std::size_t>(std::max(0, to - from)));
  std::iota(r.begin(), r.end(), from);
  return r;
}

std::vector<int> join(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Tensor alt(const Tensor& t, std::vector<int> slots) {
  return slots.size() > 1 ? t.alternate(slots) : t;
}

}  // namespace

Tensor basis_one_form(int n, int primed, int unprimed) {
  Tensor e(n, {kPrimedUp, kUnprimedDown});
  e.at({primed, unprimed}) = 1;
  return e;
}

std::vector<Tensor> basis_one_forms(int n) {
  std::vector<Tensor> out;
  for (int p = 0; p < 2; ++p)
    for (int a = 0; a < n; ++a) out.push_back(basis_one_form(n, p, a));
  return out;
}

TSection bullet_on_T(const Tensor& phi, const TSection& s, const ActionCoefficients& coeffs) {
  if (phi.signature() != Signature{kPrimedUp, kUnprimedDown})
    throw TypeError("bullet_on_T: one-form must have signature [primed-up, unprimed-down]");
  if (phi.n() != s.n) throw TypeError("bullet_on_T: dimension mismatch");
  const int k = s.k;
  const Tensor phi_low = phi.lower_primed(0);
  TSection out = TSection::zero(s.n, k);

  // mu' : [A' | A_2..A_k | B_3..B_k]
  out.mu = coeffs.mu_row * alt(outer(phi, s.sigma), seq(1, k));

  // A' : [A' B' | A_2..A_k | B_2..B_k]
  {
    Tensor t = outer(phi, s.mu);  // [A', x, B', mu-first (k-1), mu-second (k-2)]
    Tensor first = alt(t.permuted(join({{0, 2, 1}, seq(k + 2, 2 * k), seq(3, k + 2)})), seq(2, k + 1));
    Tensor second = alt(t.permuted(join({{0, 2}, seq(3, k + 2), {1}, seq(k + 2, 2 * k)})),
                        seq(k + 1, 2 * k));
    out.A = (first + second).symmetrize({0, 1});
  }

  // alpha' : [A_1..A_k | B_3..B_k]
  out.alpha = alt(outer(phi_low, s.mu).contract(2, 0), seq(0, k));

  // nu' : [A' | A_1..A_k | B_2..B_k]
  {
    Tensor t1 = outer(phi_low, s.A).contract(2, 0);  // [A_1, A', A-first, A-second]
    t1 = alt(t1.permuted(join({{1, 0}, seq(2, 2 * k)})), seq(1, k + 1));
    Tensor t = outer(phi, s.alpha);  // [A', x, alpha-first (k), alpha-second (k-2)]
    Tensor t2 = alt(t.permuted(join({{0}, seq(2, k + 2), {1}, seq(k + 2, 2 * k)})), seq(k + 1, 2 * k));
    Tensor t3 = alt(t, seq(1, k + 1));
    const Rational c3(k % 2 == 0 ? -k : k);
    out.nu = Rational(2) * t1 + Rational(2) * t2 + c3 * t3;
  }

  // rho' : [A_1..A_k | B_1..B_k]
  {
    Tensor t = outer(phi_low, s.nu).contract(2, 0);  // [x, nu-first (k), nu-second (k-1)]
    Tensor r1 = alt(t.permuted(join({{0}, seq(k + 1, 2 * k), seq(1, k + 1)})), seq(0, k));
    Tensor r2 = alt(t.permuted(join({seq(1, k + 1), {0}, seq(k + 1, 2 * k)})), seq(k, 2 * k));
    out.rho = coeffs.rho_row * (r1 + r2);
  }

  for (Component c : kAllComponents) out.component(c).set_weight(component_weight(c, k));
  out.sigma = Tensor(s.n, component_signature(Component::Sigma, k), component_weight(Component::Sigma, k));
  return out;
}

}  // namespace tcas
