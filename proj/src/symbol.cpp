#include "tcas/symbol.hpp"

#include "tcas/errors.hpp"
#include "tcas/verma.hpp"

namespace tcas {

namespace {

int k_of_sigma(const Tensor& sigma) { return sigma.rank() / 2 + 2; }

TSection with_component(int n, int k, Component c, const Tensor& t) {
  if (t.signature() != component_signature(c, k))
    throw TypeError("section input for " + component_name(c) + " has signature " + to_string(t.signature()));
  TSection s = TSection::zero(n, k);
  Tensor& slot = s.component(c);
  slot = t;
  slot.set_weight(component_weight(c, k));
  return s;
}

TSection step(const Tensor& xi, const TSection& s, const ActionCoefficients& coeffs) {
  return bullet_on_T(xi, s, coeffs).projected();
}

void lattice(int dims, int remaining, std::vector<int>& c, std::vector<std::vector<int>>& out) {
  const auto pos = c.size();
  if (static_cast<int>(pos) == dims - 1) {
    c.push_back(remaining);
    out.push_back(c);
    c.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    c.push_back(v);
    lattice(dims, remaining - v, c, out);
    c.pop_back();
  }
}

}  // namespace

TSection keep_branch(const TSection& s, int branch) {
  if (branch != 1 && branch != 2) throw DomainError("branch must be 1 or 2");
  TSection out = TSection::zero(s.n, s.k);
  if (branch == 1) out.A = s.A;
  else out.alpha = s.alpha;
  return out;
}

Tensor fourth_power(const Tensor& xi) {
  if (xi.signature() != Signature{kPrimedUp, kUnprimedDown}) throw TypeError("fourth_power: expected a one-form");
  Tensor t = outer(outer(xi, xi), outer(xi, xi));
  t.set_weight(0);
  return t.permuted({0, 2, 4, 6, 1, 3, 5, 7});
}

Tensor symbol_path(const Tensor& xi, const Tensor& sigma, int branch, const ActionCoefficients& coeffs) {
  if (branch != 1 && branch != 2) throw DomainError("symbol_path: branch must be 1 or 2");
  const int k = k_of_sigma(sigma);
  TSection s = with_component(xi.n(), k, Component::Sigma, sigma).projected();
  s = step(xi, s, coeffs);
  s = keep_branch(step(xi, s, coeffs), branch);
  s = step(xi, s, coeffs);
  s = step(xi, s, coeffs);
  return s.rho;
}

Tensor nonstandard_symbol(const Tensor& omega, const Tensor& sigma) {
  const int k = k_of_sigma(sigma);
  Tensor sig = sigma;
  sig.set_weight(0);
  Tensor t = outer(omega, sig);
  t.set_weight(0);
  return phi_symbol(JetComponent{4, k, t});
}

std::vector<Tensor> lattice_covectors(int n, int degree) {
  std::vector<std::vector<int>> points;
  std::vector<int> c;
  lattice(2 * n, degree, c, points);
  const auto basis = basis_one_forms(n);
  std::vector<Tensor> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    Tensor xi(n, {kPrimedUp, kUnprimedDown});
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != 0) xi += Rational(p[i]) * basis[i];
    out.push_back(std::move(xi));
  }
  return out;
}

std::optional<Rational> proportionality(const Tensor& path, const Tensor& target) {
  if (path.size() != target.size()) throw TypeError("proportionality: shapes differ");
  std::optional<Rational> c;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (target[i].is_zero()) {
      if (!path[i].is_zero()) return std::nullopt;
      continue;
    }
    const Rational r = path[i] / target[i];
    if (!c) c = r;
    else if (*c != r) return std::nullopt;
  }
  if (!c) throw DomainError("proportionality: target is zero");
  return c;
}

namespace {

// f_{AB} = xi_{J'A} xi^{J'}_B.
Tensor contracted_pair(const Tensor& xi) {
  Tensor lowered = xi.lower_primed(0);
  lowered.set_weight(0);
  Tensor f = outer(lowered, xi).contract(2, 0);
  f.set_weight(0);
  return f;
}

// t [A1 A2 B1 B2] (x) sigma, projected to the bottom bundle.
Tensor project_with_sigma(const Tensor& t, const Tensor& sigma) {
  Tensor sig = sigma;
  sig.set_weight(0);
  return v_k_projection(outer(t, sig), k_of_sigma(sigma));
}

}  // namespace

Tensor contracted_square(const Tensor& xi, const Tensor& sigma) {
  const Tensor f = contracted_pair(xi);
  return project_with_sigma(outer(f, f), sigma);
}

Tensor path_representative(const Tensor& xi, const Tensor& sigma) {
  const Tensor f = contracted_pair(xi);
  const Tensor ff = outer(f, f);  // f(x0,x1) f(x2,x3)
  // 4 f_{A1A2} f_{B1B2} + 4 f_{A1B2} f_{B1A2}
  Tensor t = Rational(4) * ff + Rational(4) * ff.permuted({0, 3, 2, 1});
  return project_with_sigma(t, sigma);
}

PathConstants path_constants(int n, int k, const ActionCoefficients& coeffs) {
  PathConstants out;
  std::optional<Rational> c1, c2;
  const auto sigmas = component_spanning_set(Component::Sigma, n, k);
  for (const Tensor& xi : lattice_covectors(n, 4)) {
    for (const Tensor& sigma : sigmas) {
      const Tensor target = nonstandard_symbol(fourth_power(xi), sigma);
      const Tensor p1 = symbol_path(xi, sigma, 1, coeffs);
      const Tensor p2 = symbol_path(xi, sigma, 2, coeffs);
      if (target.is_zero()) {
        if (!p1.is_zero() || !p2.is_zero())
          throw EngineDefect("symbol path nonzero where the nonstandard symbol vanishes: xi " + xi.describe());
        continue;
      }
      for (auto [path, c] : {std::pair{&p1, &c1}, std::pair{&p2, &c2}}) {
        const auto r = proportionality(*path, target);
        if (!r) throw EngineDefect("symbol path not proportional to the nonstandard symbol: xi " + xi.describe());
        if (*c && **c != *r)
          throw EngineDefect("symbol path constant varies: " + (**c).str() + " vs " + r->str());
        *c = *r;
      }
      ++out.samples;
    }
  }
  if (!c1 || !c2) throw EngineDefect("nonstandard symbol vanished on every sample");
  out.branch1 = *c1;
  out.branch2 = *c2;
  return out;
}

TSection m_symbol(const Tensor& xi, const TSection& s, const Rational& sign, const ActionCoefficients& coeffs) {
  const TSection one = step(xi, s, coeffs);
  return step(xi, keep_branch(one, 1), coeffs) + sign * step(xi, keep_branch(one, 2), coeffs);
}

bool verify_Md_symbol_vanishes(int n, int k, const Rational& sign, const ActionCoefficients& coeffs) {
  if (k < 2 || k > n) throw DomainError("verify_Md_symbol_vanishes: need 2 <= k <= n");
  const auto covectors = lattice_covectors(n, 3);
  for (const Tensor& sigma : component_spanning_set(Component::Sigma, n, k)) {
    const TSection s = with_component(n, k, Component::Sigma, sigma);
    for (const Tensor& xi : covectors) {
      // M(d sigma): d sigma = xi.sigma sits in slot 1.
      if (!m_symbol(xi, step(xi, s, coeffs), sign, coeffs).nu.is_zero()) return false;
    }
  }
  for (const Tensor& mu : component_spanning_set(Component::Mu, n, k)) {
    const TSection s = with_component(n, k, Component::Mu, mu);
    for (const Tensor& xi : covectors)
      if (!step(xi, m_symbol(xi, s, sign, coeffs), coeffs).rho.is_zero()) return false;
  }
  return true;
}

}  // namespace tcas
