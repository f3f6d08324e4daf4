#include "tcas/tractor_section.hpp"

#include <numeric>
#include <set>
#include <sstream>

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

Tensor eps_down(int n) {
  Tensor e(n, {kPrimedDown, kPrimedDown}, -1);
  e.at({0, 1}) = Epsilon::down(0, 1);
  e.at({1, 0}) = Epsilon::down(1, 0);
  return e;
}

void require_range(int n, int k) {
  if (n < 2) throw DomainError("tractor section: n must be at least 2");
  if (k < 2 || k > n) throw DomainError("tractor section: k must lie in 2..n");
}

}  // namespace

std::string component_name(Component c) {
  switch (c) {
    case Component::Sigma: return "sigma";
    case Component::Mu: return "mu";
    case Component::A: return "A";
    case Component::Alpha: return "alpha";
    case Component::Nu: return "nu";
    case Component::Rho: return "rho";
  }
  return "?";
}

int component_slot(Component c) {
  switch (c) {
    case Component::Sigma: return 0;
    case Component::Mu: return 1;
    case Component::A:
    case Component::Alpha: return 2;
    case Component::Nu: return 3;
    case Component::Rho: return 4;
  }
  return -1;
}

int component_primed(Component c) {
  switch (c) {
    case Component::Mu:
    case Component::Nu: return 1;
    case Component::A: return 2;
    default: return 0;
  }
}

YoungDiagram component_diagram(Component c, int k) {
  switch (c) {
    case Component::Sigma: return YoungDiagram({k - 2, k - 2});
    case Component::Mu: return YoungDiagram({k - 1, k - 2});
    case Component::A: return YoungDiagram({k - 1, k - 1});
    case Component::Alpha: return YoungDiagram({k, k - 2});
    case Component::Nu: return YoungDiagram({k, k - 1});
    case Component::Rho: return YoungDiagram({k, k});
  }
  return {};
}

Signature component_signature(Component c, int k) {
  return concat({repeat(kPrimedUp, component_primed(c)),
                 repeat(kUnprimedDown, component_diagram(c, k).boxes())});
}

int component_weight(Component c, int k) {
  switch (component_slot(c)) {
    case 0:
    case 1: return 2 - k;
    case 2: return c == Component::A ? 2 - k : 1 - k;
    case 3: return 1 - k;
    default: return -k;
  }
}

Tensor project_component(Component c, const Tensor& t, int k) {
  if (t.signature() != component_signature(c, k))
    throw TypeError("project_component: " + component_name(c) + " expects signature " +
                    to_string(component_signature(c, k)) + ", got " + to_string(t.signature()));
  const int p = component_primed(c);
  const auto slots = seq(p, t.rank());
  Tensor out = apply_normalized_projector(component_diagram(c, k), t, slots);
  if (c == Component::A) out = out.symmetrize({0, 1});
  return out;
}

TSection TSection::zero(int n, int k) {
  require_range(n, k);
  TSection s;
  s.n = n;
  s.k = k;
  for (Component c : kAllComponents)
    s.component(c) = Tensor(n, component_signature(c, k), component_weight(c, k));
  return s;
}

Tensor& TSection::component(Component c) {
  switch (c) {
    case Component::Sigma: return sigma;
    case Component::Mu: return mu;
    case Component::A: return A;
    case Component::Alpha: return alpha;
    case Component::Nu: return nu;
    case Component::Rho: return rho;
  }
  throw DomainError("TSection::component: unknown component");
}

const Tensor& TSection::component(Component c) const {
  return const_cast<TSection*>(this)->component(c);
}

bool TSection::is_zero() const {
  for (Component c : kAllComponents)
    if (!component(c).is_zero()) return false;
  return true;
}

TSection TSection::projected() const {
  TSection out = *this;
  for (Component c : kAllComponents) out.component(c) = project_component(c, component(c), k);
  return out;
}

bool TSection::is_projected() const { return projected() == *this; }

TSection& TSection::operator+=(const TSection& o) {
  for (Component c : kAllComponents) component(c) += o.component(c);
  return *this;
}

TSection& TSection::operator-=(const TSection& o) {
  for (Component c : kAllComponents) component(c) -= o.component(c);
  return *this;
}

TSection& TSection::operator*=(const Rational& s) {
  for (Component c : kAllComponents) component(c) *= s;
  return *this;
}

bool operator==(const TSection& a, const TSection& b) {
  if (a.n != b.n || a.k != b.k) return false;
  for (Component c : kAllComponents)
    if (!(a.component(c) == b.component(c))) return false;
  return true;
}

std::string TSection::describe() const {
  std::ostringstream os;
  bool any = false;
  for (Component c : kAllComponents) {
    if (component(c).is_zero()) continue;
    os << (any ? "; " : "") << component_name(c) << ": " << component(c).describe();
    any = true;
  }
  if (!any) os << "zero section";
  return os.str();
}

FormPair alpha_mixed_block(const Tensor& alpha, int k) {
  Tensor c = outer(eps_down(alpha.n()), alpha)
                 .permuted(join({{0, 2}, seq(k + 2, 2 * k), {1}, seq(3, k + 2)}));
  c *= Rational(k, 2);
  return injector_image(c, 1, 1, k);
}

FormPair embed(const TSection& s) {
  require_range(s.n, s.k);
  const int n = s.n;
  const int k = s.k;
  const Tensor eps = eps_down(n);
  FormPair m(n, k);

  Tensor c = outer(outer(eps, eps), s.sigma)
                 .permuted(join({{0, 1}, seq(4, k + 2), {2, 3}, seq(k + 2, 2 * k)}));
  m += injector_image(c, 2, 2, k);

  c = outer(s.mu.lower_primed(0), eps)
          .permuted(join({seq(0, k), {2 * k - 2, 2 * k - 1}, seq(k, 2 * k - 2)}));
  m += injector_image(c, 1, 2, k);

  c = s.A.lower_primed(0).lower_primed(1).permuted(join({{0}, seq(2, k + 1), {1}, seq(k + 1, 2 * k)}));
  m += injector_image(c, 1, 1, k);

  c = outer(s.alpha, eps).permuted(join({seq(0, k), {2 * k - 2, 2 * k - 1}, seq(k, 2 * k - 2)}));
  m += injector_image(c, 0, 2, k);
  m += alpha_mixed_block(s.alpha, k);

  c = s.nu.lower_primed(0).permuted(join({seq(1, k + 1), {0}, seq(k + 1, 2 * k)}));
  m += injector_image(c, 0, 1, k);

  m += injector_image(s.rho, 0, 0, k);
  return m.symmetrized();
}

namespace {

// Entries of `c` with the primed slots at the given positions fixed to (0, 1),
// divided by eps_{01} once per fixed pair; remaining slots keep their order.
Tensor strip_eps_pairs(const Tensor& c, const std::vector<int>& pair_starts, Signature sig) {
  Tensor out(c.n(), std::move(sig));
  std::vector<int> src(static_cast<std::size_t>(c.rank()));
  std::vector<bool> fixed(src.size(), false);
  for (int p : pair_starts) fixed[p] = fixed[p + 1] = true;
  Rational scale(1);
  for (std::size_t i = 0; i < pair_starts.size(); ++i) scale /= Epsilon::down(0, 1);
  out.for_each_index([&](std::span<const int> idx, std::size_t flat) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (fixed[i]) continue;
      src[i] = idx[j++];
    }
    for (int p : pair_starts) {
      src[p] = 0;
      src[p + 1] = 1;
    }
    out[flat] = c.at(src) * scale;
  });
  return out;
}

}  // namespace

TSection extract(const FormPair& v) {
  const int n = v.n();
  const int k = v.k();
  TSection s = TSection::zero(n, k);
  const auto unprimed = [](int count) { return repeat(kUnprimedDown, count); };

  s.rho = read_injector_block(v, 0, 0);

  Tensor c = Rational(2) * read_injector_block(v, 0, 1);
  s.nu = c.permuted(join({{k}, seq(0, k), seq(k + 1, 2 * k)})).raise_primed(0);

  c = Rational(2) * read_injector_block(v, 0, 2);
  s.alpha = strip_eps_pairs(c, {k}, unprimed(2 * k - 2));

  c = Rational(2) * read_injector_block(v, 1, 2);
  s.mu = strip_eps_pairs(c, {k}, concat({{kPrimedDown}, unprimed(2 * k - 3)})).raise_primed(0);

  c = read_injector_block(v, 2, 2);
  s.sigma = strip_eps_pairs(c, {0, k}, unprimed(2 * k - 4));

  const FormPair rest = v - alpha_mixed_block(s.alpha, k).symmetrized();
  c = read_injector_block(rest, 1, 1);
  s.A = c.permuted(join({{0, k}, seq(1, k), seq(k + 1, 2 * k)})).raise_primed(0).raise_primed(1);

  for (Component comp : kAllComponents) s.component(comp).set_weight(component_weight(comp, k));
  return s;
}

std::vector<Tensor> component_spanning_set(Component c, int n, int k) {
  require_range(n, k);
  Tensor basis(n, component_signature(c, k), component_weight(c, k));
  std::vector<Tensor> out;
  std::set<std::vector<Rational>> seen;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Tensor e = basis;
    e[i] = 1;
    Tensor p = project_component(c, e, k);
    if (p.is_zero()) continue;
    std::vector<Rational> key(p.data().begin(), p.data().end());
    if (seen.insert(std::move(key)).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<TSection> section_spanning_set(int n, int k) {
  std::vector<TSection> out;
  for (Component c : kAllComponents)
    for (auto& t : component_spanning_set(c, n, k)) {
      TSection s = TSection::zero(n, k);
      s.component(c) = std::move(t);
      out.push_back(std::move(s));
    }
  return out;
}

Tensor random_component(Component c, int n, int k, Lcg& rng) {
  Tensor t(n, component_signature(c, k), component_weight(c, k));
  for (auto& x : t.data()) x = rng.small_value();
  return project_component(c, t, k);
}

TSection random_section(int n, int k, Lcg& rng) {
  TSection s = TSection::zero(n, k);
  for (Component c : kAllComponents) s.component(c) = random_component(c, n, k, rng);
  return s;
}

}  // namespace tcas
