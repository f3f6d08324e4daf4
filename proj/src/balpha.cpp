#include "tcas/balpha.hpp"

#include <numeric>

#include "tcas/errors.hpp"
#include "tcas/exterior.hpp"
#include "tcas/tractor_section.hpp"

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
  Tensor e(n, {kPrimedDown, kPrimedDown});
  e.at({0, 1}) = Epsilon::down(0, 1);
  e.at({1, 0}) = Epsilon::down(1, 0);
  return e;
}

// alpha eps_{C'D'} XX^{A..}_{(a} YY^{C'D'B..}_{b)}
FormPair xx_yy_term(const Tensor& alpha, int k) {
  Tensor c = outer(alpha, eps_down(alpha.n()))
                 .permuted(join({seq(0, k), {2 * k - 2, 2 * k - 1}, seq(k, 2 * k - 2)}));
  return injector_image(c, 0, 2, k).symmetrized();
}

// B_{A..B..} eps_{C'D'} WW^{C'A..}_{(a} WW^{D'B..}_{b)}
FormPair ww_ww_term(const Tensor& b, int k) {
  Tensor c = outer(eps_down(b.n()), b).permuted(join({{0}, seq(2, k + 1), {1}, seq(k + 1, 2 * k)}));
  return injector_image(c, 1, 1, k).symmetrized();
}

// First nonzero ratio num/den over matching entries, checking every entry.
bool solve_proportional(const std::vector<Rational>& lhs, const std::vector<Rational>& rhs,
                        Rational& out) {
  bool found = false;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (rhs[i].is_zero()) {
      if (!lhs[i].is_zero()) return false;
      continue;
    }
    Rational r = lhs[i] / rhs[i];
    if (!found) {
      out = r;
      found = true;
    } else if (!(r == out)) {
      return false;
    }
  }
  return found;
}

}  // namespace

Tensor b_from_alpha(const Tensor& alpha, const Rational& x, int k) {
  Tensor b = alpha.permuted(join({{0}, seq(k, 2 * k - 2), seq(1, k)}));
  if (k > 2) b = b.alternate(seq(0, k - 1));
  return x * b;
}

Tensor alpha_from_b(const Tensor& b, int k) { return b.alternate(seq(0, k)); }

BAlphaConstants verify_B_alpha(int n, int k, std::uint64_t seed, int samples) {
  if (k < 2 || k > n) throw DomainError("verify_B_alpha: need 2 <= k <= n");
  Lcg rng(seed);
  BAlphaConstants out;
  for (int i = 0; i < samples; ++i) {
    Tensor alpha = random_component(Component::Alpha, n, k, rng);
    if (alpha.is_zero()) continue;
    const auto w0 = alternate_first_k_plus_one(xx_yy_term(alpha, k));
    const auto w1 = alternate_first_k_plus_one(ww_ww_term(b_from_alpha(alpha, 1, k), k));
    std::vector<Rational> neg(w0.size());
    for (std::size_t j = 0; j < w0.size(); ++j) neg[j] = -w0[j];
    Rational x;
    if (!solve_proportional(neg, w1, x))
      throw EngineDefect("verify_B_alpha: alternation condition has no solution at (n,k) = (" +
                         std::to_string(n) + "," + std::to_string(k) + ")");
    const Tensor back = alpha_from_b(b_from_alpha(alpha, x, k), k);
    Rational y;
    if (!solve_proportional({alpha.data().begin(), alpha.data().end()},
                            {back.data().begin(), back.data().end()}, y))
      throw EngineDefect("verify_B_alpha: alpha is not proportional to the reconstructed B");
    if (out.samples > 0 && (!(x == out.b_coefficient) || !(y == out.alpha_coefficient)))
      throw EngineDefect("verify_B_alpha: samples disagree on the constants");
    out.b_coefficient = x;
    out.alpha_coefficient = y;
    ++out.samples;
  }
  if (out.samples == 0) throw EngineDefect("verify_B_alpha: every sample alpha vanished");
  return out;
}

}  // namespace tcas
