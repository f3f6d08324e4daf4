#include <doctest.h>

#include "oracles/linear.hpp"
#include "oracles/verma_literal.hpp"
#include "tcas/errors.hpp"
#include "tcas/exterior.hpp"
#include "tcas/symbol.hpp"
#include "tcas/verma.hpp"

using namespace tcas;

namespace {

Tensor sample_xi(int n) {
  Tensor xi(n, {kPrimedUp, kUnprimedDown});
  for (int p = 0; p < 2; ++p)
    for (int a = 0; a < n; ++a) xi.at({p, a}) = Rational((3 * p + 2 * a + 1) % 5 - 2);
  return xi;
}

// xi_{J'A} = xi^{K'}_A eps_{K'J'}.
Rational xi_low(const Tensor& xi, int j, int a) {
  Rational acc;
  for (int k = 0; k < 2; ++k) acc += xi.at({k, a}) * oracle::eps_lower(k, j);
  return acc;
}

// 8 xi_{J'A1} xi_{I'B1} xi^{(I'}_{(B2} xi^{J')}_{A2)} with the symmetrization written out.
Tensor representative_literal(const Tensor& xi, const Tensor& sigma, int k) {
  const int n = xi.n();
  Tensor t(n, v_signature(2));
  t.for_each_index([&](std::span<const int> x, std::size_t flat) {
    const int a1 = x[0], a2 = x[1], b1 = x[2], b2 = x[3];
    Rational acc;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Rational sym = Rational(1, 4) * (xi.at({i, b2}) * xi.at({j, a2}) + xi.at({j, b2}) * xi.at({i, a2}) +
                                               xi.at({i, a2}) * xi.at({j, b2}) + xi.at({j, a2}) * xi.at({i, b2}));
        acc += Rational(8) * xi_low(xi, j, a1) * xi_low(xi, i, b1) * sym;
      }
    t[flat] = acc;
  });
  Tensor s = sigma;
  s.set_weight(0);
  return v_k_projection(outer(t, s), k);
}

}  // namespace

TEST_CASE("fourth power layout") {
  const Tensor xi = sample_xi(2);
  const Tensor f = fourth_power(xi);
  CHECK(f.at({0, 1, 0, 1, 1, 0, 1, 1}) == xi.at({0, 1}) * xi.at({1, 0}) * xi.at({0, 1}) * xi.at({1, 1}));
}

TEST_CASE("lattice covectors are unisolvent for degree-4 polynomials") {
  for (int n = 2; n <= 3; ++n) {
    const auto pts = lattice_covectors(n, 4);
    CHECK(static_cast<std::int64_t>(pts.size()) == binomial(2 * n + 3, 4));
    // Monomials of degree 4 evaluated at the points; the exponent vectors are
    // the same compositions of 4, read off the covector entries.
    std::vector<std::vector<Rational>> evals;
    for (const Tensor& y : pts) {
      std::vector<Rational> row;
      for (const Tensor& e : pts) {
        Rational mono(1);
        for (std::size_t f = 0; f < e.size(); ++f)
          for (std::int64_t p = 0; p < e[f].num(); ++p) mono *= y[f];
        row.push_back(mono);
      }
      evals.push_back(std::move(row));
    }
    CHECK(oracle::rank(evals) == pts.size());
  }
}

TEST_CASE("proportionality") {
  Tensor a(2, {kUnprimedDown});
  a.at({0}) = 2;
  a.at({1}) = -4;
  CHECK(proportionality(Rational(3) * a, a) == Rational(3));
  Tensor b = a;
  b.at({1}) = 1;
  CHECK_FALSE(proportionality(b, a).has_value());
  const Tensor zero(2, {kUnprimedDown});
  CHECK_FALSE(proportionality(a, zero).has_value());
  CHECK_THROWS_AS(proportionality(zero, zero), DomainError);
}

TEST_CASE("hand representative and contracted square") {
  for (auto [n, k] : {std::pair{2, 2}, std::pair{3, 3}}) {
    const auto sigmas = component_spanning_set(Component::Sigma, n, k);
    bool compared = false;
    for (const Tensor& xi : lattice_covectors(n, 2))
      for (const Tensor& sigma : sigmas) {
        const Tensor rep = path_representative(xi, sigma);
        CHECK(rep == representative_literal(xi, sigma, k));
        const Tensor target = nonstandard_symbol(fourth_power(xi), sigma);
        if (target.is_zero()) {
          CHECK(rep.is_zero());
          continue;
        }
        CHECK(proportionality(rep, target) == Rational(6));
        CHECK(proportionality(contracted_square(xi, sigma), target) == Rational(1));
        compared = true;
      }
    CHECK(compared);
  }
}

TEST_CASE("both paths are the same multiple of the nonstandard symbol") {
  for (auto [n, k] : {std::pair{2, 2}, std::pair{3, 2}}) {
    const PathConstants c = path_constants(n, k);
    CHECK(c.branch1 == c.branch2);
    CHECK_FALSE(c.branch1.is_zero());
    CHECK(c.samples > 0);
    MESSAGE("path constant at n=" << n << " k=" << k << ": " << c.branch1);
  }
}

TEST_CASE("zero inputs give zero paths") {
  const Tensor xi = sample_xi(2);
  const Tensor sigma0 = Tensor(2, component_signature(Component::Sigma, 2), component_weight(Component::Sigma, 2));
  CHECK(symbol_path(xi, sigma0, 1).is_zero());
  const auto sigmas = component_spanning_set(Component::Sigma, 2, 2);
  CHECK(symbol_path(Tensor(2, {kPrimedUp, kUnprimedDown}), sigmas.front(), 2).is_zero());
  CHECK_THROWS_AS(symbol_path(xi, sigmas.front(), 3), DomainError);
}

TEST_CASE("symbol of M o d and d o M vanishes, the sign mutation does not") {
  for (auto [n, k] : {std::pair{2, 2}, std::pair{3, 2}}) {
    CHECK(verify_Md_symbol_vanishes(n, k));
    CHECK_FALSE(verify_Md_symbol_vanishes(n, k, Rational(1)));
  }
}

TEST_CASE("nonstandard symbol on a totally symmetric argument matches the display") {
  const int n = 3, k = 2;
  const Tensor sigma = component_spanning_set(Component::Sigma, n, k).front();
  for (const Tensor& xi : lattice_covectors(n, 2)) {
    Tensor s = sigma;
    s.set_weight(0);
    Tensor val = outer(fourth_power(xi), s);
    val.set_weight(0);
    CHECK(nonstandard_symbol(fourth_power(xi), sigma) == oracle::phi_display(JetComponent{4, k, val}));
  }
}

TEST_CASE("arguments that kill every contraction give zero") {
  // Equal primed indices in the first pair: eps_{ab} vanishes on every entry.
  const int n = 2, k = 2;
  Tensor omega(n, concat({repeat(kPrimedUp, 4), repeat(kUnprimedDown, 4)}));
  omega.for_each_index([&](std::span<const int> x, std::size_t flat) {
    omega[flat] = (x[0] == x[1] && x[2] == x[3]) ? Rational(x[4] + x[5] - x[6] + 2 * x[7] + 1) : Rational(0);
  });
  CHECK(nonstandard_symbol(omega, component_spanning_set(Component::Sigma, n, k).front()).is_zero());
}
