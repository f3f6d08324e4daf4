#include <doctest.h>

#include <vector>

#include "oracles/lie.hpp"
#include "tcas/forms.hpp"
#include "tcas/weights.hpp"

using namespace tcas;

TEST_CASE("fundamental weights and rho") {
  const Weight w2 = fundamental_weight(2, 4);
  CHECK(w2.coords() == std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2)});
  CHECK(fundamental_weight(4, 4).is_zero());
  CHECK(pairing(fundamental_weight(1, 3), fundamental_weight(2, 3)) == Rational(1, 3));
  const Weight r = rho(4);
  CHECK(r.coords() == std::vector<Rational>{Rational(3, 2), Rational(1, 2), Rational(-1, 2), Rational(-3, 2)});
}

TEST_CASE("Casimir eigenvalue agrees with the inverse-Cartan formula") {
  for (int m = 2; m <= 7; ++m) {
    std::vector<Rational> c(static_cast<std::size_t>(m - 1));
    for (int trial = 0; trial < 20; ++trial) {
      for (int i = 0; i < m - 1; ++i) c[i] = Rational((trial * (i + 3) + 2 * i) % 5 - 1);
      const Weight w = from_fundamental(c, m);
      CHECK(casimir_eigenvalue(w) == oracle::casimir_from_labels(c));
      CHECK(oracle::dynkin_labels(w.coords()) == c);
    }
  }
}

TEST_CASE("adjoint and standard eigenvalues") {
  for (int m = 2; m <= 6; ++m) {
    std::vector<Rational> adj(static_cast<std::size_t>(m - 1));
    adj.front() += 1;
    adj.back() += 1;
    CHECK(casimir_eigenvalue(from_fundamental(adj, m)) == Rational(2 * m));
    std::vector<Rational> std_rep(static_cast<std::size_t>(m - 1));
    std_rep.front() = 1;
    CHECK(casimir_eigenvalue(from_fundamental(std_rep, m)) == Rational(m * m - 1, m));
  }
}

TEST_CASE("tractor series eigenvalues") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto series = tractor_T_series(k, n);
      const auto table = eigenvalue_table(series, n + 2);
      REQUIRE(table.size() == 5);
      const EigenvalueTable expected{{0}, {0}, {4, -4}, {0}, {0}};
      CHECK(table == expected);
      for (std::size_t s = 0; s < series.slots.size(); ++s)
        for (std::size_t b = 0; b < series.slots[s].size(); ++b) {
          const Weight w = bundle_minus_lowest_weight(series.slots[s][b], n + 2);
          CHECK(table[s][b] == oracle::casimir_from_labels(oracle::dynkin_labels(w.coords())));
        }
    }
}

TEST_CASE("cotractor form series eigenvalues match the matrix oracle") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto series = cotractor_form_series(k, n);
      const auto table = eigenvalue_table(series, n + 2);
      std::vector<Rational> flat;
      for (std::size_t s = 0; s < series.slots.size(); ++s)
        for (std::size_t b = 0; b < series.slots[s].size(); ++b) {
          const Weight w = bundle_minus_lowest_weight(series.slots[s][b], n + 2);
          CHECK(table[s][b] == oracle::casimir_from_labels(oracle::dynkin_labels(w.coords())));
          flat.push_back(table[s][b]);
        }
      bool distinct = true;
      for (std::size_t i = 0; i < flat.size(); ++i)
        for (std::size_t j = i + 1; j < flat.size(); ++j) distinct = distinct && flat[i] != flat[j];
      if (k >= 2 && k + 1 < n + 2) CHECK_MESSAGE(distinct, "n=" << n << " k=" << k);
    }
}
