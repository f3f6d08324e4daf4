// Acceptance run: one line per criterion. All comparisons are exact rational
// equality (tolerance 0).
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracles/dense.hpp"
#include "oracles/lie.hpp"
#include "oracles/linear.hpp"
#include "oracles/verma_literal.hpp"
#include "tcas/balpha.hpp"
#include "tcas/bullet.hpp"
#include "tcas/exterior.hpp"
#include "tcas/forms.hpp"
#include "tcas/rng.hpp"
#include "tcas/suites.hpp"
#include "tcas/symbol.hpp"
#include "tcas/symmetry.hpp"
#include "tcas/verma.hpp"
#include "tcas/weights.hpp"
#include "tcas/young.hpp"

using namespace tcas;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "first failure: " << what << "; ";
      ok = false;
    }
  }
};

Tensor random_one_form(int n, Lcg& rng) {
  Tensor phi(n, {kPrimedUp, kUnprimedDown});
  for (std::size_t f = 0; f < phi.size(); ++f) phi[f] = rng.small_value();
  return phi;
}

TSection dense_route(const Tensor& phi, const TSection& s) {
  return extract(FormPair::from_dense(oracle::dense_bullet(phi, embed(s).to_dense()), s.k)).projected();
}

std::string pair_str(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

void eigenvalues(Outcome& o) {
  int cases = 0;
  for (int n = 2; n <= 5; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto series = tractor_T_series(k, n);
      const auto table = eigenvalue_table(series, n + 2);
      o.require(table == EigenvalueTable{{0}, {0}, {4, -4}, {0}, {0}}, "table at " + pair_str(n, k));
      for (std::size_t s = 0; s < series.slots.size(); ++s)
        for (std::size_t b = 0; b < series.slots[s].size(); ++b) {
          const auto w = bundle_minus_lowest_weight(series.slots[s][b], n + 2);
          o.require(table[s][b] == oracle::casimir_from_labels(oracle::dynkin_labels(w.coords())),
                    "matrix oracle at " + pair_str(n, k));
        }
      ++cases;
    }
  o.note << cases << " instances equal (0,0,4,-4,0,0) and the inverse-Cartan oracle";
}

void form_counts(Outcome& o) {
  int cases = 0;
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k <= 6 && k <= n; ++k) {
      int expected = 0;  // two-row shapes (2k - b, b) whose first row fits in n
      for (int b = 0; b <= k; ++b)
        if (2 * k - b <= n) ++expected;
      const int law = 2 * k <= n ? k + 1 : n - k + 1;
      o.require(expected == law, "shape count vs law at " + pair_str(n, k));
      o.require(static_cast<int>(decompose_forms(2 * k, n).size()) == law, "count at " + pair_str(n, k));
      ++cases;
    }
  for (int n = 2; n <= 4; ++n)
    for (int j = 0; j <= 8 && j <= 2 * n; ++j) {
      std::int64_t total = 0;
      for (const auto& b : decompose_forms(j, n)) total += b.rank(n);
      o.require(total == binomial(2 * n, j), "rank sum j=" + std::to_string(j) + " n=" + std::to_string(n));
    }
  o.note << cases << " count instances; rank sums equal C(2n,j) for j<=8, n<=4";
}

void action(Outcome& o) {
  std::size_t pairs = 0;
  for (const TSection& s : section_spanning_set(2, 2))
    for (const Tensor& phi : basis_one_forms(2)) {
      o.require(bullet_on_T(phi, s).projected() == dense_route(phi, s), "full basis at (2,2)");
      ++pairs;
    }
  Lcg rng(1);
  for (int i = 0; i < 100; ++i) {
    const TSection s = random_section(3, 3, rng);
    const Tensor phi = random_one_form(3, rng);
    o.require(bullet_on_T(phi, s).projected() == dense_route(phi, s), "seeded section at (3,3)");
    ++pairs;
  }
  o.note << pairs << " (one-form, section) pairs against the dense embed/act/extract route";
}

void balpha(Outcome& o) {
  for (int k = 2; k <= 4; ++k) {
    const BAlphaConstants c = verify_B_alpha(k, k, 1);
    const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
    o.require(c.b_coefficient == Rational(k, 2) && c.alpha_coefficient == sign * Rational(k - 1),
              "constants at k=" + std::to_string(k));
    o.note << "k=" << k << ": (" << c.b_coefficient << ", " << c.alpha_coefficient << ") ";
  }
}

void vanishing(Outcome& o) {
  for (auto [n, k] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 3}}) {
    o.require(verify_Md_symbol_vanishes(n, k), "M o d / d o M at " + pair_str(n, k));
    for (SymmetryKind kind : {SymmetryKind::WType, SymmetryKind::CYType})
      for (Component target : {Component::Nu, Component::Rho})
        o.require(projection_kills_symmetric(SymmetryClass{kind}, target, n, k), "projection kills at " + pair_str(n, k));
    o.require(!verify_Md_symbol_vanishes(n, k, Rational(1)), "mutation detected at " + pair_str(n, k));
  }
  o.note << "vanishing at (2,2),(3,2),(3,3); sign mutation fails at each";
}

void symbol_paths(Outcome& o) {
  for (auto [n, k] : {std::pair{2, 2}, std::pair{3, 2}}) {
    const PathConstants c = path_constants(n, k);
    o.require(c.branch1 == c.branch2 && !c.branch1.is_zero(), "branch agreement at " + pair_str(n, k));
    const PathConstants unit = path_constants(n, k, ActionCoefficients::printed());
    // Side computation: the hand-expanded leading term 8 xi xi xi^(xi^) sigma,
    // evaluated entry by entry, against the nonstandard symbol.
    std::optional<Rational> hand;
    for (const Tensor& xi : lattice_covectors(n, 2))
      for (const Tensor& sigma : component_spanning_set(Component::Sigma, n, k)) {
        const Tensor target = nonstandard_symbol(fourth_power(xi), sigma);
        if (target.is_zero()) continue;
        const auto r = proportionality(path_representative(xi, sigma), target);
        o.require(r.has_value() && (!hand || *hand == *r), "hand representative proportional at " + pair_str(n, k));
        if (r) hand = r;
      }
    o.note << pair_str(n, k) << ": c=" << c.branch1 << " per path (unit rows " << unit.branch1 << ", hand term "
           << (hand ? hand->str() : "?") << ", quoted 3); ";
  }
  o.note << "quoted factor 3 not reproduced, see notes";
}

void obstruction(Outcome& o) {
  for (auto [n, k] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 3}}) {
    const Report r = verify_obstruction(n, k, 1);
    o.require(r.passed(), "obstruction suite at " + pair_str(n, k));
    Lcg rng(static_cast<std::uint64_t>(7 * n + k));
    Tensor w(n, concat({repeat(kPrimedUp, 4), repeat(kUnprimedDown, 1)}));
    for (std::size_t f = 0; f < w.size(); ++f) w[f] = rng.small_value();
    o.require((contraction_c(1, w) + contraction_c(2, w) + contraction_c(3, w)).is_zero(), "c-sum at " + pair_str(n, k));
    Tensor t(n, repeat(kUnprimedDown, 4));
    for (std::size_t f = 0; f < t.size(); ++f) t[f] = rng.small_value();
    o.require(projection_p(1, t) == oracle::p1_literal(t), "p1 display at " + pair_str(n, k));
    o.require((projection_p(1, t) + projection_p(2, t) + projection_p(3, t)).is_zero(), "p-sum at " + pair_str(n, k));
    o.note << pair_str(n, k) << " " << r.checks.size() << " records; ";
  }
}

void oracle_closure(Outcome& o) {
  // Each value below is produced by a test-side oracle first, then compared.
  std::vector<std::vector<Rational>> rows;
  Tensor shape(3, repeat(kUnprimedDown, 4));
  for (std::size_t f = 0; f < shape.size(); ++f) {
    Tensor e = shape;
    e[f] = 1;
    rows.push_back(oracle::row_of(apply_projector(YoungDiagram({2, 2}), e)));
  }
  o.require(static_cast<std::int64_t>(oracle::rank(rows)) == dimension(YoungDiagram({2, 2}), 3), "(2,2) rank");

  Lcg rng(3);
  for (int k = 2; k <= 3; ++k)
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q) {
        Tensor c(3, concat({repeat(kPrimedDown, p), repeat(kUnprimedDown, k - p), repeat(kPrimedDown, q),
                            repeat(kUnprimedDown, k - q)}));
        for (std::size_t f = 0; f < c.size(); ++f) c[f] = rng.small_value();
        o.require(injector_image(c, p, q, k).to_dense() == oracle::dense_injector_image(c, p, q, k), "injector image");
      }

  const int n = 3, k = 2;
  JetComponent psi = JetComponent::zero(n, 3, k);
  for (std::size_t f = 0; f < psi.value.size(); ++f) psi.value[f] = rng.small_value();
  const Tensor Z = random_one_form(n, rng);
  o.require(g1_action_second_sum(Z, psi).value == oracle::second_sum_table(Z, psi).value, "second-sum table");
  for (const Tensor& xi : lattice_covectors(n, 1)) {
    const Tensor sigma = component_spanning_set(Component::Sigma, n, k).front();
    Tensor val = outer(fourth_power(xi), sigma);
    val.set_weight(0);
    o.require(nonstandard_symbol(fourth_power(xi), sigma) == oracle::phi_display(JetComponent{4, k, val}),
              "symbol display");
  }
  o.note << "Young rank, injector contraction, second-sum table, symbol display; remaining oracles run in the unit tests";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"eigenvalue table", eigenvalues},     {"form component counts", form_counts},
      {"one-form action", action},           {"B/alpha constants", balpha},
      {"vanishing suite", vanishing},        {"principal-symbol paths", symbol_paths},
      {"obstruction", obstruction},          {"oracle closure", oracle_closure},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu %-24s %s  [%.1fs, exact] %s\n", i + 1, criteria[i].first.c_str(),
                o.ok ? "PASS" : "FAIL", secs, o.note.str().c_str());
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
