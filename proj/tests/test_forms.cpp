#include <doctest.h>

#include "tcas/errors.hpp"
#include "tcas/exterior.hpp"
#include "tcas/forms.hpp"

using namespace tcas;

namespace {

// Pairs a >= b >= 0 with a + b = j and a <= n: two-row shapes whose
// transposes fit in n rows.
int two_row_shapes(int j, int n) {
  int count = 0;
  for (int b = 0; 2 * b <= j; ++b)
    if (j - b <= n) ++count;
  return count;
}

}  // namespace

TEST_CASE("component counts of j-forms") {
  for (int n = 2; n <= 6; ++n)
    for (int j = 0; j <= 2 * n; ++j) CHECK(decompose_forms(j, n).size() == static_cast<std::size_t>(two_row_shapes(j, n)));
}

TEST_CASE("ranks add up to the exterior power") {
  for (int n = 2; n <= 4; ++n)
    for (int j = 0; j <= 8 && j <= 2 * n; ++j) {
      std::int64_t total = 0;
      for (const auto& b : decompose_forms(j, n)) total += b.rank(n);
      CHECK(total == binomial(2 * n, j));
    }
}

TEST_CASE("four-forms on the n = 4 Grassmannian") {
  const auto parts = decompose_forms(4, 4);
  REQUIRE(parts.size() == 3);
  std::int64_t total = 0;
  for (const auto& b : parts) total += b.rank(4);
  CHECK(total == 70);
}

TEST_CASE("tractor series has five slots and the expected constituents") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 2; k <= n; ++k) {
      const auto s = tractor_T_series(k, n);
      REQUIRE(s.slots.size() == 5);
      CHECK(s.constituents() == 6);
      CHECK(s.slots[2].size() == 2);
      CHECK(s.rank(n) == dimension(YoungDiagram({k, k}), n + 2));
    }
}

TEST_CASE("cotractor form series rank") {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) CHECK(cotractor_form_series(k, n).rank(n) == binomial(n + 2, k));
}

TEST_CASE("bad ranges are rejected") {
  CHECK_THROWS_AS(decompose_forms(-1, 3), DomainError);
  CHECK_THROWS_AS(tractor_T_series(4, 3), DomainError);
}
