#include <doctest.h>

#include <vector>

#include "oracles/linear.hpp"
#include "tcas/tensor.hpp"
#include "tcas/young.hpp"

using namespace tcas;

namespace {

// Standard tableaux counted by removing corners recursively.
std::int64_t count_tableaux(std::vector<int> rows) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  if (rows.empty()) return 1;
  std::int64_t total = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const bool corner = r + 1 == rows.size() || rows[r + 1] < rows[r];
    if (!corner) continue;
    --rows[r];
    total += count_tableaux(rows);
    ++rows[r];
  }
  return total;
}

Tensor basis_tensor(int n, int rank, std::size_t flat) {
  Tensor t(n, repeat(kUnprimedDown, rank));
  t[flat] = 1;
  return t;
}

}  // namespace

TEST_CASE("shape bookkeeping") {
  const YoungDiagram d({3, 2, 0});
  CHECK(d.columns() == std::vector<int>{3, 2});
  CHECK(d.boxes() == 5);
  CHECK(d.rows() == std::vector<int>{2, 2, 1});
  CHECK(d.column_positions(1) == std::vector<int>{3, 4});
  CHECK(d.row_positions(0) == std::vector<int>{0, 3});
}

TEST_CASE("standard tableaux match corner removal") {
  for (int boxes = 1; boxes <= 7; ++boxes)
    for (const auto& d : all_diagrams(boxes)) CHECK(standard_tableaux(d) == count_tableaux(d.rows()));
}

TEST_CASE("dimension equals the rank of the projector image") {
  for (int n = 1; n <= 3; ++n)
    for (int boxes = 1; boxes <= 4; ++boxes)
      for (const auto& d : all_diagrams(boxes)) {
        std::vector<std::vector<Rational>> rows;
        Tensor shape(n, repeat(kUnprimedDown, boxes));
        for (std::size_t f = 0; f < shape.size(); ++f)
          rows.push_back(oracle::row_of(apply_projector(d, basis_tensor(n, boxes, f))));
        CHECK(dimension(d, n) == static_cast<std::int64_t>(oracle::rank(rows)));
      }
}

TEST_CASE("normalized projector is idempotent") {
  for (const auto& d : std::vector<YoungDiagram>{YoungDiagram({2, 1}), YoungDiagram({2, 2}), YoungDiagram({3, 1})}) {
    const int n = 3;
    Tensor t(n, repeat(kUnprimedDown, d.boxes()));
    for (std::size_t f = 0; f < t.size(); ++f) t[f] = Rational(static_cast<std::int64_t>((f * 7 + 3) % 5) - 2);
    const Tensor p = apply_normalized_projector(d, t);
    CHECK(apply_normalized_projector(d, p) == p);
    CHECK(apply_projector(d, apply_projector(d, t)) == idempotence_constant(d) * apply_projector(d, t));
  }
}

TEST_CASE("two-by-two projector reproduces the symmetrize-then-skew recipe") {
  Tensor a(3, repeat(kUnprimedDown, 4));
  a.at({0, 1, 0, 1}) = 1;
  // B = A_{(A1|A2|B1)B2}, C = B_{A1(A2|B1|B2)}, D = C_{[A1A2][B1B2]}, entry by entry.
  auto b = [&](int p, int q, int r, int s) { return Rational(1, 2) * (a.at({p, q, r, s}) + a.at({r, q, p, s})); };
  auto c = [&](int p, int q, int r, int s) { return Rational(1, 2) * (b(p, q, r, s) + b(p, s, r, q)); };
  Tensor d(3, repeat(kUnprimedDown, 4));
  d.for_each_index([&](std::span<const int> x, std::size_t flat) {
    const int p = x[0], q = x[1], r = x[2], s = x[3];
    d[flat] = Rational(1, 4) * (c(p, q, r, s) - c(q, p, r, s) - c(p, q, s, r) + c(q, p, s, r));
  });
  CHECK(apply_projector(YoungDiagram({2, 2}), a) == d);
  CHECK_FALSE(d.is_zero());
}

TEST_CASE("two-by-two module in three dimensions has dimension six") {
  std::vector<std::vector<Rational>> rows;
  Tensor shape(3, repeat(kUnprimedDown, 4));
  for (std::size_t f = 0; f < shape.size(); ++f)
    rows.push_back(oracle::row_of(apply_projector(YoungDiagram({2, 2}), basis_tensor(3, 4, f))));
  const auto r = oracle::rank(rows);
  CHECK(r == 6);
  CHECK(dimension(YoungDiagram({2, 2}), 3) == static_cast<std::int64_t>(r));
}

TEST_CASE("dimensions times tableaux counts fill the tensor power") {
  for (int n = 1; n <= 4; ++n)
    for (int b = 1; b <= 4; ++b) {
      std::int64_t total = 0, power = 1;
      for (int i = 0; i < b; ++i) power *= n;
      for (const auto& d : all_diagrams(b)) total += dimension(d, n) * standard_tableaux(d);
      CHECK(total == power);
    }
}

TEST_CASE("columns longer than n vanish") {
  CHECK(dimension(YoungDiagram({3}), 2) == 0);
  CHECK(dimension(YoungDiagram({2, 2}), 2) == 1);
  CHECK(dimension(YoungDiagram({2, 2}), 3) == 6);
}
