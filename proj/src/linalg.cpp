#include "tcas/linalg.hpp"

namespace tcas {

namespace {

// Reduces `row` against the echelon rows (pivot columns in `pivots`); returns
// the pivot column of the remainder or -1 when it reduces to zero.
long reduce(std::vector<Rational>& row, const RationalMatrix& echelon, const std::vector<std::size_t>& pivots) {
  for (std::size_t r = 0; r < echelon.size(); ++r) {
    const Rational& x = row[pivots[r]];
    if (x.is_zero()) continue;
    const Rational f = x / echelon[r][pivots[r]];
    for (std::size_t c = 0; c < row.size(); ++c)
      if (!echelon[r][c].is_zero()) row[c] -= f * echelon[r][c];
  }
  for (std::size_t c = 0; c < row.size(); ++c)
    if (!row[c].is_zero()) return static_cast<long>(c);
  return -1;
}

}  // namespace

std::vector<std::size_t> independent_rows(const RationalMatrix& rows) {
  RationalMatrix echelon;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<Rational> row = rows[i];
    const long p = reduce(row, echelon, pivots);
    if (p < 0) continue;
    echelon.push_back(std::move(row));
    pivots.push_back(static_cast<std::size_t>(p));
    out.push_back(i);
  }
  return out;
}

std::size_t rank(RationalMatrix rows) { return independent_rows(rows).size(); }

}  // namespace tcas
