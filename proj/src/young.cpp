#include "tcas/young.hpp"

#include <functional>
#include <numeric>

#include "tcas/errors.hpp"

namespace tcas {

YoungDiagram::YoungDiagram(std::vector<int> column_heights) {
  for (int h : column_heights) {
    if (h < 0) throw DomainError("YoungDiagram: negative column height");
    if (h > 0) cols_.push_back(h);
  }
  for (std::size_t i = 1; i < cols_.size(); ++i)
    if (cols_[i] > cols_[i - 1])
      throw DomainError("YoungDiagram: column heights must be weakly decreasing");
}

int YoungDiagram::boxes() const { return std::accumulate(cols_.begin(), cols_.end(), 0); }

std::vector<int> YoungDiagram::rows() const {
  std::vector<int> r(static_cast<std::size_t>(tallest()), 0);
  for (int h : cols_)
    for (int i = 0; i < h; ++i) ++r[i];
  return r;
}

std::vector<int> YoungDiagram::column_positions(int c) const {
  int start = 0;
  for (int i = 0; i < c; ++i) start += cols_[i];
  std::vector<int> out(static_cast<std::size_t>(cols_[c]));
  std::iota(out.begin(), out.end(), start);
  return out;
}

std::vector<int> YoungDiagram::row_positions(int r) const {
  std::vector<int> out;
  int start = 0;
  for (int h : cols_) {
    if (h > r) out.push_back(start + r);
    start += h;
  }
  return out;
}

std::string YoungDiagram::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < cols_.size(); ++i) s += (i ? "," : "") + std::to_string(cols_[i]);
  return s + ")";
}

namespace {

std::vector<int> pick(std::span<const int> slots, const std::vector<int>& positions) {
  std::vector<int> out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(slots[p]);
  return out;
}

std::vector<int> all_slots(const Tensor& t) {
  std::vector<int> s(static_cast<std::size_t>(t.rank()));
  std::iota(s.begin(), s.end(), 0);
  return s;
}

std::int64_t factorial(int k) {
  std::int64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

Tensor apply_projector(const YoungDiagram& d, const Tensor& t, std::span<const int> slots) {
  if (static_cast<int>(slots.size()) != d.boxes())
    throw ArityError("apply_projector: diagram " + d.str() + " has " +
                     std::to_string(d.boxes()) + " boxes but " +
                     std::to_string(slots.size()) + " slots were given");
  for (int s : slots) {
    if (s < 0 || s >= t.rank()) throw DomainError("apply_projector: slot out of range");
    if (t.slot(s).kind != IndexKind::Unprimed || !(t.slot(s) == t.slot(slots[0])))
      throw TypeError("apply_projector: slots must be unprimed indices of one variance");
  }
  Tensor out = t;
  for (int r = 0; r < d.tallest(); ++r) {
    auto row = d.row_positions(r);
    if (row.size() > 1) out = out.symmetrize(pick(slots, row));
  }
  for (int c = 0; c < static_cast<int>(d.columns().size()); ++c) {
    auto col = d.column_positions(c);
    if (col.size() > 1) out = out.alternate(pick(slots, col));
  }
  return out;
}

Tensor apply_projector(const YoungDiagram& d, const Tensor& t) {
  return apply_projector(d, t, all_slots(t));
}

Rational idempotence_constant(const YoungDiagram& d) {
  std::int64_t row_order = 1;
  for (int r : d.rows()) row_order *= factorial(r);
  std::int64_t col_order = 1;
  for (int c : d.columns()) col_order *= factorial(c);
  return Rational(factorial(d.boxes()), standard_tableaux(d) * row_order * col_order);
}

Tensor apply_normalized_projector(const YoungDiagram& d, const Tensor& t,
                                  std::span<const int> slots) {
  return apply_projector(d, t, slots) * (Rational(1) / idempotence_constant(d));
}

Tensor apply_normalized_projector(const YoungDiagram& d, const Tensor& t) {
  return apply_normalized_projector(d, t, all_slots(t));
}

namespace {

// Hook length of box (row i, column j) for the given rows/columns.
int hook(const std::vector<int>& rows, const std::vector<int>& cols, int i, int j) {
  return (rows[i] - j - 1) + (cols[j] - i - 1) + 1;
}

}  // namespace

std::int64_t dimension(const YoungDiagram& d, int n) {
  if (d.tallest() > n) return 0;
  const auto rows = d.rows();
  const auto& cols = d.columns();
  Rational acc(1);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (int j = 0; j < rows[i]; ++j) acc *= Rational(n + j - i, hook(rows, cols, i, j));
  if (!acc.is_integer()) throw EngineDefect("dimension: hook-content value is not an integer");
  return acc.num();
}

std::int64_t standard_tableaux(const YoungDiagram& d) {
  const auto rows = d.rows();
  const auto& cols = d.columns();
  Rational acc(factorial(d.boxes()));
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (int j = 0; j < rows[i]; ++j) acc /= Rational(hook(rows, cols, i, j));
  return acc.num();
}

std::vector<YoungDiagram> all_diagrams(int boxes) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_h) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int h = std::min(left, max_h); h >= 1; --h) {
      cur.push_back(h);
      rec(left - h, h);
      cur.pop_back();
    }
  };
  rec(boxes, boxes);
  return out;
}

}  // namespace tcas
