#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tcas/rational.hpp"
#include "tcas/tensor.hpp"

namespace tcas {

/// Young diagram given by its column heights (weakly decreasing, zero-height
/// columns dropped on construction).
///
/// Boxes are assigned to tensor slots column by column, top to bottom, so
/// every column occupies a contiguous run of the slot list.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> column_heights);

  const std::vector<int>& columns() const { return cols_; }
  int boxes() const;
  int tallest() const { return cols_.empty() ? 0 : cols_.front(); }
  /// Row lengths (the conjugate partition).
  std::vector<int> rows() const;

  /// Positions (into the slot list) of the boxes of column c / row r.
  std::vector<int> column_positions(int c) const;
  std::vector<int> row_positions(int r) const;

  std::string str() const;
  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> cols_;
};

/// Row symmetrization followed by column alternation (both as averages),
/// applied on the listed tensor slots.
Tensor apply_projector(const YoungDiagram& d, const Tensor& t, std::span<const int> slots);
Tensor apply_projector(const YoungDiagram& d, const Tensor& t);

/// c with P o P = c P for the projector above (independent of n).
Rational idempotence_constant(const YoungDiagram& d);

/// P / c: idempotent, identity on the image.
Tensor apply_normalized_projector(const YoungDiagram& d, const Tensor& t,
                                  std::span<const int> slots);
Tensor apply_normalized_projector(const YoungDiagram& d, const Tensor& t);

/// Dimension of the GL(n) module (hook-content formula); 0 if a column exceeds n.
std::int64_t dimension(const YoungDiagram& d, int n);

/// Number of standard tableaux (hook-length formula).
std::int64_t standard_tableaux(const YoungDiagram& d);

/// Every diagram with the given number of boxes.
std::vector<YoungDiagram> all_diagrams(int boxes);

}  // namespace tcas
