#include "tcas/forms.hpp"

#include <sstream>

#include "tcas/errors.hpp"
#include "tcas/weights.hpp"

namespace tcas {

IrreducibleBundle IrreducibleBundle::canonical(int n) const {
  IrreducibleBundle out{s, {}, w};
  std::vector<int> kept;
  for (int h : diagram.columns()) {
    if (h > n) throw DomainError("IrreducibleBundle: column height exceeds n");
    if (h == n)
      --out.w;
    else
      kept.push_back(h);
  }
  out.diagram = YoungDiagram(kept);
  return out;
}

std::int64_t IrreducibleBundle::rank(int n) const {
  return static_cast<std::int64_t>(s + 1) * dimension(diagram, n);
}

std::string IrreducibleBundle::str() const {
  return "s=" + std::to_string(s) + " columns=" + diagram.str() + " w=" + std::to_string(w);
}

std::size_t CompositionSeries::constituents() const {
  std::size_t c = 0;
  for (const auto& s : slots) c += s.size();
  return c;
}

std::int64_t CompositionSeries::rank(int n) const {
  std::int64_t r = 0;
  for (const auto& slot : slots)
    for (const auto& b : slot) r += b.rank(n);
  return r;
}

std::vector<IrreducibleBundle> decompose_forms(int j, int n) {
  if (n < 1) throw DomainError("decompose_forms: n must be positive");
  if (j < 0 || j > 2 * n)
    throw DomainError("decompose_forms: degree " + std::to_string(j) + " outside 0.." +
                      std::to_string(2 * n));
  std::vector<IrreducibleBundle> out;
  for (int s = j % 2; s <= j; s += 2) {
    const int tall = (j + s) / 2;
    const int shrt = (j - s) / 2;
    if (tall > n) continue;
    IrreducibleBundle b{s, YoungDiagram({tall, shrt}), (s - j) / 2};
    out.push_back(b.canonical(n));
  }
  return out;
}

CompositionSeries cotractor_form_series(int k, int n) {
  if (n < 1) throw DomainError("cotractor_form_series: n must be positive");
  if (k < 1 || k > n + 2)
    throw DomainError("cotractor_form_series: k must lie in 1..n+2");
  CompositionSeries out;
  const IrreducibleBundle raw[3] = {
      {0, YoungDiagram(), 1}, {1, YoungDiagram(), 1}, {0, YoungDiagram(), 0}};
  const int heights[3] = {k - 2, k - 1, k};
  for (int i = 0; i < 3; ++i) {
    if (heights[i] < 0 || heights[i] > n) continue;
    IrreducibleBundle b = raw[i];
    b.diagram = YoungDiagram({heights[i]});
    out.slots.push_back({b.canonical(n)});
  }
  return out;
}

CompositionSeries tractor_T_series(int k, int n) {
  if (n < 2) throw DomainError("tractor_T_series: n must be at least 2");
  if (k < 2 || k > n)
    throw DomainError("tractor_T_series: k must lie in 2..n, got " + std::to_string(k));
  CompositionSeries out;
  out.slots = {
      {{0, YoungDiagram({k - 2, k - 2}), -k + 2}},
      {{1, YoungDiagram({k - 1, k - 2}), -k + 2}},
      {{2, YoungDiagram({k - 1, k - 1}), -k + 2}, {0, YoungDiagram({k, k - 2}), -k + 1}},
      {{1, YoungDiagram({k, k - 1}), -k + 1}},
      {{0, YoungDiagram({k, k}), -k}},
  };
  return out;
}

EigenvalueTable eigenvalue_table(const CompositionSeries& series, int m) {
  EigenvalueTable out;
  for (const auto& slot : series.slots) {
    std::vector<Rational> row;
    for (const auto& b : slot) row.push_back(casimir_eigenvalue(bundle_minus_lowest_weight(b, m)));
    out.push_back(std::move(row));
  }
  return out;
}

nlohmann::json to_json(const IrreducibleBundle& b) {
  return {{"s", b.s}, {"columns", b.diagram.columns()}, {"w", b.w}};
}

nlohmann::json to_json(const CompositionSeries& s) {
  nlohmann::json slots = nlohmann::json::array();
  for (const auto& slot : s.slots) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& b : slot) row.push_back(to_json(b));
    slots.push_back(std::move(row));
  }
  return {{"slots", std::move(slots)}};
}

nlohmann::json to_json(const EigenvalueTable& t) {
  nlohmann::json slots = nlohmann::json::array();
  for (const auto& row : t) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.str());
    slots.push_back(std::move(r));
  }
  return slots;
}

std::string to_text(const CompositionSeries& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.slots.size(); ++i) {
    os << "slot " << i << ':';
    for (std::size_t j = 0; j < s.slots[i].size(); ++j)
      os << (j ? " | " : " ") << s.slots[i][j].str();
    os << '\n';
  }
  return os.str();
}

}  // namespace tcas
