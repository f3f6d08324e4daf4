#include "tcas/formal_casimir.hpp"

#include "tcas/errors.hpp"

namespace tcas {

std::string to_string(const Word& w, const std::vector<CasimirNode>& nodes) {
  if (w.empty()) return "1";
  std::string s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!s.empty()) s += " ";
    s += it->g == Generator::N1 ? "N1" : "N2";
    s += "(" + nodes[it->from].label + "->" + nodes[it->to].label + ")";
  }
  return s;
}

FormalCasimir FormalCasimir::from_series(const CompositionSeries& series, const EigenvalueTable& table) {
  if (table.size() != series.slots.size())
    throw DomainError("FormalCasimir: eigenvalue table does not match the series");
  FormalCasimir fc;
  for (std::size_t s = 0; s < series.slots.size(); ++s) {
    if (table[s].size() != series.slots[s].size())
      throw DomainError("FormalCasimir: eigenvalue table does not match the series");
    for (std::size_t b = 0; b < series.slots[s].size(); ++b) {
      std::string label = std::to_string(s);
      if (series.slots[s].size() > 1) label += static_cast<char>('a' + b);
      fc.nodes.push_back({static_cast<int>(s), static_cast<int>(b), table[s][b], label});
    }
  }
  return fc;
}

FormalCasimir FormalCasimir::tractor(int n, int k) {
  const auto series = tractor_T_series(k, n);
  return from_series(series, eigenvalue_table(series, n + 2));
}

int FormalCasimir::node(int slot, int branch) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].slot == slot && nodes[i].branch == branch) return static_cast<int>(i);
  throw DomainError("FormalCasimir: no node at slot " + std::to_string(slot) + " branch " +
                    std::to_string(branch));
}

BlockMatrix::BlockMatrix(std::size_t size) : size_(size), e_(size * size) {}

bool BlockMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.empty()) return false;
  return true;
}

bool BlockMatrix::is_lower_triangular() const {
  for (std::size_t to = 0; to < size_; ++to)
    for (std::size_t from = to + 1; from < size_; ++from)
      if (!at(to, from).empty()) return false;
  return true;
}

BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.size() != b.size()) throw DomainError("BlockMatrix: size mismatch");
  const std::size_t n = a.size();
  BlockMatrix out(n);
  for (std::size_t to = 0; to < n; ++to)
    for (std::size_t from = 0; from < n; ++from) {
      WordPolynomial& acc = out.at(to, from);
      for (std::size_t mid = 0; mid < n; ++mid) {
        const auto& left = a.at(to, mid);
        const auto& right = b.at(mid, from);
        if (left.empty() || right.empty()) continue;
        for (const auto& [wr, cr] : right)
          for (const auto& [wl, cl] : left) {
            Word w = wr;
            w.insert(w.end(), wl.begin(), wl.end());
            acc[w] += cr * cl;
          }
      }
      std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
    }
  return out;
}

BlockMatrix casimir_matrix(const FormalCasimir& fc) {
  BlockMatrix m(fc.size());
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (!fc.nodes[i].beta.is_zero()) m.at(i, i)[Word{}] = fc.nodes[i].beta;
    for (std::size_t j = 0; j < fc.size(); ++j) {
      const int gap = fc.nodes[j].slot - fc.nodes[i].slot;
      const int from = static_cast<int>(i);
      const int to = static_cast<int>(j);
      if (gap == 1) m.at(j, i)[Word{{Generator::N1, from, to}}] = 1;
      if (gap == 2) m.at(j, i)[Word{{Generator::N2, from, to}}] = 1;
    }
  }
  return m;
}

BlockMatrix formal_casimir_compose(const FormalCasimir& fc, std::span<const Rational> shifts) {
  const BlockMatrix c = casimir_matrix(fc);
  BlockMatrix acc(fc.size());
  for (std::size_t i = 0; i < fc.size(); ++i) acc.at(i, i)[Word{}] = 1;
  for (const Rational& shift : shifts) {
    BlockMatrix factor = c;
    for (std::size_t i = 0; i < fc.size(); ++i) {
      auto& d = factor.at(i, i)[Word{}];
      d -= shift;
      if (d.is_zero()) factor.at(i, i).erase(Word{});
    }
    acc = factor * acc;
  }
  return acc;
}

WordPolynomial words_of_length(const WordPolynomial& p, std::size_t count) {
  WordPolynomial out;
  for (const auto& [w, c] : p)
    if (w.size() == count) out.emplace(w, c);
  return out;
}

WordPolynomial substitute_bullet_factors(const WordPolynomial& p) {
  WordPolynomial out;
  for (const auto& [w, c] : p) {
    Rational scale(1);
    for (std::size_t i = 0; i < w.size(); ++i) scale *= Rational(-2);
    out.emplace(w, c * scale);
  }
  return out;
}

nlohmann::json to_json(const WordPolynomial& p, const std::vector<CasimirNode>& nodes) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, c] : p) out.push_back({{"word", to_string(w, nodes)}, {"coefficient", c.str()}});
  return out;
}

}  // namespace tcas
