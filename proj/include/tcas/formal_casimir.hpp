#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcas/forms.hpp"
#include "tcas/rational.hpp"

namespace tcas {

/// One irreducible constituent of a composition series.
struct CasimirNode {
  int slot = 0;
  int branch = 0;
  Rational beta;
  std::string label;
};

/// Noncommuting lowering generators: N1 moves one slot down (stands for
/// -2 nabla.), N2 moves two slots down (stands for -2 P..).
enum class Generator { N1, N2 };

struct Letter {
  Generator g;
  int from;  // node index
  int to;    // node index
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Letters in order of application (first letter acts first).
using Word = std::vector<Letter>;
using WordPolynomial = std::map<Word, Rational>;

std::string to_string(const Word& w, const std::vector<CasimirNode>& nodes);

/// Casimir operator of a filtered bundle as a block matrix over the free
/// algebra: beta on the diagonal, one generator per admissible edge below it.
struct FormalCasimir {
  std::vector<CasimirNode> nodes;

  static FormalCasimir from_series(const CompositionSeries& series, const EigenvalueTable& table);
  /// The five-slot tractor series for (n, k); eigenvalues from the weights module.
  static FormalCasimir tractor(int n, int k);

  std::size_t size() const { return nodes.size(); }
  /// Index of the node at (slot, branch); throws DomainError if absent.
  int node(int slot, int branch = 0) const;
};

/// Square matrix of word polynomials, entry (to, from).
class BlockMatrix {
 public:
  explicit BlockMatrix(std::size_t size);

  std::size_t size() const { return size_; }
  WordPolynomial& at(std::size_t to, std::size_t from) { return e_[to * size_ + from]; }
  const WordPolynomial& at(std::size_t to, std::size_t from) const { return e_[to * size_ + from]; }

  bool is_zero() const;
  /// True when every entry with to < from (a raising entry) is empty.
  bool is_lower_triangular() const;

  friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b);

 private:
  std::size_t size_;
  std::vector<WordPolynomial> e_;
};

BlockMatrix casimir_matrix(const FormalCasimir& fc);

/// Multiplies out prod_i (C - shifts[i]).
BlockMatrix formal_casimir_compose(const FormalCasimir& fc, std::span<const Rational> shifts);

/// Words of a polynomial that use exactly `count` letters.
WordPolynomial words_of_length(const WordPolynomial& p, std::size_t count);

/// Coefficients rescaled by (-2)^length: each N1 / N2 letter read as -2 times a
/// unit bullet composition.
WordPolynomial substitute_bullet_factors(const WordPolynomial& p);

nlohmann::json to_json(const WordPolynomial& p, const std::vector<CasimirNode>& nodes);

}  // namespace tcas
