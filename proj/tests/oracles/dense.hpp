#pragma once

#include <vector>

#include "tcas/exterior.hpp"
#include "tcas/tensor.hpp"

namespace oracle {

using tcas::Rational;
using tcas::Tensor;

// The one-form as an endomorphism G of the tractor space: it maps the
// unprimed block into the primed block, G[b'][2 + a] = phi^{b'}_a. Cotractors
// transform by -G^T, applied to every slot as a derivation.
inline Tensor dense_bullet(const Tensor& phi, const Tensor& t) {
  const int dim = phi.n() + 2;
  std::vector<std::vector<Rational>> g(dim, std::vector<Rational>(dim));
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < phi.n(); ++a) g[b][2 + a] = phi.at({b, a});
  Tensor out(t.n(), t.signature(), t.weight());
  std::vector<int> src;
  out.for_each_index([&](std::span<const int> idx, std::size_t flat) {
    Rational acc;
    for (int s = 0; s < t.rank(); ++s) {
      src.assign(idx.begin(), idx.end());
      for (int c = 0; c < dim; ++c) {
        if (g[c][idx[s]].is_zero()) continue;
        src[s] = c;
        acc -= g[c][idx[s]] * t.at(src);
      }
    }
    out[flat] = acc;
  });
  return out;
}

inline const Tensor& injector_for(const tcas::InjectorBasis& ib, int p) {
  return p == 0 ? ib.XX : (p == 1 ? ib.WW : ib.YY);
}

// Dense contraction coeff_{I J} L^{I}_{alpha..} R^{J}_{beta..} with L, R the
// injector products for p and q primed factors.
inline Tensor dense_injector_image(const Tensor& coeff, int p, int q, int k) {
  const int n = coeff.n();
  const auto ib = tcas::InjectorBasis::build(n, k);
  const Tensor& left = injector_for(ib, p);
  const Tensor& right = injector_for(ib, q);
  Tensor out(n, tcas::repeat(tcas::kTractorDown, 2 * k));
  std::size_t tsize = 1;
  for (int i = 0; i < k; ++i) tsize *= static_cast<std::size_t>(n + 2);
  const std::size_t isize = left.size() / tsize;
  const std::size_t jsize = right.size() / tsize;
  for (std::size_t i = 0; i < isize; ++i)
    for (std::size_t j = 0; j < jsize; ++j) {
      const Rational& c = coeff[i * jsize + j];
      if (c.is_zero()) continue;
      for (std::size_t a = 0; a < tsize; ++a) {
        const Rational& l = left[i * tsize + a];
        if (l.is_zero()) continue;
        for (std::size_t b = 0; b < tsize; ++b) out[a * tsize + b] += c * l * right[j * tsize + b];
      }
    }
  return out;
}

}  // namespace oracle
