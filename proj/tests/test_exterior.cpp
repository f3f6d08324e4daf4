#include <doctest.h>

#include "oracles/dense.hpp"
#include "tcas/bullet.hpp"
#include "tcas/exterior.hpp"
#include "tcas/rng.hpp"

using namespace tcas;

namespace {

Tensor random_tensor(int n, Signature sig, Lcg& rng) {
  Tensor t(n, std::move(sig));
  for (std::size_t f = 0; f < t.size(); ++f) t[f] = rng.small_value();
  return t;
}

FormPair random_pair(int n, int k, Lcg& rng) {
  FormPair v(n, k);
  for (int s = 0; s < v.side(); ++s)
    for (int t = 0; t < v.side(); ++t) v(s, t) = rng.small_value();
  return v;
}

Signature coefficient_signature(int p, int q, int k) {
  return concat({repeat(kPrimedDown, p), repeat(kUnprimedDown, k - p), repeat(kPrimedDown, q),
                 repeat(kUnprimedDown, k - q)});
}

}  // namespace

TEST_CASE("binomials and basis sizes") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(4, 5) == 0);
  for (int dim = 2; dim <= 6; ++dim)
    for (int k = 0; k <= dim; ++k) CHECK(exterior_basis(dim, k).size() == binomial(dim, k));
}

TEST_CASE("locate reports position and sign") {
  const auto& b = exterior_basis(5, 3);
  const std::vector<int> sorted{0, 2, 4};
  const std::vector<int> swapped{2, 0, 4};
  const std::vector<int> repeated{2, 2, 4};
  const auto [i, s] = b.locate(sorted);
  CHECK(b.set(i) == sorted);
  CHECK(s == 1);
  CHECK(b.locate(swapped) == std::pair{i, -1});
  CHECK(b.locate(repeated).second == 0);
}

TEST_CASE("dense round trip") {
  Lcg rng(5);
  for (int k = 1; k <= 3; ++k) {
    const FormPair v = random_pair(3, k, rng);
    CHECK(FormPair::from_dense(v.to_dense(), k) == v);
  }
}

TEST_CASE("bullet agrees with the dense endomorphism action") {
  Lcg rng(11);
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) {
      const Tensor phi = random_tensor(n, {kPrimedUp, kUnprimedDown}, rng);
      const FormPair v = random_pair(n, k, rng);
      CHECK(bullet(phi, v).to_dense() == oracle::dense_bullet(phi, v.to_dense()));
      CHECK(bullet_dense(phi, v.to_dense()) == oracle::dense_bullet(phi, v.to_dense()));
    }
}

TEST_CASE("bullet is nilpotent: five applications kill every (k,k) form pair") {
  Lcg rng(3);
  const int n = 3, k = 2;
  FormPair v = random_pair(n, k, rng);
  for (int i = 0; i < 5; ++i) v = bullet(random_tensor(n, {kPrimedUp, kUnprimedDown}, rng), v);
  CHECK(v.is_zero());
}

TEST_CASE("injector image agrees with the dense injector contraction") {
  Lcg rng(7);
  for (int n = 2; n <= 3; ++n)
    for (int k = 2; k <= n; ++k)
      for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) {
          Tensor c = random_tensor(n, coefficient_signature(p, q, k), rng);
          const FormPair v = injector_image(c, p, q, k);
          CHECK(v.to_dense() == oracle::dense_injector_image(c, p, q, k));
        }
}

TEST_CASE("reading a block inverts the image on alternated coefficients") {
  Lcg rng(9);
  const int n = 3, k = 2;
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      Tensor c = random_tensor(n, coefficient_signature(p, q, k), rng);
      if (p == 2) c = c.alternate({0, 1});
      if (q == 2) c = c.alternate({k, k + 1});
      if (p == 0) c = c.alternate({0, 1});
      if (q == 0) c = c.alternate({k, k + 1});
      CHECK(read_injector_block(injector_image(c, p, q, k), p, q) == c);
    }
}

TEST_CASE("one-form action on injectors") {
  // phi . X = 0, phi . WW lands in the XX block, phi . YY in the WW block.
  Lcg rng(13);
  const int n = 3, k = 2;
  const Tensor phi = random_tensor(n, {kPrimedUp, kUnprimedDown}, rng);
  const Tensor rho = random_tensor(n, coefficient_signature(0, 0, k), rng);
  CHECK(bullet(phi, injector_image(rho, 0, 0, k)).is_zero());
  const FormPair w = bullet(phi, injector_image(random_tensor(n, coefficient_signature(1, 0, k), rng), 1, 0, k));
  CHECK(bullet(phi, w).is_zero());
  const FormPair y = bullet(phi, injector_image(random_tensor(n, coefficient_signature(2, 0, k), rng), 2, 0, k));
  CHECK_FALSE(y.is_zero());
}
