#include "tcas/rng.hpp"

#include "tcas/errors.hpp"

namespace tcas {

Lcg::Lcg(std::uint64_t seed)
    : engine_(static_cast<std::minstd_rand::result_type>(seed % 2147483647u == 0 ? 1 : seed % 2147483647u)) {}

int Lcg::uniform(int lo, int hi) {
  if (hi < lo) throw DomainError("Lcg::uniform: empty range");
  const auto span = static_cast<std::uint32_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

}  // namespace tcas
