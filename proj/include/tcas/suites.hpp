#pragma once

#include <cstdint>

#include "tcas/report.hpp"

namespace tcas {

/// Casimir eigenvalues on the five-slot series are (0, 0, 4, -4, 0, 0).
Report verify_eigenvalues(int n, int k);

/// Formal Casimir products: the slot1 -> slot3 operator, the two-path shape of
/// the slot0 -> slot4 operator, and annihilation of a single eigenslot.
Report verify_casimir(int n, int k);

/// Component action against the form-pair route (embed, bullet, extract).
/// With full_basis every spanning section is paired with every elementary
/// one-form; otherwise `random_sections` seeded sections and one-forms are used.
Report verify_action(int n, int k, std::uint64_t seed, int random_sections, bool full_basis);

Report verify_balpha(int n, int k, std::uint64_t seed);

/// M o d and d o M symbols vanish; the sign mutation does not; curvature-type
/// symmetric tensors die in the bottom two bundles.
Report verify_md_vanish(int n, int k);

/// Both principal-symbol paths are one fixed multiple of the nonstandard symbol.
Report verify_symbol_paths(int n, int k);

/// The lift-space identities and the nonzero, coefficient-independent obstruction.
Report verify_obstruction(int n, int k, std::uint64_t seed);

Report verify_all(int n, int k, std::uint64_t seed);

}  // namespace tcas
