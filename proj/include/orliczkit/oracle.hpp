#pragma once

#include <cstdint>
#include <vector>

#include "orliczkit/orlicz_fn.hpp"
#include "orliczkit/prob_core.hpp"
#include "orliczkit/rn_module.hpp"

// Brute-force oracles for tests and cross-validation. Everything here works
// through pointwise evaluation only: no closed-form conjugation and none of
// the norm solvers, so these results are independent of the main code paths.

namespace orlicz::oracle {

/// Grid maximization of s t - phi(t) over t in [0, t_max]: a certified lower
/// bound on the conjugate psi(s), converging to it as the grid refines
/// whenever psi(s) is finite. The grid is the union of a linear and a
/// geometric ladder plus exact breakpoints and the jump point.
double grid_conjugate(const OrliczFunction& phi, double s, int grid, double t_max);

/// As grid_conjugate with t_max chosen automatically: doubled until the
/// maximizer of s t - phi(t) is bracketed (or a hard cap is hit, which only
/// happens when psi(s) = +inf).
double grid_conjugate_auto(const OrliczFunction& phi, double s, int grid);

/// Lower bound on the Orlicz norm sup{|E[zeta eta]| : |eta|_{psi,L} <= 1} by
/// randomized ascent over directions eta. The psi-gauge used to rescale eta
/// is computed against a tabulated grid_conjugate approximation of psi, so no
/// main-path code is involved.
double dual_sup_norm(const RandomScalar& zeta, const OrliczFunction& phi, int trials,
                     std::uint64_t seed = 715u);

/// Random module elements with |||x|||_{Phi,L} <= 1, built from Gaussian
/// directions rescaled blockwise by a self-contained conditional-modular
/// gauge; every returned element is re-verified to satisfy the bound.
std::vector<ModuleElement> unit_ball_sample(const RandomOrliczFunction& Phi, const SpacePtr& space,
                                            std::size_t dim, int count, std::uint64_t seed = 715u);

}  // namespace orlicz::oracle
