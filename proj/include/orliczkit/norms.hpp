#pragma once

#include <cstdint>

#include "orliczkit/orlicz_fn.hpp"
#include "orliczkit/prob_core.hpp"

namespace orlicz {

enum class NormMethod { bisection, amemiya, oracle };

const char* to_string(NormMethod m);

struct NormReport {
    double value = 0.0;  // extended real; +inf when zeta leaves the space
    NormMethod method = NormMethod::bisection;
    int iterations = 0;
    double residual = 0.0;  // final bracket width, relative; below tol on convergence
};

struct CondNormReport {
    RandomScalar value;  // F-measurable, constant per block
    NormMethod method = NormMethod::bisection;
    int iterations = 0;  // worst block
    double residual = 0.0;
};

enum class Membership { in_heart, in_space_only, outside };

const char* to_string(Membership m);

/// E[phi(|zeta|)], the modular.
double modular(const RandomScalar& zeta, const OrliczFunction& phi);

/// E[Phi(|zeta|) | F], the conditional modular (blockwise constant).
RandomScalar cond_modular(const RandomScalar& zeta, const RandomOrliczFunction& Phi);

/// Luxemburg norm inf{lambda > 0 : E[phi(|zeta|/lambda)] <= 1} by bisection on
/// the nonincreasing modular. The returned lambda is always feasible:
/// E[phi(|zeta|/lambda)] <= 1 holds at it (the infimum is attained here since
/// phi is left-continuous and the space finite).
NormReport luxemburg_norm(const RandomScalar& zeta, const OrliczFunction& phi, double tol = 1e-10);

/// Orlicz norm sup{|E[zeta eta]| : |eta|_{psi,L} <= 1}, computed through the
/// one-dimensional form inf_{k>0} (1 + E[phi(k|zeta|)])/k by golden-section
/// search (the dual supremum itself is cross-checked by orlicz_norm_oracle).
NormReport orlicz_norm(const RandomScalar& zeta, const OrliczFunction& phi, double tol = 1e-10);

/// Certified lower bound on the Orlicz norm: best |E[zeta eta]| over random
/// directions eta rescaled to |eta|_{psi,L} = 1 with psi = conjugate(phi),
/// plus the analytic maximizer direction for Power families.
double orlicz_norm_oracle(const RandomScalar& zeta, const OrliczFunction& phi, int samples,
                          std::uint64_t seed = 20240801u);

/// Conditional Luxemburg norm: blockwise scalar Luxemburg norm under the
/// conditional probability of each block (the lattice infimum over
/// F-measurable lambda decouples across blocks).
CondNormReport cond_luxemburg_norm(const RandomScalar& zeta, const RandomOrliczFunction& Phi,
                                   double tol = 1e-10);

/// Conditional Orlicz norm: blockwise Amemiya under conditional probabilities.
CondNormReport cond_orlicz_norm(const RandomScalar& zeta, const RandomOrliczFunction& Phi,
                                double tol = 1e-10);

/// Where zeta sits relative to the conditional Orlicz space and heart:
/// in_heart when E[Phi(d|zeta|)|F] is finite for every F-measurable d > 0,
/// in_space_only when finite for some d but not all (jump blocks carrying
/// nonzero zeta), outside when finite for no d (+inf values).
Membership membership(const RandomScalar& zeta, const RandomOrliczFunction& Phi);

}  // namespace orlicz
