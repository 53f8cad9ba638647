#pragma once

#include "orliczkit/norms.hpp"
#include "orliczkit/orlicz_fn.hpp"
#include "orliczkit/prob_core.hpp"

namespace orlicz {

/// Element of E = L0(E, R^d): one real d-vector per outcome, with the
/// pointwise Euclidean norm. The zero element is theta.
class ModuleElement {
  public:
    ModuleElement(SpacePtr space, std::vector<std::vector<double>> vectors);

    static ModuleElement zero(SpacePtr space, std::size_t dim);

    const SpacePtr& space() const { return space_; }
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return vectors_.size(); }
    const std::vector<double>& vec(std::size_t outcome) const { return vectors_.at(outcome); }
    const std::vector<std::vector<double>>& vectors() const { return vectors_; }

    /// The module norm ||x||: pointwise Euclidean length, an element of L0+.
    RandomScalar norm() const;

    bool is_zero() const;
    bool operator==(const ModuleElement& rhs) const {
        return *space_ == *rhs.space_ && vectors_ == rhs.vectors_;
    }

  private:
    SpacePtr space_;
    std::size_t dim_;
    std::vector<std::vector<double>> vectors_;
};

ModuleElement operator+(const ModuleElement& x, const ModuleElement& y);
ModuleElement operator-(const ModuleElement& x, const ModuleElement& y);
ModuleElement operator*(double c, const ModuleElement& x);
/// Module action of L0: pointwise scaling by a finite random scalar.
ModuleElement operator*(const RandomScalar& zeta, const ModuleElement& x);

/// Continuous module homomorphism E -> L0 in pointwise Riesz form: a
/// covector per outcome acting by the pointwise dot product. On the finite
/// Euclidean model every a.s.-bounded module homomorphism looks like this.
class RandomFunctional {
  public:
    RandomFunctional(SpacePtr space, std::vector<std::vector<double>> covectors);

    static RandomFunctional zero(SpacePtr space, std::size_t dim);

    const SpacePtr& space() const { return space_; }
    std::size_t dim() const { return dim_; }
    const std::vector<double>& covec(std::size_t outcome) const { return covectors_.at(outcome); }
    const std::vector<std::vector<double>>& covectors() const { return covectors_; }

    /// f(x): pointwise dot product; satisfies |f(x)| <= ||f||* ||x|| pointwise.
    RandomScalar apply(const ModuleElement& x) const;

    /// ||f||* = sup{|f(x)| : ||x|| <= 1}. The supremum over the unit ball is
    /// attained pointwise by the aligned direction, so this is exact finite
    /// maximization: the Euclidean length of the covector at each outcome.
    RandomScalar operator_norm() const;

    bool is_zero() const;
    bool operator==(const RandomFunctional& rhs) const {
        return *space_ == *rhs.space_ && covectors_ == rhs.covectors_;
    }

  private:
    SpacePtr space_;
    std::size_t dim_;
    std::vector<std::vector<double>> covectors_;
};

RandomFunctional operator+(const RandomFunctional& f, const RandomFunctional& g);
RandomFunctional operator*(double c, const RandomFunctional& f);
RandomFunctional operator*(const RandomScalar& zeta, const RandomFunctional& f);

/// Membership of x in the conditional Orlicz space/heart generated from E,
/// decided through ||x||.
Membership conditional_space_membership(const ModuleElement& x, const RandomOrliczFunction& Phi);

/// |||x|||_{Phi,L}: conditional Luxemburg norm of ||x||.
CondNormReport lux_norm_E(const ModuleElement& x, const RandomOrliczFunction& Phi,
                          double tol = 1e-10);

/// |||x|||_{Phi,O}: conditional Orlicz norm of ||x||.
CondNormReport orlicz_norm_E(const ModuleElement& x, const RandomOrliczFunction& Phi,
                             double tol = 1e-10);

/// x_n: x where ||x|| <= n, theta elsewhere. Always lands in the heart.
ModuleElement truncation_sequence(const ModuleElement& x, int n);

/// Smallest n >= 1 with P(||x - x_n|| > eps) < lambda; exists on finite spaces.
int denseness_check(const ModuleElement& x, double eps, double lambda);

}  // namespace orlicz
