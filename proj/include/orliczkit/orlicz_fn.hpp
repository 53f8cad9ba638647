#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "orliczkit/prob_core.hpp"

namespace orlicz {

// Scalar Orlicz function families. The set is closed under conjugation:
//   Power{p>1,c}  <->  Power{q,(cp)^(1-q)/q}
//   Power{1,c}    <->  IndicatorBall{c}
//   ExpMinusOne   <->  EntropyConj
//   PiecewiseLinear <-> PiecewiseLinear  (breakpoint/slope exchange)

struct Power {
    double p = 1.0;  // exponent, >= 1
    double c = 1.0;  // coefficient, > 0; phi(t) = c * t^p
};

struct ExpMinusOne {};  // phi(t) = e^t - 1

struct EntropyConj {};  // phi(s) = s ln s - s + 1 for s >= 1, else 0

struct PiecewiseLinear {
    std::vector<double> breakpoints;  // increasing, starts at 0; same length as slopes
    std::vector<double> slopes;       // nonnegative, nondecreasing; slope i on [bp i, bp i+1)
    std::optional<double> jump_at;    // +inf strictly beyond; finite left limit at the jump
};

struct IndicatorBall {
    double r = 1.0;  // phi(t) = 0 on [0,r], +inf beyond
};

/// A scalar Orlicz function: convex, increasing, left-continuous, phi(0)=0,
/// nontrivial. Values are finite except strictly past the jump point, if any.
class OrliczFunction {
  public:
    using Family = std::variant<Power, ExpMinusOne, EntropyConj, PiecewiseLinear, IndicatorBall>;

    explicit OrliczFunction(Family family);  // validates and canonicalizes

    static OrliczFunction power(double p, double c = 1.0);
    static OrliczFunction exp_minus_one();
    static OrliczFunction entropy_conj();
    static OrliczFunction piecewise(std::vector<double> breakpoints, std::vector<double> slopes,
                                    std::optional<double> jump_at = std::nullopt);
    static OrliczFunction indicator_ball(double r);

    /// phi(t). Throws std::domain_error for t < 0. phi(+inf) = +inf.
    double eval(double t) const;

    /// Exact closed-form conjugate sup_{t>=0} { s t - phi(t) } within the family algebra.
    OrliczFunction conjugate() const;

    /// Finite point beyond which phi is +inf, when one exists.
    std::optional<double> jump_point() const;

    /// Smallest constant z with phi(2t) <= z phi(t) for all t >= 0, when finite.
    std::optional<double> delta2_constant() const;

    const Family& family() const { return family_; }
    bool operator==(const OrliczFunction& rhs) const;

  private:
    Family family_;
};

/// Atom-indexed family of scalar Orlicz functions acting pointwise: the
/// blockwise-scalar model of a random Orlicz function on a finite base.
class RandomOrliczFunction {
  public:
    RandomOrliczFunction(AtomPartition partition, std::vector<OrliczFunction> per_block);

    /// Same scalar function on every block.
    static RandomOrliczFunction uniform(AtomPartition partition, OrliczFunction phi);

    const AtomPartition& partition() const { return partition_; }
    const OrliczFunction& block_fn(std::size_t b) const { return per_block_.at(b); }
    const std::vector<OrliczFunction>& per_block() const { return per_block_; }
    const OrliczFunction& fn_at(std::size_t outcome) const {
        return per_block_[partition_.block_of(outcome)];
    }

    /// Pointwise evaluation Phi(t)(w) = phi_{block(w)}(t(w)); t >= 0 required.
    RandomScalar eval(const RandomScalar& t) const;

    /// Blockwise conjugate on the same partition.
    RandomOrliczFunction conjugate() const;

    /// F-measurable witness z with Phi(2t) <= z Phi(t) for all t, when one exists.
    std::optional<RandomScalar> delta2_witness() const;

    bool operator==(const RandomOrliczFunction& rhs) const {
        return partition_ == rhs.partition_ && per_block_ == rhs.per_block_;
    }

  private:
    AtomPartition partition_;
    std::vector<OrliczFunction> per_block_;
};

}  // namespace orlicz
