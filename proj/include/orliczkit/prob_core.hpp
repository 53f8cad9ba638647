#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace orlicz {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Thrown when an iterative solver runs out of iterations. Carries the last
// bracket so callers can see how far it got.
class NumericError : public std::runtime_error {
  public:
    NumericError(const std::string& msg, double lo, double hi)
        : std::runtime_error(msg), bracket_lo(lo), bracket_hi(hi) {}

    double bracket_lo;
    double bracket_hi;
};

/// Finite outcome set with strictly positive weights summing to 1.
/// Zero-weight outcomes are rejected at construction, so almost-sure
/// equality of random variables is literal equality of stored values.
class FiniteProbSpace {
  public:
    FiniteProbSpace(std::vector<std::string> outcome_labels, std::vector<double> weights);
    explicit FiniteProbSpace(std::vector<double> weights);  // labels w0, w1, ...

    static std::shared_ptr<const FiniteProbSpace> make(std::vector<std::string> labels,
                                                       std::vector<double> weights);
    static std::shared_ptr<const FiniteProbSpace> make(std::vector<double> weights);
    static std::shared_ptr<const FiniteProbSpace> uniform(std::size_t n);

    std::size_t size() const { return weights_.size(); }
    double weight(std::size_t i) const { return weights_.at(i); }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const FiniteProbSpace& rhs) const {
        return weights_ == rhs.weights_ && labels_ == rhs.labels_;
    }

  private:
    std::vector<std::string> labels_;
    std::vector<double> weights_;
};

using SpacePtr = std::shared_ptr<const FiniteProbSpace>;

/// Partition of the outcome set into disjoint nonempty blocks; models a
/// sub-sigma-algebra of the discrete one. The discrete partition is the
/// full algebra, the single-block partition the trivial one.
class AtomPartition {
  public:
    AtomPartition(SpacePtr space, std::vector<std::vector<std::size_t>> blocks);

    static AtomPartition discrete(SpacePtr space);
    static AtomPartition trivial(SpacePtr space);

    const SpacePtr& space() const { return space_; }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<std::size_t>& block(std::size_t b) const { return blocks_.at(b); }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    std::size_t block_of(std::size_t outcome) const { return block_of_.at(outcome); }
    double block_weight(std::size_t b) const { return block_weights_.at(b); }

    bool operator==(const AtomPartition& rhs) const {
        return *space_ == *rhs.space_ && blocks_ == rhs.blocks_;
    }

  private:
    SpacePtr space_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> block_of_;
    std::vector<double> block_weights_;
};

/// Outcome-indexed extended-real values. Finite reals and +inf are
/// representable; -inf and NaN are rejected at construction.
class RandomScalar {
  public:
    RandomScalar(SpacePtr space, std::vector<double> values);

    static RandomScalar constant(SpacePtr space, double v);
    static RandomScalar zero(SpacePtr space) { return constant(std::move(space), 0.0); }
    static RandomScalar indicator(SpacePtr space, const std::vector<std::size_t>& outcomes);

    const SpacePtr& space() const { return space_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_.at(i); }
    const std::vector<double>& values() const { return values_; }

    bool all_finite() const;
    bool any_infinite() const { return !all_finite(); }
    bool nonnegative() const;        // membership in L0+ (allows +inf per extended order)
    bool strictly_positive() const;  // membership in L0++ (finite and > 0)
    bool is_zero() const;
    double max_value() const;

    RandomScalar abs() const;
    RandomScalar map(double (*fn)(double)) const;

    bool operator==(const RandomScalar& rhs) const {
        return *space_ == *rhs.space_ && values_ == rhs.values_;
    }

  private:
    SpacePtr space_;
    std::vector<double> values_;
};

// Pointwise arithmetic. Multiplication uses the measure-theory convention
// 0 * inf = 0. Subtraction requires the result to stay above -inf.
RandomScalar operator+(const RandomScalar& a, const RandomScalar& b);
RandomScalar operator-(const RandomScalar& a, const RandomScalar& b);
RandomScalar operator*(const RandomScalar& a, const RandomScalar& b);
RandomScalar operator*(double c, const RandomScalar& a);
RandomScalar pointwise_max(const RandomScalar& a, const RandomScalar& b);

/// Pointwise a <= b, the a.s. partial order (exact, no tolerance).
bool pointwise_leq(const RandomScalar& a, const RandomScalar& b);

void require_same_space(const RandomScalar& a, const RandomScalar& b);
void require_on_space(const AtomPartition& partition, const RandomScalar& zeta);

/// E[zeta]. +inf if any outcome carries +inf; throws std::domain_error when
/// +inf coexists with a negative value (no inf - inf).
double expectation(const RandomScalar& zeta);

/// E[zeta | F]: per-block weighted mean, constant on each block.
RandomScalar cond_expectation(const RandomScalar& zeta, const AtomPartition& partition);

/// True iff zeta is constant on every block (exact equality of values).
bool measurable_check(const RandomScalar& zeta, const AtomPartition& partition);

/// P(zeta > eps) for zeta >= 0; the convergence-in-probability test.
double prob_exceeds(const RandomScalar& zeta, double eps);

/// Pointwise maximum of a nonempty family on a common space.
RandomScalar essential_sup_family(const std::vector<RandomScalar>& family);

}  // namespace orlicz
