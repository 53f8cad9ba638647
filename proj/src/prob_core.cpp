#include "orliczkit/prob_core.hpp"

#include <algorithm>
#include <cmath>

namespace orlicz {

namespace {

constexpr double kWeightSumTol = 1e-12;

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("w" + std::to_string(i));
    }
    return labels;
}

}  // namespace

FiniteProbSpace::FiniteProbSpace(std::vector<std::string> outcome_labels,
                                 std::vector<double> weights)
    : labels_(std::move(outcome_labels)), weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw std::invalid_argument("FiniteProbSpace: need at least one outcome");
    }
    if (labels_.size() != weights_.size()) {
        throw std::invalid_argument("FiniteProbSpace: label/weight count mismatch");
    }
    double sum = 0.0;
    for (double w : weights_) {
        if (!(w > 0.0) || !std::isfinite(w) || w > 1.0) {
            throw std::invalid_argument("FiniteProbSpace: weights must lie in (0,1]");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumTol) {
        throw std::invalid_argument("FiniteProbSpace: weights must sum to 1 (got " +
                                    std::to_string(sum) + ")");
    }
}

FiniteProbSpace::FiniteProbSpace(std::vector<double> weights)
    : FiniteProbSpace(default_labels(weights.size()), std::vector<double>(weights)) {}

SpacePtr FiniteProbSpace::make(std::vector<std::string> labels, std::vector<double> weights) {
    return std::make_shared<const FiniteProbSpace>(std::move(labels), std::move(weights));
}

SpacePtr FiniteProbSpace::make(std::vector<double> weights) {
    return std::make_shared<const FiniteProbSpace>(std::move(weights));
}

SpacePtr FiniteProbSpace::uniform(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("FiniteProbSpace: need at least one outcome");
    }
    return make(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

AtomPartition::AtomPartition(SpacePtr space, std::vector<std::vector<std::size_t>> blocks)
    : space_(std::move(space)), blocks_(std::move(blocks)) {
    if (!space_) {
        throw std::invalid_argument("AtomPartition: null space");
    }
    if (blocks_.empty()) {
        throw std::invalid_argument("AtomPartition: need at least one block");
    }
    const std::size_t n = space_->size();
    block_of_.assign(n, n);  // n marks "unassigned"
    block_weights_.assign(blocks_.size(), 0.0);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].empty()) {
            throw std::invalid_argument("AtomPartition: empty block");
        }
        for (std::size_t outcome : blocks_[b]) {
            if (outcome >= n) {
                throw std::invalid_argument("AtomPartition: outcome index out of range");
            }
            if (block_of_[outcome] != n) {
                throw std::invalid_argument("AtomPartition: blocks overlap");
            }
            block_of_[outcome] = b;
            block_weights_[b] += space_->weight(outcome);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (block_of_[i] == n) {
            throw std::invalid_argument("AtomPartition: blocks do not cover all outcomes");
        }
    }
}

AtomPartition AtomPartition::discrete(SpacePtr space) {
    if (!space) throw std::invalid_argument("AtomPartition: null space");
    std::vector<std::vector<std::size_t>> blocks(space->size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        blocks[i] = {i};
    }
    return AtomPartition(std::move(space), std::move(blocks));
}

AtomPartition AtomPartition::trivial(SpacePtr space) {
    if (!space) throw std::invalid_argument("AtomPartition: null space");
    std::vector<std::size_t> all(space->size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return AtomPartition(std::move(space), {std::move(all)});
}

RandomScalar::RandomScalar(SpacePtr space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (!space_) {
        throw std::invalid_argument("RandomScalar: null space");
    }
    if (values_.size() != space_->size()) {
        throw std::invalid_argument("RandomScalar: value count must equal outcome count");
    }
    for (double v : values_) {
        if (std::isnan(v) || v == -kInf) {
            throw std::invalid_argument("RandomScalar: values must be finite or +inf");
        }
    }
}

RandomScalar RandomScalar::constant(SpacePtr space, double v) {
    if (!space) throw std::invalid_argument("RandomScalar: null space");
    std::size_t n = space->size();
    return RandomScalar(std::move(space), std::vector<double>(n, v));
}

RandomScalar RandomScalar::indicator(SpacePtr space, const std::vector<std::size_t>& outcomes) {
    if (!space) throw std::invalid_argument("RandomScalar: null space");
    std::vector<double> values(space->size(), 0.0);
    for (std::size_t i : outcomes) {
        values.at(i) = 1.0;
    }
    return RandomScalar(std::move(space), std::move(values));
}

bool RandomScalar::all_finite() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](double v) { return std::isfinite(v); });
}

bool RandomScalar::nonnegative() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v >= 0.0; });
}

bool RandomScalar::strictly_positive() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](double v) { return v > 0.0 && std::isfinite(v); });
}

bool RandomScalar::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

double RandomScalar::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

RandomScalar RandomScalar::abs() const {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(values_[i]);
    return RandomScalar(space_, std::move(out));
}

RandomScalar RandomScalar::map(double (*fn)(double)) const {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = fn(values_[i]);
    return RandomScalar(space_, std::move(out));
}

void require_same_space(const RandomScalar& a, const RandomScalar& b) {
    if (!(*a.space() == *b.space())) {
        throw std::invalid_argument("random scalars live on different spaces");
    }
}

void require_on_space(const AtomPartition& partition, const RandomScalar& zeta) {
    if (!(*partition.space() == *zeta.space())) {
        throw std::invalid_argument("partition and random scalar live on different spaces");
    }
}

RandomScalar operator+(const RandomScalar& a, const RandomScalar& b) {
    require_same_space(a, b);
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return RandomScalar(a.space(), std::move(out));
}

RandomScalar operator-(const RandomScalar& a, const RandomScalar& b) {
    require_same_space(a, b);
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return RandomScalar(a.space(), std::move(out));
}

namespace {
double mul_ext(double x, double y) {
    if ((x == 0.0 && std::isinf(y)) || (y == 0.0 && std::isinf(x))) return 0.0;
    return x * y;
}
}  // namespace

RandomScalar operator*(const RandomScalar& a, const RandomScalar& b) {
    require_same_space(a, b);
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mul_ext(a[i], b[i]);
    return RandomScalar(a.space(), std::move(out));
}

RandomScalar operator*(double c, const RandomScalar& a) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mul_ext(c, a[i]);
    return RandomScalar(a.space(), std::move(out));
}

RandomScalar pointwise_max(const RandomScalar& a, const RandomScalar& b) {
    require_same_space(a, b);
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a[i], b[i]);
    return RandomScalar(a.space(), std::move(out));
}

bool pointwise_leq(const RandomScalar& a, const RandomScalar& b) {
    require_same_space(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] <= b[i])) return false;
    }
    return true;
}

namespace {

// Weighted sum over a set of outcomes with the no-(inf - inf) rule.
double weighted_sum(const RandomScalar& zeta, const std::vector<std::size_t>& outcomes,
                    const std::vector<double>& weights) {
    bool has_inf = false;
    bool has_negative = false;
    double sum = 0.0;
    for (std::size_t i : outcomes) {
        if (zeta[i] == kInf) {
            has_inf = true;
        } else {
            if (zeta[i] < 0.0) has_negative = true;
            sum += weights[i] * zeta[i];
        }
    }
    if (has_inf) {
        if (has_negative) {
            throw std::domain_error("expectation undefined: +inf mixed with negative values");
        }
        return kInf;
    }
    return sum;
}

}  // namespace

double expectation(const RandomScalar& zeta) {
    std::vector<std::size_t> all(zeta.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return weighted_sum(zeta, all, zeta.space()->weights());
}

RandomScalar cond_expectation(const RandomScalar& zeta, const AtomPartition& partition) {
    require_on_space(partition, zeta);
    std::vector<double> out(zeta.size(), 0.0);
    for (std::size_t b = 0; b < partition.block_count(); ++b) {
        const auto& block = partition.block(b);
        double mean = weighted_sum(zeta, block, zeta.space()->weights());
        if (std::isfinite(mean)) mean /= partition.block_weight(b);
        for (std::size_t i : block) out[i] = mean;
    }
    return RandomScalar(zeta.space(), std::move(out));
}

bool measurable_check(const RandomScalar& zeta, const AtomPartition& partition) {
    require_on_space(partition, zeta);
    for (std::size_t b = 0; b < partition.block_count(); ++b) {
        const auto& block = partition.block(b);
        for (std::size_t i : block) {
            if (zeta[i] != zeta[block.front()]) return false;
        }
    }
    return true;
}

double prob_exceeds(const RandomScalar& zeta, double eps) {
    if (!zeta.nonnegative()) {
        throw std::domain_error("prob_exceeds: zeta must be nonnegative");
    }
    if (!(eps > 0.0)) {
        throw std::domain_error("prob_exceeds: eps must be positive");
    }
    double p = 0.0;
    for (std::size_t i = 0; i < zeta.size(); ++i) {
        if (zeta[i] > eps) p += zeta.space()->weight(i);
    }
    return p;
}

RandomScalar essential_sup_family(const std::vector<RandomScalar>& family) {
    if (family.empty()) {
        throw std::invalid_argument("essential_sup_family: empty family");
    }
    RandomScalar out = family.front();
    for (std::size_t k = 1; k < family.size(); ++k) {
        out = pointwise_max(out, family[k]);
    }
    return out;
}

}  // namespace orlicz
