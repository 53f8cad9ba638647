#include "orliczkit/orlicz_fn.hpp"

#include <algorithm>
#include <cmath>

namespace orlicz {

namespace {

void validate_power(const Power& f) {
    if (!std::isfinite(f.p) || f.p < 1.0) {
        throw std::invalid_argument("Power: exponent must be finite and >= 1");
    }
    if (!std::isfinite(f.c) || f.c <= 0.0) {
        throw std::invalid_argument("Power: coefficient must be finite and > 0");
    }
}

void validate_ball(const IndicatorBall& f) {
    if (!std::isfinite(f.r) || f.r <= 0.0) {
        throw std::invalid_argument("IndicatorBall: radius must be finite and > 0");
    }
}

// Trims segments past the jump and merges equal consecutive slopes, so two
// equal functions always share one representation and conjugation is an
// exact involution at the representation level.
PiecewiseLinear canonicalize(PiecewiseLinear f) {
    if (f.breakpoints.empty() || f.breakpoints.size() != f.slopes.size()) {
        throw std::invalid_argument("PiecewiseLinear: breakpoints/slopes must be nonempty and equal length");
    }
    if (f.breakpoints.front() != 0.0) {
        throw std::invalid_argument("PiecewiseLinear: breakpoints must start at 0");
    }
    for (std::size_t i = 0; i < f.breakpoints.size(); ++i) {
        if (!std::isfinite(f.breakpoints[i]) || !std::isfinite(f.slopes[i]) || f.slopes[i] < 0.0) {
            throw std::invalid_argument("PiecewiseLinear: breakpoints/slopes must be finite, slopes >= 0");
        }
        if (i > 0 && f.breakpoints[i] <= f.breakpoints[i - 1]) {
            throw std::invalid_argument("PiecewiseLinear: breakpoints must be strictly increasing");
        }
        if (i > 0 && f.slopes[i] < f.slopes[i - 1]) {
            throw std::invalid_argument("PiecewiseLinear: slopes must be nondecreasing (convexity)");
        }
    }
    if (f.jump_at) {
        if (!std::isfinite(*f.jump_at) || *f.jump_at <= 0.0) {
            throw std::invalid_argument("PiecewiseLinear: jump_at must be finite and > 0");
        }
        // segments at or past the jump never contribute a value
        while (f.breakpoints.size() > 1 && f.breakpoints.back() >= *f.jump_at) {
            f.breakpoints.pop_back();
            f.slopes.pop_back();
        }
    }
    PiecewiseLinear out;
    out.jump_at = f.jump_at;
    for (std::size_t i = 0; i < f.breakpoints.size(); ++i) {
        if (!out.slopes.empty() && f.slopes[i] == out.slopes.back()) continue;
        out.breakpoints.push_back(f.breakpoints[i]);
        out.slopes.push_back(f.slopes[i]);
    }
    if (!f.jump_at && out.slopes.back() == 0.0) {
        throw std::invalid_argument("PiecewiseLinear: identically zero without a jump is not an Orlicz function");
    }
    return out;
}

double eval_pwl(const PiecewiseLinear& f, double t) {
    if (f.jump_at && t > *f.jump_at) return kInf;
    std::size_t i = f.breakpoints.size() - 1;
    while (i > 0 && f.breakpoints[i] > t) --i;
    double v = 0.0;
    for (std::size_t k = 0; k + 1 <= i; ++k) {
        v += f.slopes[k] * (f.breakpoints[k + 1] - f.breakpoints[k]);
    }
    return v + f.slopes[i] * (t - f.breakpoints[i]);
}

// Polyhedral conjugation: breakpoints and slopes exchange roles. A function
// with a jump conjugates to one with a final slope equal to the jump point;
// one without a jump conjugates to one jumping at the final slope.
PiecewiseLinear conjugate_pwl(const PiecewiseLinear& f) {
    PiecewiseLinear out;
    out.breakpoints.push_back(0.0);
    double cur = 0.0;  // current position on the s axis
    for (std::size_t i = 0; i < f.slopes.size(); ++i) {
        if (f.slopes[i] > cur) {
            out.slopes.push_back(f.breakpoints[i]);
            out.breakpoints.push_back(f.slopes[i]);
            cur = f.slopes[i];
        }
    }
    if (f.jump_at) {
        out.slopes.push_back(*f.jump_at);
    } else {
        out.breakpoints.pop_back();
        out.jump_at = cur;
    }
    return out;
}

double delta2_for_pwl(const PiecewiseLinear& f) {
    // sup_t phi(2t)/phi(t): the ratio is monotone between kinks, so the
    // candidates are the breakpoints and their halves, plus the limit 2.
    double best = 2.0;
    for (std::size_t i = 1; i < f.breakpoints.size(); ++i) {
        for (double t : {f.breakpoints[i], 0.5 * f.breakpoints[i]}) {
            double denom = eval_pwl(f, t);
            if (denom > 0.0) {
                best = std::max(best, eval_pwl(f, 2.0 * t) / denom);
            }
        }
    }
    return best;
}

}  // namespace

OrliczFunction::OrliczFunction(Family family) : family_(std::move(family)) {
    if (auto* p = std::get_if<Power>(&family_)) {
        validate_power(*p);
    } else if (auto* b = std::get_if<IndicatorBall>(&family_)) {
        validate_ball(*b);
    } else if (auto* w = std::get_if<PiecewiseLinear>(&family_)) {
        *w = canonicalize(std::move(*w));
    }
}

OrliczFunction OrliczFunction::power(double p, double c) { return OrliczFunction(Power{p, c}); }
OrliczFunction OrliczFunction::exp_minus_one() { return OrliczFunction(ExpMinusOne{}); }
OrliczFunction OrliczFunction::entropy_conj() { return OrliczFunction(EntropyConj{}); }
OrliczFunction OrliczFunction::piecewise(std::vector<double> breakpoints,
                                         std::vector<double> slopes,
                                         std::optional<double> jump_at) {
    return OrliczFunction(PiecewiseLinear{std::move(breakpoints), std::move(slopes), jump_at});
}
OrliczFunction OrliczFunction::indicator_ball(double r) { return OrliczFunction(IndicatorBall{r}); }

double OrliczFunction::eval(double t) const {
    if (std::isnan(t) || t < 0.0) {
        throw std::domain_error("OrliczFunction::eval: argument must be >= 0");
    }
    if (t == kInf) return kInf;
    return std::visit(
        [t](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Power>) {
                return f.c * std::pow(t, f.p);
            } else if constexpr (std::is_same_v<T, ExpMinusOne>) {
                return std::expm1(t);
            } else if constexpr (std::is_same_v<T, EntropyConj>) {
                return t <= 1.0 ? 0.0 : t * std::log(t) - t + 1.0;
            } else if constexpr (std::is_same_v<T, PiecewiseLinear>) {
                return eval_pwl(f, t);
            } else {
                return t <= f.r ? 0.0 : kInf;
            }
        },
        family_);
}

OrliczFunction OrliczFunction::conjugate() const {
    return std::visit(
        [](const auto& f) -> OrliczFunction {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Power>) {
                if (f.p == 1.0) {
                    return OrliczFunction(IndicatorBall{f.c});
                }
                double q = f.p / (f.p - 1.0);
                return OrliczFunction(Power{q, std::pow(f.c * f.p, 1.0 - q) / q});
            } else if constexpr (std::is_same_v<T, ExpMinusOne>) {
                return OrliczFunction(EntropyConj{});
            } else if constexpr (std::is_same_v<T, EntropyConj>) {
                return OrliczFunction(ExpMinusOne{});
            } else if constexpr (std::is_same_v<T, PiecewiseLinear>) {
                return OrliczFunction(conjugate_pwl(f));
            } else {
                return OrliczFunction(Power{1.0, f.r});
            }
        },
        family_);
}

std::optional<double> OrliczFunction::jump_point() const {
    if (auto* b = std::get_if<IndicatorBall>(&family_)) return b->r;
    if (auto* w = std::get_if<PiecewiseLinear>(&family_)) return w->jump_at;
    return std::nullopt;
}

std::optional<double> OrliczFunction::delta2_constant() const {
    return std::visit(
        [](const auto& f) -> std::optional<double> {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, Power>) {
                return std::pow(2.0, f.p);
            } else if constexpr (std::is_same_v<T, PiecewiseLinear>) {
                // a jump kills the condition; so does a flat start, where
                // phi(2t) > 0 while phi(t) = 0
                if (f.jump_at || f.slopes.front() == 0.0) return std::nullopt;
                return delta2_for_pwl(f);
            } else {
                // ExpMinusOne: ratio unbounded at infinity. EntropyConj:
                // vanishes on [0,1] but not on [0,2]. IndicatorBall: jump.
                return std::nullopt;
            }
        },
        family_);
}

bool OrliczFunction::operator==(const OrliczFunction& rhs) const {
    if (family_.index() != rhs.family_.index()) return false;
    return std::visit(
        [&rhs](const auto& f) -> bool {
            using T = std::decay_t<decltype(f)>;
            const auto& g = std::get<T>(rhs.family_);
            if constexpr (std::is_same_v<T, Power>) {
                return f.p == g.p && f.c == g.c;
            } else if constexpr (std::is_same_v<T, PiecewiseLinear>) {
                return f.breakpoints == g.breakpoints && f.slopes == g.slopes &&
                       f.jump_at == g.jump_at;
            } else if constexpr (std::is_same_v<T, IndicatorBall>) {
                return f.r == g.r;
            } else {
                (void)g;
                return true;
            }
        },
        family_);
}

RandomOrliczFunction::RandomOrliczFunction(AtomPartition partition,
                                           std::vector<OrliczFunction> per_block)
    : partition_(std::move(partition)), per_block_(std::move(per_block)) {
    if (per_block_.size() != partition_.block_count()) {
        throw std::invalid_argument(
            "RandomOrliczFunction: need exactly one scalar function per block");
    }
}

RandomOrliczFunction RandomOrliczFunction::uniform(AtomPartition partition, OrliczFunction phi) {
    std::vector<OrliczFunction> per_block(partition.block_count(), phi);
    return RandomOrliczFunction(std::move(partition), std::move(per_block));
}

RandomScalar RandomOrliczFunction::eval(const RandomScalar& t) const {
    require_on_space(partition_, t);
    if (!t.nonnegative()) {
        throw std::domain_error("RandomOrliczFunction::eval: argument must be >= 0 pointwise");
    }
    std::vector<double> out(t.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = fn_at(i).eval(t[i]);
    }
    return RandomScalar(t.space(), std::move(out));
}

RandomOrliczFunction RandomOrliczFunction::conjugate() const {
    std::vector<OrliczFunction> out;
    out.reserve(per_block_.size());
    for (const auto& f : per_block_) out.push_back(f.conjugate());
    return RandomOrliczFunction(partition_, std::move(out));
}

std::optional<RandomScalar> RandomOrliczFunction::delta2_witness() const {
    std::vector<double> witness(partition_.space()->size(), 0.0);
    for (std::size_t b = 0; b < partition_.block_count(); ++b) {
        auto z = per_block_[b].delta2_constant();
        if (!z) return std::nullopt;
        for (std::size_t i : partition_.block(b)) witness[i] = *z;
    }
    return RandomScalar(partition_.space(), std::move(witness));
}

}  // namespace orlicz
