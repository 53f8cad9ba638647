#include "orliczkit/norms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace orlicz {

namespace {

constexpr int kMaxIterations = 200;
constexpr double kGolden = 0.6180339887498949;  // 1/golden ratio

struct WeightedValues {
    std::vector<double> values;   // |zeta| restricted to some outcome set
    std::vector<double> weights;  // matching probabilities (sum 1 for conditional use)
};

double modular_at(const WeightedValues& wv, const OrliczFunction& phi, double scale) {
    double sum = 0.0;
    for (std::size_t i = 0; i < wv.values.size(); ++i) {
        double term = phi.eval(wv.values[i] * scale);
        if (term == kInf) return kInf;
        sum += wv.weights[i] * term;
    }
    return sum;
}

// Scalar Luxemburg gauge on pre-restricted data. Bisects lambda on the
// nonincreasing map lambda -> E[phi(|zeta|/lambda)]; keeps the feasible
// endpoint so the certificate E[phi(|zeta|/lambda_hat)] <= 1 always holds.
NormReport luxemburg_impl(const WeightedValues& wv, const OrliczFunction& phi, double tol) {
    NormReport report;
    report.method = NormMethod::bisection;
    if (!(tol > 0.0)) throw std::invalid_argument("luxemburg_norm: tol must be > 0");

    double maxv = 0.0;
    for (double v : wv.values) maxv = std::max(maxv, v);
    if (maxv == 0.0) return report;  // zero variable: value 0
    if (maxv == kInf) {
        report.value = kInf;
        return report;
    }

    double lo = 0.0;  // infeasible (modular > 1); 0 is a formal left end
    double hi;
    if (auto jump = phi.jump_point()) {
        // below max|zeta|/t* the modular is +inf; at it, finite by left-continuity
        double boundary = maxv / *jump;
        if (modular_at(wv, phi, 1.0 / boundary) <= 1.0) {
            report.value = boundary;  // infimum attained at the jump boundary, exactly
            return report;
        }
        lo = boundary;
        hi = boundary;
    } else {
        hi = maxv;  // arbitrary positive start
    }
    int iter = 0;
    while (modular_at(wv, phi, 1.0 / hi) > 1.0) {
        hi *= 2.0;
        if (++iter > kMaxIterations) {
            throw NumericError("luxemburg_norm: no feasible upper bracket", lo, hi);
        }
    }
    if (lo == 0.0) {
        lo = hi / 2.0;
        while (modular_at(wv, phi, 1.0 / lo) <= 1.0) {
            hi = lo;
            lo /= 2.0;
            if (lo < 1e-300) {
                // modular stays <= 1 down to numerical zero; the infimum is 0
                report.value = 0.0;
                report.iterations = iter;
                return report;
            }
        }
    }
    while (hi - lo > tol * (1.0 + hi)) {
        if (++iter > kMaxIterations) {
            throw NumericError("luxemburg_norm: bisection did not converge", lo, hi);
        }
        double mid = 0.5 * (lo + hi);
        if (modular_at(wv, phi, 1.0 / mid) <= 1.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    report.value = hi;
    report.iterations = iter;
    report.residual = (hi - lo) / (1.0 + hi);
    return report;
}

// Amemiya form inf_{k>0} (1 + E[phi(k|zeta|)])/k. The map is unimodal:
// k phi'(k) - phi(k) is nondecreasing, so the derivative changes sign once.
// For linear-growth phi the infimum sits at k = +inf; the doubling cap makes
// that case exact to ~1/k_cap.
NormReport amemiya_impl(const WeightedValues& wv, const OrliczFunction& phi, double tol) {
    NormReport report;
    report.method = NormMethod::amemiya;
    if (!(tol > 0.0)) throw std::invalid_argument("orlicz_norm: tol must be > 0");

    double maxv = 0.0;
    for (double v : wv.values) maxv = std::max(maxv, v);
    if (maxv == 0.0) return report;
    if (maxv == kInf) {
        report.value = kInf;
        return report;
    }

    auto g = [&](double k) { return (1.0 + modular_at(wv, phi, k)) / k; };

    double k_cap = std::ldexp(1.0, 40);  // 2^40
    double best_k = 1.0 / maxv;
    if (auto jump = phi.jump_point()) {
        k_cap = *jump / maxv;  // beyond this the modular is +inf
        best_k = k_cap;
    }
    double best = g(best_k);

    // bracket the minimizer by doubling until g turns upward or hits the cap
    double a = best_k / 2.0, b = best_k;
    int iter = 0;
    while (b < k_cap) {
        double next = std::min(b * 2.0, k_cap);
        double gn = g(next);
        if (gn < best) {
            best = gn;
            best_k = next;
        }
        if (gn > g(b)) {
            b = next;
            break;
        }
        a = b;
        b = next;
        if (++iter > kMaxIterations) break;
    }
    // shrink the left end likewise (minimizer may sit below the start)
    while (g(a) < g(a * 2.0) && a > 1e-300) {
        a /= 2.0;
        if (++iter > kMaxIterations) break;
    }

    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = g(x1), f2 = g(x2);
    while (b - a > tol * (1.0 + b)) {
        if (++iter > kMaxIterations) {
            throw NumericError("orlicz_norm: golden section did not converge", a, b);
        }
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = g(x2);
        }
        if (f1 < best) {
            best = f1;
            best_k = x1;
        }
        if (f2 < best) {
            best = f2;
            best_k = x2;
        }
    }
    report.value = best;
    report.iterations = iter;
    report.residual = (b - a) / (1.0 + b);
    return report;
}

WeightedValues whole_space(const RandomScalar& zeta) {
    WeightedValues wv;
    wv.values.reserve(zeta.size());
    for (std::size_t i = 0; i < zeta.size(); ++i) wv.values.push_back(std::abs(zeta[i]));
    wv.weights = zeta.space()->weights();
    return wv;
}

WeightedValues block_restriction(const RandomScalar& zeta, const AtomPartition& partition,
                                 std::size_t b) {
    WeightedValues wv;
    const auto& block = partition.block(b);
    double pb = partition.block_weight(b);
    for (std::size_t i : block) {
        wv.values.push_back(std::abs(zeta[i]));
        wv.weights.push_back(zeta.space()->weight(i) / pb);
    }
    return wv;
}

template <typename ScalarSolver>
CondNormReport cond_norm_impl(const RandomScalar& zeta, const RandomOrliczFunction& Phi,
                              double tol, ScalarSolver solve) {
    require_on_space(Phi.partition(), zeta);
    const auto& partition = Phi.partition();
    std::vector<double> out(zeta.size(), 0.0);
    CondNormReport report{RandomScalar::zero(zeta.space())};
    for (std::size_t b = 0; b < partition.block_count(); ++b) {
        NormReport block_report = solve(block_restriction(zeta, partition, b), Phi.block_fn(b), tol);
        for (std::size_t i : partition.block(b)) out[i] = block_report.value;
        report.method = block_report.method;
        report.iterations = std::max(report.iterations, block_report.iterations);
        report.residual = std::max(report.residual, block_report.residual);
    }
    report.value = RandomScalar(zeta.space(), std::move(out));
    return report;
}

}  // namespace

const char* to_string(NormMethod m) {
    switch (m) {
        case NormMethod::bisection: return "bisection";
        case NormMethod::amemiya: return "amemiya";
        case NormMethod::oracle: return "oracle";
    }
    return "?";
}

const char* to_string(Membership m) {
    switch (m) {
        case Membership::in_heart: return "in_heart";
        case Membership::in_space_only: return "in_space_only";
        case Membership::outside: return "outside";
    }
    return "?";
}

double modular(const RandomScalar& zeta, const OrliczFunction& phi) {
    return modular_at(whole_space(zeta), phi, 1.0);
}

RandomScalar cond_modular(const RandomScalar& zeta, const RandomOrliczFunction& Phi) {
    require_on_space(Phi.partition(), zeta);
    const auto& partition = Phi.partition();
    std::vector<double> out(zeta.size(), 0.0);
    for (std::size_t b = 0; b < partition.block_count(); ++b) {
        double m = modular_at(block_restriction(zeta, partition, b), Phi.block_fn(b), 1.0);
        for (std::size_t i : partition.block(b)) out[i] = m;
    }
    return RandomScalar(zeta.space(), std::move(out));
}

NormReport luxemburg_norm(const RandomScalar& zeta, const OrliczFunction& phi, double tol) {
    return luxemburg_impl(whole_space(zeta), phi, tol);
}

NormReport orlicz_norm(const RandomScalar& zeta, const OrliczFunction& phi, double tol) {
    return amemiya_impl(whole_space(zeta), phi, tol);
}

double orlicz_norm_oracle(const RandomScalar& zeta, const OrliczFunction& phi, int samples,
                          std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("orlicz_norm_oracle: samples >= 1 required");
    if (zeta.is_zero()) return 0.0;
    if (zeta.any_infinite()) return kInf;

    const OrliczFunction psi = phi.conjugate();
    const RandomScalar az = zeta.abs();

    auto value_of = [&](std::vector<double> direction) -> double {
        RandomScalar eta(zeta.space(), std::move(direction));
        double gauge = luxemburg_norm(eta, psi, 1e-12).value;
        if (!(gauge > 0.0) || !std::isfinite(gauge)) return 0.0;
        return expectation(az * ((1.0 / gauge) * eta));
    };

    double best = 0.0;
    if (const auto* pw = std::get_if<Power>(&phi.family())) {
        // analytic maximizer of E[|zeta| eta] over the psi unit ball
        std::vector<double> dir(az.size());
        for (std::size_t i = 0; i < dir.size(); ++i) dir[i] = std::pow(az[i], pw->p - 1.0);
        best = std::max(best, value_of(std::move(dir)));
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int s = 0; s < samples; ++s) {
        std::vector<double> dir(az.size());
        for (double& d : dir) d = unif(rng);
        best = std::max(best, value_of(std::move(dir)));
    }
    return best;
}

CondNormReport cond_luxemburg_norm(const RandomScalar& zeta, const RandomOrliczFunction& Phi,
                                   double tol) {
    return cond_norm_impl(zeta, Phi, tol, luxemburg_impl);
}

CondNormReport cond_orlicz_norm(const RandomScalar& zeta, const RandomOrliczFunction& Phi,
                                double tol) {
    return cond_norm_impl(zeta, Phi, tol, amemiya_impl);
}

Membership membership(const RandomScalar& zeta, const RandomOrliczFunction& Phi) {
    require_on_space(Phi.partition(), zeta);
    if (zeta.any_infinite()) return Membership::outside;
    const auto& partition = Phi.partition();
    for (std::size_t b = 0; b < partition.block_count(); ++b) {
        if (!Phi.block_fn(b).jump_point()) continue;
        for (std::size_t i : partition.block(b)) {
            // a jump block carrying any mass of zeta caps the admissible scales
            if (zeta[i] != 0.0) return Membership::in_space_only;
        }
    }
    return Membership::in_heart;
}

}  // namespace orlicz
