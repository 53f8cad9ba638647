#include "orliczkit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace orlicz::oracle {

namespace {

constexpr double kTMaxCap = 1e30;

// t values where phi can kink or jump; sampling them exactly makes the grid
// sup exact for polyhedral phi.
std::vector<double> special_points(const OrliczFunction& phi, double t_max) {
    std::vector<double> pts;
    if (const auto* pw = std::get_if<PiecewiseLinear>(&phi.family())) {
        for (double b : pw->breakpoints) {
            if (b > 0.0 && b <= t_max) pts.push_back(b);
        }
    }
    if (auto jump = phi.jump_point()) {
        if (*jump <= t_max) pts.push_back(*jump);
    }
    return pts;
}

double best_on_grid(const OrliczFunction& phi, double s, int grid, double t_max) {
    double best = 0.0;  // t = 0 contributes s*0 - phi(0) = 0
    auto consider = [&](double t) {
        double v = phi.eval(t);
        if (v == kInf) return;
        best = std::max(best, s * t - v);
    };
    for (int i = 1; i <= grid; ++i) {
        consider(t_max * static_cast<double>(i) / static_cast<double>(grid));
    }
    // geometric ladder reaching 12 orders of magnitude below t_max
    double ratio = std::pow(1e-12, 1.0 / static_cast<double>(grid));
    double t = t_max;
    for (int i = 0; i < grid; ++i) {
        t *= ratio;
        consider(t);
    }
    for (double p : special_points(phi, t_max)) consider(p);
    return best;
}

// Smallest doubling t with phi(t) >= s t, past which s t - phi(t) <= 0; caps
// out only when the conjugate diverges at s.
double auto_t_max(const OrliczFunction& phi, double s) {
    double t = 1.0;
    while (t < kTMaxCap) {
        double v = phi.eval(t);
        if (v >= s * t && v > 0.0) return t;
        t *= 2.0;
    }
    return kTMaxCap;
}

// Chord-interpolated table of psi = conjugate(phi), built purely from
// grid_conjugate. Chords of a convex function overestimate it between nodes,
// so gauges computed against the table stay on the feasible side.
class ConjugateTable {
  public:
    ConjugateTable(const OrliczFunction& phi, int grid) {
        nodes_.push_back(0.0);
        double s = 1e-6;
        while (s <= 1e6) {
            nodes_.push_back(s);
            s *= 1.02;
        }
        if (const auto* pw = std::get_if<PiecewiseLinear>(&phi.family())) {
            // kinks of psi sit at the slopes of phi
            for (double m : pw->slopes) {
                if (m > 0.0) nodes_.push_back(m);
            }
        }
        std::sort(nodes_.begin(), nodes_.end());
        nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
        values_.reserve(nodes_.size());
        for (double v : nodes_) {
            values_.push_back(v == 0.0 ? 0.0 : grid_conjugate_auto(phi, v, grid));
        }
    }

    double operator()(double s) const {
        if (s <= 0.0) return 0.0;
        if (s > nodes_.back()) return kInf;
        auto it = std::lower_bound(nodes_.begin(), nodes_.end(), s);
        std::size_t hi = static_cast<std::size_t>(it - nodes_.begin());
        if (nodes_[hi] == s) return values_[hi];
        std::size_t lo = hi - 1;
        double w = (s - nodes_[lo]) / (nodes_[hi] - nodes_[lo]);
        return (1.0 - w) * values_[lo] + w * values_[hi];
    }

  private:
    std::vector<double> nodes_;
    std::vector<double> values_;
};

}  // namespace

double grid_conjugate(const OrliczFunction& phi, double s, int grid, double t_max) {
    if (grid < 2) throw std::invalid_argument("grid_conjugate: grid >= 2 required");
    if (s < 0.0) throw std::domain_error("grid_conjugate: s >= 0 required");
    if (!(t_max > 0.0)) throw std::invalid_argument("grid_conjugate: t_max > 0 required");
    if (s == 0.0) return 0.0;
    if (auto jump = phi.jump_point()) t_max = std::min(t_max, *jump);
    return best_on_grid(phi, s, grid, t_max);
}

double grid_conjugate_auto(const OrliczFunction& phi, double s, int grid) {
    if (s == 0.0) return 0.0;
    double t_max = auto_t_max(phi, s);
    if (auto jump = phi.jump_point()) t_max = std::min(t_max, *jump);
    return best_on_grid(phi, s, grid, t_max);
}

double dual_sup_norm(const RandomScalar& zeta, const OrliczFunction& phi, int trials,
                     std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("dual_sup_norm: trials >= 1 required");
    if (zeta.is_zero()) return 0.0;
    if (zeta.any_infinite()) return kInf;

    const RandomScalar az = zeta.abs();
    const std::vector<double>& w = zeta.space()->weights();
    const std::size_t n = az.size();
    ConjugateTable psi(phi, 4096);

    auto psi_modular = [&](const std::vector<double>& eta, double scale) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double term = psi(eta[i] * scale);
            if (term == kInf) return kInf;
            sum += w[i] * term;
        }
        return sum;
    };
    // feasible psi-gauge: bisect sigma until E[psi(|eta|/sigma)] <= 1 tightly
    auto gauge = [&](const std::vector<double>& eta) {
        double hi = 1.0;
        int guard = 0;
        while (psi_modular(eta, 1.0 / hi) > 1.0 && ++guard < 300) hi *= 2.0;
        double lo = hi / 2.0;
        guard = 0;
        while (psi_modular(eta, 1.0 / lo) <= 1.0 && lo > 1e-300 && ++guard < 1200) {
            hi = lo;
            lo /= 2.0;
        }
        for (int it = 0; it < 60; ++it) {
            double mid = 0.5 * (lo + hi);
            if (psi_modular(eta, 1.0 / mid) <= 1.0) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        return hi;
    };
    auto ratio = [&](const std::vector<double>& eta) {
        double num = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            num += w[i] * az[i] * eta[i];
            scale = std::max(scale, eta[i]);
        }
        if (num <= 0.0 || scale == 0.0) return 0.0;
        return num / gauge(eta);
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    double best = 0.0;
    std::vector<double> best_eta(n, 1.0);
    best = ratio(best_eta);
    if (const auto* pw = std::get_if<Power>(&phi.family())) {
        // ascent seed: the Hoelder-aligned direction |zeta|^(p-1)
        std::vector<double> eta(n);
        for (std::size_t i = 0; i < n; ++i) eta[i] = std::pow(az[i], pw->p - 1.0);
        double r = ratio(eta);
        if (r > best) {
            best = r;
            best_eta = eta;
        }
    }
    int explore = trials / 2;
    for (int t = 0; t < explore; ++t) {
        std::vector<double> eta(n);
        for (double& e : eta) e = unif(rng);
        double r = ratio(eta);
        if (r > best) {
            best = r;
            best_eta = eta;
        }
    }
    // local ascent around the incumbent with shrinking perturbations
    double step = 0.5;
    for (int t = explore; t < trials; ++t) {
        std::vector<double> eta(n);
        for (std::size_t i = 0; i < n; ++i) {
            eta[i] = std::max(0.0, best_eta[i] * (1.0 + step * gauss(rng)));
        }
        double r = ratio(eta);
        if (r > best) {
            best = r;
            best_eta = eta;
        }
        step = std::max(1e-4, step * 0.9995);
    }
    return best;
}

std::vector<ModuleElement> unit_ball_sample(const RandomOrliczFunction& Phi, const SpacePtr& space,
                                            std::size_t dim, int count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("unit_ball_sample: count >= 1 required");
    if (!(*Phi.partition().space() == *space)) {
        throw std::invalid_argument("unit_ball_sample: partition lives on another space");
    }
    const AtomPartition& partition = Phi.partition();

    // conditional modular of ||x||/lambda on one block, by direct evaluation
    auto block_modular = [&](const std::vector<double>& norms, std::size_t b, double lambda) {
        double sum = 0.0;
        double pb = partition.block_weight(b);
        for (std::size_t i : partition.block(b)) {
            double term = Phi.block_fn(b).eval(norms[i] / lambda);
            if (term == kInf) return kInf;
            sum += space->weight(i) / pb * term;
        }
        return sum;
    };

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<ModuleElement> out;
    out.reserve(static_cast<std::size_t>(count));
    while (out.size() < static_cast<std::size_t>(count)) {
        std::vector<std::vector<double>> vectors(space->size(), std::vector<double>(dim));
        std::vector<double> norms(space->size());
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            double s = 0.0;
            for (double& e : vectors[i]) {
                e = gauss(rng);
                s += e * e;
            }
            norms[i] = std::sqrt(s);
        }
        for (std::size_t b = 0; b < partition.block_count(); ++b) {
            double hi = 1.0;
            int guard = 0;
            while (block_modular(norms, b, hi) > 1.0 && ++guard < 300) hi *= 2.0;
            double lo = hi / 2.0;
            guard = 0;
            while (block_modular(norms, b, lo) <= 1.0 && lo > 1e-300 && ++guard < 1200) {
                hi = lo;
                lo /= 2.0;
            }
            for (int it = 0; it < 60; ++it) {
                double mid = 0.5 * (lo + hi);
                if (block_modular(norms, b, mid) <= 1.0) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            for (std::size_t i : partition.block(b)) {
                for (double& e : vectors[i]) e /= hi;
                norms[i] /= hi;
            }
        }
        ModuleElement x(space, std::move(vectors));
        // re-verify the conditional modular bound before handing the sample out
        bool ok = true;
        for (std::size_t b = 0; b < partition.block_count() && ok; ++b) {
            std::vector<double> xn(space->size());
            RandomScalar nx = x.norm();
            for (std::size_t i = 0; i < xn.size(); ++i) xn[i] = nx[i];
            ok = block_modular(xn, b, 1.0) <= 1.0 + 1e-9;
        }
        if (ok) out.push_back(std::move(x));
    }
    return out;
}

}  // namespace orlicz::oracle
