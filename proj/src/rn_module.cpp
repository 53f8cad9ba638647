#include "orliczkit/rn_module.hpp"

#include <algorithm>
#include <cmath>

namespace orlicz {

namespace {

void validate_vectors(const SpacePtr& space, const std::vector<std::vector<double>>& vectors,
                      const char* what) {
    if (!space) throw std::invalid_argument(std::string(what) + ": null space");
    if (vectors.size() != space->size()) {
        throw std::invalid_argument(std::string(what) + ": need one vector per outcome");
    }
    if (vectors.front().empty()) {
        throw std::invalid_argument(std::string(what) + ": dimension must be >= 1");
    }
    for (const auto& v : vectors) {
        if (v.size() != vectors.front().size()) {
            throw std::invalid_argument(std::string(what) + ": ragged vectors");
        }
        for (double e : v) {
            if (!std::isfinite(e)) {
                throw std::invalid_argument(std::string(what) + ": entries must be finite");
            }
        }
    }
}

double euclidean(const std::vector<double>& v) {
    double s = 0.0;
    for (double e : v) s += e * e;
    return std::sqrt(s);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
    return s;
}

void require_compatible(const ModuleElement& x, const RandomFunctional& f) {
    if (!(*x.space() == *f.space()) || x.dim() != f.dim()) {
        throw std::invalid_argument("functional/element space or dimension mismatch");
    }
}

}  // namespace

ModuleElement::ModuleElement(SpacePtr space, std::vector<std::vector<double>> vectors)
    : space_(std::move(space)), vectors_(std::move(vectors)) {
    validate_vectors(space_, vectors_, "ModuleElement");
    dim_ = vectors_.front().size();
}

ModuleElement ModuleElement::zero(SpacePtr space, std::size_t dim) {
    if (!space) throw std::invalid_argument("ModuleElement: null space");
    std::vector<std::vector<double>> vectors(space->size(), std::vector<double>(dim, 0.0));
    return ModuleElement(std::move(space), std::move(vectors));
}

RandomScalar ModuleElement::norm() const {
    std::vector<double> out(vectors_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = euclidean(vectors_[i]);
    return RandomScalar(space_, std::move(out));
}

bool ModuleElement::is_zero() const {
    for (const auto& v : vectors_) {
        for (double e : v) {
            if (e != 0.0) return false;
        }
    }
    return true;
}

namespace {

template <typename Op>
std::vector<std::vector<double>> zip_vectors(const std::vector<std::vector<double>>& a,
                                             const std::vector<std::vector<double>>& b, Op op) {
    std::vector<std::vector<double>> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i].resize(a[i].size());
        for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] = op(a[i][j], b[i][j]);
    }
    return out;
}

void require_same_shape(const SpacePtr& a, std::size_t da, const SpacePtr& b, std::size_t db) {
    if (!(*a == *b) || da != db) {
        throw std::invalid_argument("module operands live on different spaces or dimensions");
    }
}

}  // namespace

ModuleElement operator+(const ModuleElement& x, const ModuleElement& y) {
    require_same_shape(x.space(), x.dim(), y.space(), y.dim());
    return ModuleElement(x.space(), zip_vectors(x.vectors(), y.vectors(),
                                                [](double a, double b) { return a + b; }));
}

ModuleElement operator-(const ModuleElement& x, const ModuleElement& y) {
    require_same_shape(x.space(), x.dim(), y.space(), y.dim());
    return ModuleElement(x.space(), zip_vectors(x.vectors(), y.vectors(),
                                                [](double a, double b) { return a - b; }));
}

ModuleElement operator*(double c, const ModuleElement& x) {
    auto vectors = x.vectors();
    for (auto& v : vectors) {
        for (double& e : v) e *= c;
    }
    return ModuleElement(x.space(), std::move(vectors));
}

ModuleElement operator*(const RandomScalar& zeta, const ModuleElement& x) {
    if (!(*zeta.space() == *x.space())) {
        throw std::invalid_argument("module action: scalar lives on a different space");
    }
    if (!zeta.all_finite()) {
        throw std::invalid_argument("module action: scalar must be finite");
    }
    auto vectors = x.vectors();
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (double& e : vectors[i]) e *= zeta[i];
    }
    return ModuleElement(x.space(), std::move(vectors));
}

RandomFunctional::RandomFunctional(SpacePtr space, std::vector<std::vector<double>> covectors)
    : space_(std::move(space)), covectors_(std::move(covectors)) {
    validate_vectors(space_, covectors_, "RandomFunctional");
    dim_ = covectors_.front().size();
}

RandomFunctional RandomFunctional::zero(SpacePtr space, std::size_t dim) {
    if (!space) throw std::invalid_argument("RandomFunctional: null space");
    std::vector<std::vector<double>> covectors(space->size(), std::vector<double>(dim, 0.0));
    return RandomFunctional(std::move(space), std::move(covectors));
}

RandomScalar RandomFunctional::apply(const ModuleElement& x) const {
    require_compatible(x, *this);
    std::vector<double> out(covectors_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = dot(covectors_[i], x.vec(i));
    return RandomScalar(space_, std::move(out));
}

RandomScalar RandomFunctional::operator_norm() const {
    std::vector<double> out(covectors_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = euclidean(covectors_[i]);
    return RandomScalar(space_, std::move(out));
}

bool RandomFunctional::is_zero() const {
    for (const auto& v : covectors_) {
        for (double e : v) {
            if (e != 0.0) return false;
        }
    }
    return true;
}

RandomFunctional operator+(const RandomFunctional& f, const RandomFunctional& g) {
    require_same_shape(f.space(), f.dim(), g.space(), g.dim());
    return RandomFunctional(f.space(), zip_vectors(f.covectors(), g.covectors(),
                                                   [](double a, double b) { return a + b; }));
}

RandomFunctional operator*(double c, const RandomFunctional& f) {
    auto covectors = f.covectors();
    for (auto& v : covectors) {
        for (double& e : v) e *= c;
    }
    return RandomFunctional(f.space(), std::move(covectors));
}

RandomFunctional operator*(const RandomScalar& zeta, const RandomFunctional& f) {
    if (!(*zeta.space() == *f.space())) {
        throw std::invalid_argument("module action: scalar lives on a different space");
    }
    if (!zeta.all_finite()) {
        throw std::invalid_argument("module action: scalar must be finite");
    }
    auto covectors = f.covectors();
    for (std::size_t i = 0; i < covectors.size(); ++i) {
        for (double& e : covectors[i]) e *= zeta[i];
    }
    return RandomFunctional(f.space(), std::move(covectors));
}

Membership conditional_space_membership(const ModuleElement& x, const RandomOrliczFunction& Phi) {
    return membership(x.norm(), Phi);
}

CondNormReport lux_norm_E(const ModuleElement& x, const RandomOrliczFunction& Phi, double tol) {
    return cond_luxemburg_norm(x.norm(), Phi, tol);
}

CondNormReport orlicz_norm_E(const ModuleElement& x, const RandomOrliczFunction& Phi, double tol) {
    return cond_orlicz_norm(x.norm(), Phi, tol);
}

ModuleElement truncation_sequence(const ModuleElement& x, int n) {
    if (n < 1) throw std::invalid_argument("truncation_sequence: n >= 1 required");
    RandomScalar nx = x.norm();
    auto vectors = x.vectors();
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (nx[i] > static_cast<double>(n)) {
            std::fill(vectors[i].begin(), vectors[i].end(), 0.0);
        }
    }
    return ModuleElement(x.space(), std::move(vectors));
}

int denseness_check(const ModuleElement& x, double eps, double lambda) {
    if (!(eps > 0.0 && eps < 1.0 && lambda > 0.0 && lambda < 1.0)) {
        throw std::invalid_argument("denseness_check: eps and lambda must lie in (0,1)");
    }
    int n_max = static_cast<int>(std::ceil(x.norm().max_value())) + 1;
    for (int n = 1; n <= n_max; ++n) {
        RandomScalar gap = (x - truncation_sequence(x, n)).norm();
        if (prob_exceeds(gap, eps) < lambda) return n;
    }
    return n_max;  // unreachable: the gap vanishes once n >= max||x||
}

}  // namespace orlicz
