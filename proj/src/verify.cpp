#include "orliczkit/verify.hpp"

#include <algorithm>
#include <cmath>

#include "orliczkit/norms.hpp"

namespace orlicz::verify {

using nlohmann::json;

SpacePtr random_space(std::mt19937_64& rng, std::size_t max_outcomes) {
    std::uniform_int_distribution<std::size_t> count(1, max_outcomes);
    std::uniform_real_distribution<double> mass(0.1, 1.0);
    std::size_t n = count(rng);
    std::vector<double> weights(n);
    double sum = 0.0;
    for (double& w : weights) {
        w = mass(rng);
        sum += w;
    }
    for (double& w : weights) w /= sum;
    return FiniteProbSpace::make(std::move(weights));
}

AtomPartition random_partition(std::mt19937_64& rng, SpacePtr space, std::size_t max_blocks) {
    std::size_t n = space->size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<std::size_t> count(1, std::min(max_blocks, n));
    std::size_t k = count(rng);
    std::vector<std::vector<std::size_t>> blocks(k);
    for (std::size_t i = 0; i < n; ++i) {
        blocks[i % k].push_back(order[i]);
    }
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    return AtomPartition(std::move(space), std::move(blocks));
}

RandomScalar random_scalar(std::mt19937_64& rng, SpacePtr space, double lo, double hi) {
    std::uniform_real_distribution<double> value(lo, hi);
    std::vector<double> values(space->size());
    for (double& v : values) v = value(rng);
    return RandomScalar(std::move(space), std::move(values));
}

ModuleElement random_element(std::mt19937_64& rng, SpacePtr space, std::size_t dim, double amp) {
    std::uniform_real_distribution<double> value(-amp, amp);
    std::vector<std::vector<double>> vectors(space->size(), std::vector<double>(dim));
    for (auto& v : vectors) {
        for (double& e : v) e = value(rng);
    }
    return ModuleElement(std::move(space), std::move(vectors));
}

RandomFunctional random_functional(std::mt19937_64& rng, SpacePtr space, std::size_t dim,
                                   double amp) {
    std::uniform_real_distribution<double> value(-amp, amp);
    std::vector<std::vector<double>> covectors(space->size(), std::vector<double>(dim));
    for (auto& v : covectors) {
        for (double& e : v) e = value(rng);
    }
    return RandomFunctional(std::move(space), std::move(covectors));
}

RandomOrliczFunction random_power_family(std::mt19937_64& rng, AtomPartition partition,
                                         double p_lo, double p_hi) {
    std::uniform_real_distribution<double> exponent(p_lo, p_hi);
    std::vector<OrliczFunction> fns;
    fns.reserve(partition.block_count());
    for (std::size_t b = 0; b < partition.block_count(); ++b) {
        fns.push_back(OrliczFunction::power(exponent(rng)));
    }
    return RandomOrliczFunction(std::move(partition), std::move(fns));
}

namespace {

json interval_json(const DualNormInterval& interval, const AtomPartition& partition) {
    json lo = json::array(), hi = json::array();
    for (std::size_t b = 0; b < partition.block_count(); ++b) {
        std::size_t rep = partition.block(b).front();
        lo.push_back(interval.lower[rep]);
        hi.push_back(interval.upper[rep]);
    }
    return json::array({lo, hi});
}

json blockwise_json(const RandomScalar& v, const AtomPartition& partition) {
    json out = json::array();
    for (std::size_t b = 0; b < partition.block_count(); ++b) {
        out.push_back(v[partition.block(b).front()]);
    }
    return out;
}

SuiteResult finalize(SuiteResult result) {
    result.pass = std::all_of(result.instances.begin(), result.instances.end(),
                              [](const InstanceResult& r) { return r.pass; });
    return result;
}

}  // namespace

SuiteResult run_isometry(const SuiteConfig& config) {
    SuiteResult result;
    result.suite = "isometry";
    result.property = "dual operator norm of T f equals the conditional Orlicz norm of ||f||*";
    for (int i = 0; i < config.instances; ++i) {
        std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(i));
        SpacePtr space = random_space(rng, config.max_outcomes);
        AtomPartition partition = random_partition(rng, space, config.max_blocks);
        std::uniform_int_distribution<std::size_t> dims(1, config.max_dim);
        RandomOrliczFunction Phi = random_power_family(rng, partition, 1.2, 4.0);
        RandomFunctional f = random_functional(rng, space, dims(rng), 3.0);

        IsometryReport report = verify_isometry(f, Phi, config.tol, config.samples, config.seed);
        InstanceResult ir;
        ir.instance = i;
        ir.pass = report.pass;
        ir.residual = report.residual;
        ir.detail = json{{"lhs_interval", interval_json({report.lower, report.upper}, partition)},
                         {"rhs", blockwise_json(report.rhs, partition)},
                         {"width", report.width},
                         {"pass", report.pass},
                         {"residual", report.residual}};
        result.instances.push_back(std::move(ir));
    }
    return finalize(std::move(result));
}

SuiteResult run_surjectivity(const SuiteConfig& config) {
    SuiteResult result;
    result.suite = "surjectivity";
    result.property = "T(recover(F)) reproduces F on the indicator basis";
    for (int i = 0; i < config.instances; ++i) {
        std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(i));
        SpacePtr space = random_space(rng, config.max_outcomes);
        AtomPartition partition = random_partition(rng, space, config.max_blocks);
        std::uniform_int_distribution<std::size_t> dims(1, config.max_dim);
        std::size_t dim = dims(rng);
        RandomOrliczFunction Phi = random_power_family(rng, partition, 1.2, 4.0);

        std::uniform_real_distribution<double> coef(-5.0, 5.0);
        std::vector<std::vector<double>> coefficients(space->size(), std::vector<double>(dim));
        for (auto& c : coefficients) {
            for (double& e : c) e = coef(rng);
        }
        DualFunctional F(partition, std::move(coefficients));

        InstanceResult ir;
        ir.instance = i;
        double residual = 0.0;
        try {
            RandomFunctional f = recover_functional(F, Phi);
            DualFunctional back = T_map(f, Phi);
            for (std::size_t w = 0; w < space->size(); ++w) {
                for (std::size_t jdx = 0; jdx < dim; ++jdx) {
                    // action on the basis element e_{w,j} is exactly the coefficient
                    residual = std::max(residual, std::abs(back.coef(w)[jdx] - F.coef(w)[jdx]));
                }
            }
            ir.pass = residual < 1e-10;
        } catch (const NumericError&) {
            ir.pass = false;
        }
        ir.residual = residual;
        ir.detail = json{{"residual", residual}, {"pass", ir.pass}};
        result.instances.push_back(std::move(ir));
    }
    return finalize(std::move(result));
}

SuiteResult run_example_norms(const SuiteConfig& config) {
    SuiteResult result;
    result.suite = "example32";
    result.property =
        "power-family norm identities: Luxemburg = p-mean, Orlicz = p^(1/p) q^(1/q) p-mean; "
        "linear family: Luxemburg = mean, conjugate = unit indicator ball";
    for (int i = 0; i < config.instances; ++i) {
        std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(i));
        SpacePtr space = random_space(rng, std::max<std::size_t>(config.max_outcomes, 2));
        RandomScalar zeta = random_scalar(rng, space, -4.0, 4.0);
        std::uniform_real_distribution<double> exponent(1.2, 4.0);
        double p = exponent(rng);
        double q = p / (p - 1.0);

        double moment = 0.0;
        for (std::size_t w = 0; w < space->size(); ++w) {
            moment += space->weight(w) * std::pow(std::abs(zeta[w]), p);
        }
        double expected_lux = std::pow(moment, 1.0 / p);
        double lux = luxemburg_norm(zeta, OrliczFunction::power(p), 1e-12).value;
        double orl = orlicz_norm(zeta, OrliczFunction::power(p), 1e-12).value;
        double expected_orl = std::pow(p, 1.0 / p) * std::pow(q, 1.0 / q) * expected_lux;

        double mean = expectation(zeta.abs());
        double lux1 = luxemburg_norm(zeta, OrliczFunction::power(1.0), 1e-12).value;
        bool conj_ok =
            OrliczFunction::power(1.0).conjugate() == OrliczFunction::indicator_ball(1.0);

        double residual = std::max({std::abs(lux - expected_lux), std::abs(orl - expected_orl),
                                    std::abs(lux1 - mean)});
        InstanceResult ir;
        ir.instance = i;
        ir.pass = conj_ok && std::abs(lux - expected_lux) < 1e-6 &&
                  std::abs(orl - expected_orl) < 1e-5 && std::abs(lux1 - mean) < 1e-8;
        ir.residual = residual;
        ir.detail = json{{"p", p},
                         {"luxemburg", lux},
                         {"expected_luxemburg", expected_lux},
                         {"orlicz", orl},
                         {"expected_orlicz", expected_orl},
                         {"pass", ir.pass},
                         {"residual", residual}};
        result.instances.push_back(std::move(ir));
    }
    return finalize(std::move(result));
}

SuiteResult run_delta2(const SuiteConfig& config) {
    SuiteResult result;
    result.suite = "delta2";
    result.property =
        "doubling witness forces space = heart; an indicator block yields a separator";
    for (int i = 0; i < config.instances; ++i) {
        std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(i));
        SpacePtr space = random_space(rng, config.max_outcomes);
        AtomPartition partition = random_partition(rng, space, config.max_blocks);
        bool with_ball = (i % 2) == 1;

        std::vector<OrliczFunction> fns;
        std::uniform_real_distribution<double> exponent(1.0, 4.0);
        for (std::size_t b = 0; b < partition.block_count(); ++b) {
            if (with_ball && b == 0) {
                fns.push_back(OrliczFunction::indicator_ball(1.0));
            } else {
                fns.push_back(OrliczFunction::power(exponent(rng)));
            }
        }
        RandomOrliczFunction Phi(partition, std::move(fns));
        Delta2Report report = delta2_collapse_check(Phi, 200, config.seed + i);

        InstanceResult ir;
        ir.instance = i;
        if (with_ball) {
            ir.pass = !report.has_witness && report.separator.has_value();
        } else {
            ir.pass = report.has_witness && report.collapse;
        }
        ir.detail = json{{"has_witness", report.has_witness},
                         {"separator_found", report.separator.has_value()},
                         {"collapse", report.collapse},
                         {"pass", ir.pass}};
        result.instances.push_back(std::move(ir));
    }
    return finalize(std::move(result));
}

SuiteResult run_denseness(const SuiteConfig& config) {
    SuiteResult result;
    result.suite = "denseness";
    result.property =
        "truncations enter the heart and converge: the exceedance probability is "
        "nonincreasing in n and vanishes at n = ceil(max ||x||)";
    for (int i = 0; i < config.instances; ++i) {
        std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(i));
        SpacePtr space = random_space(rng, config.max_outcomes);
        std::uniform_int_distribution<std::size_t> dims(1, config.max_dim);
        ModuleElement x = random_element(rng, space, dims(rng), 6.0);

        double min_weight = *std::min_element(space->weights().begin(), space->weights().end());
        double eps = 0.5;
        double lambda = 0.9 * min_weight;
        int expected = std::max(1, static_cast<int>(std::ceil(x.norm().max_value())));

        bool monotone = true;
        double prev = 2.0;
        for (int n = 1; n <= expected + 1; ++n) {
            double p = prob_exceeds((x - truncation_sequence(x, n)).norm(), eps);
            if (p > prev + 1e-15) monotone = false;
            prev = p;
        }
        double at_expected =
            prob_exceeds((x - truncation_sequence(x, expected)).norm(), eps);
        int got = denseness_check(x, eps, lambda);

        InstanceResult ir;
        ir.instance = i;
        ir.pass = monotone && at_expected == 0.0 && got == expected;
        ir.residual = std::abs(got - expected);
        ir.detail = json{{"minimal_n", got}, {"expected_n", expected}, {"pass", ir.pass}};
        result.instances.push_back(std::move(ir));
    }
    return finalize(std::move(result));
}

json to_json(const SuiteResult& result, const SuiteConfig& config) {
    json instances = json::array();
    for (const auto& ir : result.instances) {
        json row = ir.detail;
        row["instance"] = ir.instance;
        instances.push_back(std::move(row));
    }
    return json{{"tool_version", kToolVersion},
                {"suite", result.suite},
                {"property", result.property},
                {"seed", config.seed},
                {"tolerances", json{{"tol", config.tol}}},
                {"samples", config.samples},
                {"instances", instances},
                {"pass", result.pass}};
}

}  // namespace orlicz::verify
