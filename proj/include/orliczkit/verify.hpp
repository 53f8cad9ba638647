#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <json.hpp>

#include "orliczkit/duality.hpp"
#include "orliczkit/orlicz_fn.hpp"
#include "orliczkit/prob_core.hpp"
#include "orliczkit/rn_module.hpp"

// Randomized verification suites and the instance generators behind them.
// Everything is deterministic for a fixed seed; instance i always draws from
// a generator seeded with seed + i, so suites can fan out and still merge
// reports in instance order.

namespace orlicz::verify {

inline constexpr const char* kToolVersion = "0.1.0";

struct SuiteConfig {
    int instances = 50;
    std::uint64_t seed = 20240801u;
    double tol = 1e-3;
    int samples = 1000;
    std::size_t max_outcomes = 6;
    std::size_t max_dim = 3;
    std::size_t max_blocks = 3;
};

struct InstanceResult {
    int instance = 0;
    bool pass = false;
    double residual = 0.0;
    nlohmann::json detail;
};

struct SuiteResult {
    std::string suite;
    std::string property;  // what is being verified, in plain words
    bool pass = false;
    std::vector<InstanceResult> instances;
};

SuiteResult run_isometry(const SuiteConfig& config);
SuiteResult run_surjectivity(const SuiteConfig& config);
SuiteResult run_example_norms(const SuiteConfig& config);  // the exact norm identities
SuiteResult run_delta2(const SuiteConfig& config);
SuiteResult run_denseness(const SuiteConfig& config);

nlohmann::json to_json(const SuiteResult& result, const SuiteConfig& config);

// instance generators
SpacePtr random_space(std::mt19937_64& rng, std::size_t max_outcomes);
AtomPartition random_partition(std::mt19937_64& rng, SpacePtr space, std::size_t max_blocks);
RandomScalar random_scalar(std::mt19937_64& rng, SpacePtr space, double lo, double hi);
ModuleElement random_element(std::mt19937_64& rng, SpacePtr space, std::size_t dim, double amp);
RandomFunctional random_functional(std::mt19937_64& rng, SpacePtr space, std::size_t dim,
                                   double amp);
RandomOrliczFunction random_power_family(std::mt19937_64& rng, AtomPartition partition,
                                         double p_lo, double p_hi);

}  // namespace orlicz::verify
