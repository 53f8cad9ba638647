#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "orliczkit/orlicz_fn.hpp"
#include "orliczkit/prob_core.hpp"

using namespace orlicz;

namespace {

RandomScalar rs(SpacePtr space, std::vector<double> values) {
    return RandomScalar(std::move(space), std::move(values));
}

AtomPartition pairs_partition(SpacePtr space) {
    return AtomPartition(std::move(space), {{0, 1}, {2, 3}});
}

}  // namespace

TEST_CASE("space invariants") {
    CHECK_THROWS_AS(FiniteProbSpace(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteProbSpace({0.5, 0.6}), std::invalid_argument);   // sums to 1.1
    CHECK_THROWS_AS(FiniteProbSpace({1.0, 0.0}), std::invalid_argument);   // null atom
    CHECK_THROWS_AS(FiniteProbSpace({1.5, -0.5}), std::invalid_argument);  // negative
    CHECK(FiniteProbSpace({0.25, 0.75}).size() == 2);
    CHECK(FiniteProbSpace({1.0}).size() == 1);
}

TEST_CASE("partition invariants") {
    auto space = FiniteProbSpace::uniform(4);
    CHECK_THROWS_AS(AtomPartition(space, {{0, 1}, {1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(AtomPartition(space, {{0, 1}, {3}}), std::invalid_argument);  // misses 2
    CHECK_THROWS_AS(AtomPartition(space, {{0, 1, 2, 3}, {}}), std::invalid_argument);
    CHECK(AtomPartition::discrete(space).block_count() == 4);
    CHECK(AtomPartition::trivial(space).block_count() == 1);
    CHECK(pairs_partition(space).block_weight(0) == doctest::Approx(0.5));
}

TEST_CASE("random scalar rejects -inf and nan") {
    auto space = FiniteProbSpace::uniform(2);
    CHECK_THROWS_AS(rs(space, {1.0, -kInf}), std::invalid_argument);
    CHECK_THROWS_AS(rs(space, {std::nan(""), 0.0}), std::invalid_argument);
    CHECK_NOTHROW(rs(space, {1.0, kInf}));
    CHECK_THROWS_AS(rs(space, {1.0}), std::invalid_argument);  // wrong length
}

TEST_CASE("expectation") {
    auto space = FiniteProbSpace::uniform(2);
    CHECK(expectation(RandomScalar::zero(space)) == 0.0);
    CHECK(expectation(rs(space, {1.0, 3.0})) == doctest::Approx(2.0));
    CHECK(expectation(rs(space, {kInf, 1.0})) == kInf);
    CHECK_THROWS_AS(expectation(rs(space, {kInf, -1.0})), std::domain_error);
}

TEST_CASE("conditional expectation") {
    auto space = FiniteProbSpace::uniform(4);
    RandomScalar zeta = rs(space, {1.0, 3.0, 2.0, 6.0});

    RandomScalar single = cond_expectation(zeta, AtomPartition::trivial(space));
    for (std::size_t i = 0; i < 4; ++i) CHECK(single[i] == doctest::Approx(3.0));

    CHECK(cond_expectation(zeta, AtomPartition::discrete(space)) == zeta);

    RandomScalar blocks = cond_expectation(zeta, pairs_partition(space));
    CHECK(blocks[0] == doctest::Approx(2.0));
    CHECK(blocks[1] == doctest::Approx(2.0));
    CHECK(blocks[2] == doctest::Approx(4.0));
    CHECK(blocks[3] == doctest::Approx(4.0));
}

TEST_CASE("measurable check") {
    auto space = FiniteProbSpace::uniform(2);
    CHECK(measurable_check(RandomScalar::constant(space, 5.0), AtomPartition::trivial(space)));
    CHECK_FALSE(measurable_check(rs(space, {1.0, 2.0}), AtomPartition::trivial(space)));

    auto space4 = FiniteProbSpace::uniform(4);
    RandomScalar zeta = rs(space4, {1.0, 3.0, 2.0, 6.0});
    CHECK(measurable_check(cond_expectation(zeta, pairs_partition(space4)),
                           pairs_partition(space4)));
}

TEST_CASE("prob exceeds") {
    auto space = FiniteProbSpace::uniform(2);
    CHECK(prob_exceeds(RandomScalar::zero(space), 0.5) == 0.0);
    CHECK(prob_exceeds(rs(space, {0.5, 2.0}), 1.0) == doctest::Approx(0.5));
    CHECK(prob_exceeds(rs(space, {0.5, 2.0}), 5.0) == 0.0);
    CHECK_THROWS_AS(prob_exceeds(rs(space, {-1.0, 0.0}), 0.5), std::domain_error);

    // nonincreasing in eps
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(0.0, 5.0);
    for (int trial = 0; trial < 200; ++trial) {
        RandomScalar zeta = rs(space, {unif(rng), unif(rng)});
        double prev = 1.0;
        for (double eps = 0.25; eps < 6.0; eps += 0.25) {
            double p = prob_exceeds(zeta, eps);
            CHECK(p <= prev);
            prev = p;
        }
    }
}

TEST_CASE("essential sup of a family") {
    auto space = FiniteProbSpace::uniform(2);
    RandomScalar a = rs(space, {1.0, 0.0});
    RandomScalar b = rs(space, {0.0, 1.0});
    CHECK(essential_sup_family({a}) == a);
    CHECK(essential_sup_family({a, b}) == RandomScalar::constant(space, 1.0));
    CHECK_THROWS_AS(essential_sup_family({}), std::invalid_argument);

    RandomScalar zeta = rs(space, {0.5, 2.0});
    CHECK(essential_sup_family({zeta, 2.0 * zeta, 3.0 * zeta}) == 3.0 * zeta);
}

TEST_CASE("tower property") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unif(-5.0, 5.0);
    std::uniform_int_distribution<std::size_t> sizes(1, 8);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = sizes(rng);
        auto space = FiniteProbSpace::uniform(n);
        std::vector<double> values(n);
        for (double& v : values) v = unif(rng);
        RandomScalar zeta = rs(space, values);

        std::vector<std::vector<std::size_t>> blocks;
        std::size_t at = 0;
        while (at < n) {
            std::size_t len = 1 + rng() % (n - at);
            std::vector<std::size_t> blk;
            for (std::size_t k = 0; k < len; ++k) blk.push_back(at++);
            blocks.push_back(std::move(blk));
        }
        AtomPartition partition(space, blocks);
        CHECK(expectation(cond_expectation(zeta, partition)) ==
              doctest::Approx(expectation(zeta)).epsilon(1e-10));
    }
}

TEST_CASE("conditional jensen for convex phi") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> unif(0.0, 4.0);
    auto space = FiniteProbSpace::make({0.1, 0.2, 0.3, 0.4});
    AtomPartition partition = pairs_partition(space);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> values(4);
        for (double& v : values) v = unif(rng);
        RandomScalar zeta = rs(space, values);

        // phi(t) = t^2, applied through the same evaluation path the norms use
        RandomOrliczFunction Phi =
            RandomOrliczFunction::uniform(partition, OrliczFunction::power(2.0));
        RandomScalar lhs = Phi.eval(cond_expectation(zeta, partition));
        RandomScalar rhs = cond_expectation(Phi.eval(zeta), partition);
        for (std::size_t i = 0; i < 4; ++i) CHECK(lhs[i] <= rhs[i] + 1e-10);
    }
}

TEST_CASE("conditional expectation is F-linear") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unif(-3.0, 3.0);
    auto space = FiniteProbSpace::uniform(4);
    AtomPartition partition = pairs_partition(space);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> values(4);
        for (double& v : values) v = unif(rng);
        RandomScalar zeta = rs(space, values);
        double a = unif(rng), b = unif(rng);
        RandomScalar eta = rs(space, {a, a, b, b});  // measurable for the partition

        RandomScalar lhs = cond_expectation(eta * zeta, partition);
        RandomScalar rhs = eta * cond_expectation(zeta, partition);
        for (std::size_t i = 0; i < 4; ++i) CHECK(lhs[i] == doctest::Approx(rhs[i]).epsilon(1e-12));
    }
}
