#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "orliczkit/orlicz_fn.hpp"

using namespace orlicz;

namespace {

const std::vector<OrliczFunction> kAllFamilies = {
    OrliczFunction::power(2.0),
    OrliczFunction::power(1.0),
    OrliczFunction::power(1.5, 0.7),
    OrliczFunction::power(3.0, 2.0),
    OrliczFunction::exp_minus_one(),
    OrliczFunction::entropy_conj(),
    OrliczFunction::piecewise({0.0, 1.0}, {1.0, 3.0}),
    OrliczFunction::piecewise({0.0, 0.5, 2.0}, {0.0, 1.0, 2.5}),
    OrliczFunction::piecewise({0.0}, {2.0}, 4.0),
    OrliczFunction::indicator_ball(1.0),
    OrliczFunction::indicator_ball(2.5),
};

}  // namespace

TEST_CASE("eval basics") {
    for (const auto& phi : kAllFamilies) {
        CHECK(phi.eval(0.0) == 0.0);
        CHECK(phi.eval(kInf) == kInf);
        CHECK_THROWS_AS(phi.eval(-0.5), std::domain_error);
    }
    CHECK(OrliczFunction::power(2.0).eval(3.0) == doctest::Approx(9.0));
    CHECK(OrliczFunction::indicator_ball(1.0).eval(1.0) == 0.0);
    CHECK(OrliczFunction::indicator_ball(1.0).eval(1.0001) == kInf);

    OrliczFunction entropy = OrliczFunction::entropy_conj();
    CHECK(entropy.eval(0.5) == 0.0);
    CHECK(entropy.eval(1.0) == 0.0);
    CHECK(entropy.eval(2.0) == doctest::Approx(2.0 * std::log(2.0) - 1.0));
    CHECK(OrliczFunction::exp_minus_one().eval(1.0) == doctest::Approx(std::exp(1.0) - 1.0));
}

TEST_CASE("piecewise eval and left continuity at the jump") {
    OrliczFunction phi = OrliczFunction::piecewise({0.0, 1.0}, {1.0, 3.0}, 2.0);
    CHECK(phi.eval(0.5) == doctest::Approx(0.5));
    CHECK(phi.eval(1.0) == doctest::Approx(1.0));
    CHECK(phi.eval(1.5) == doctest::Approx(2.5));
    CHECK(phi.eval(2.0) == doctest::Approx(4.0));  // finite left limit at the jump
    CHECK(phi.eval(2.0000001) == kInf);
}

TEST_CASE("piecewise validation") {
    CHECK_THROWS_AS(OrliczFunction::piecewise({0.5}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(OrliczFunction::piecewise({0.0, 1.0}, {2.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(OrliczFunction::piecewise({0.0}, {0.0}), std::invalid_argument);
    CHECK_NOTHROW(OrliczFunction::piecewise({0.0}, {0.0}, 1.0));  // ball in piecewise form
}

TEST_CASE("eval_random blockwise") {
    auto space = FiniteProbSpace::uniform(2);
    AtomPartition trivial = AtomPartition::trivial(space);
    RandomOrliczFunction single = RandomOrliczFunction::uniform(trivial, OrliczFunction::power(2.0));

    CHECK(single.eval(RandomScalar::zero(space)).is_zero());
    RandomScalar t(space, {1.0, 3.0});
    RandomScalar out = single.eval(t);
    CHECK(out[0] == doctest::Approx(1.0));
    CHECK(out[1] == doctest::Approx(9.0));

    AtomPartition split(space, {{0}, {1}});
    RandomOrliczFunction two(split, {OrliczFunction::power(2.0), OrliczFunction::power(3.0)});
    RandomScalar c2 = RandomScalar::constant(space, 2.0);
    RandomScalar mixed = two.eval(c2);
    CHECK(mixed[0] == doctest::Approx(4.0));
    CHECK(mixed[1] == doctest::Approx(8.0));

    CHECK_THROWS_AS(single.eval(RandomScalar(space, {-1.0, 0.0})), std::domain_error);
}

TEST_CASE("conjugate closed forms") {
    CHECK(OrliczFunction::power(2.0).conjugate() == OrliczFunction::power(2.0, 0.25));
    CHECK(OrliczFunction::power(1.0).conjugate() == OrliczFunction::indicator_ball(1.0));
    CHECK(OrliczFunction::indicator_ball(1.0).conjugate() == OrliczFunction::power(1.0));
    CHECK(OrliczFunction::exp_minus_one().conjugate() == OrliczFunction::entropy_conj());
    CHECK(OrliczFunction::entropy_conj().conjugate() == OrliczFunction::exp_minus_one());

    // piecewise: slopes and breakpoints exchange; jump becomes the final slope
    OrliczFunction phi = OrliczFunction::piecewise({0.0, 1.0}, {1.0, 2.0});
    OrliczFunction psi = phi.conjugate();
    CHECK(psi == OrliczFunction::piecewise({0.0, 1.0}, {0.0, 1.0}, 2.0));

    OrliczFunction ball_pw = OrliczFunction::piecewise({0.0}, {0.0}, 1.5);
    CHECK(ball_pw.conjugate() == OrliczFunction::piecewise({0.0}, {1.5}));
}

TEST_CASE("biconjugation") {
    // representation-exact where no transcendental arithmetic is involved
    CHECK(OrliczFunction::power(1.0, 2.0).conjugate().conjugate() ==
          OrliczFunction::power(1.0, 2.0));
    CHECK(OrliczFunction::indicator_ball(2.5).conjugate().conjugate() ==
          OrliczFunction::indicator_ball(2.5));
    CHECK(OrliczFunction::exp_minus_one().conjugate().conjugate() ==
          OrliczFunction::exp_minus_one());
    OrliczFunction pw = OrliczFunction::piecewise({0.0, 0.5, 2.0}, {0.0, 1.0, 2.5});
    CHECK(pw.conjugate().conjugate() == pw);
    OrliczFunction pwj = OrliczFunction::piecewise({0.0, 1.0}, {1.0, 3.0}, 2.0);
    CHECK(pwj.conjugate().conjugate() == pwj);

    // pow round trips keep power families exact only at sampled evaluations
    for (const auto& phi : kAllFamilies) {
        OrliczFunction back = phi.conjugate().conjugate();
        for (double t : {0.0, 0.3, 0.9, 1.0, 1.7, 3.4, 8.0}) {
            double a = phi.eval(t);
            double c = back.eval(t);
            if (a == kInf) {
                CHECK(c == kInf);
            } else {
                CHECK(c == doctest::Approx(a).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("fenchel-young inequality with equality at aligned pairs") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unif(0.0, 6.0);
    for (const auto& phi : kAllFamilies) {
        OrliczFunction psi = phi.conjugate();
        for (int trial = 0; trial < 1000; ++trial) {
            double t = unif(rng), s = unif(rng);
            double rhs_a = phi.eval(t), rhs_b = psi.eval(s);
            if (rhs_a == kInf || rhs_b == kInf) continue;
            CHECK(t * s <= rhs_a + rhs_b + 1e-10);
        }
    }
    // equality at subgradient pairs s = phi'(t) for powers
    for (double p : {1.5, 2.0, 3.0}) {
        OrliczFunction phi = OrliczFunction::power(p);
        OrliczFunction psi = phi.conjugate();
        for (double t : {0.5, 1.0, 2.0}) {
            double s = p * std::pow(t, p - 1.0);
            CHECK(t * s == doctest::Approx(phi.eval(t) + psi.eval(s)).epsilon(1e-9));
        }
    }
}

TEST_CASE("eval is nondecreasing and convex on grids") {
    for (const auto& phi : kAllFamilies) {
        double prev = 0.0;
        double prev_diff = 0.0;
        bool first = true;
        for (double t = 0.0; t <= 4.0; t += 0.05) {
            double v = phi.eval(t);
            if (v == kInf) break;
            if (!first) {
                double diff = v - prev;
                CHECK(diff >= -1e-12);
                CHECK(diff >= prev_diff - 1e-9);
                prev_diff = diff;
            }
            prev = v;
            first = false;
        }
    }
}

TEST_CASE("random conjugate") {
    auto space = FiniteProbSpace::uniform(4);
    AtomPartition partition(space, {{0, 1}, {2, 3}});

    RandomOrliczFunction single =
        RandomOrliczFunction::uniform(AtomPartition::trivial(space), OrliczFunction::power(2.0));
    CHECK(single.conjugate().block_fn(0) == OrliczFunction::power(2.0).conjugate());

    RandomOrliczFunction two(partition, {OrliczFunction::power(2.0), OrliczFunction::power(3.0)});
    RandomOrliczFunction conj = two.conjugate();
    CHECK(conj.block_fn(0) == OrliczFunction::power(2.0).conjugate());
    CHECK(conj.block_fn(1) == OrliczFunction::power(3.0).conjugate());

    // the exponent round trips exactly; the coefficient only through pow
    const auto* back = std::get_if<Power>(&conj.conjugate().block_fn(1).family());
    REQUIRE(back != nullptr);
    CHECK(back->p == 3.0);
    CHECK(back->c == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("delta2 constants") {
    CHECK(*OrliczFunction::power(2.0).delta2_constant() == doctest::Approx(4.0));
    CHECK(*OrliczFunction::power(1.0).delta2_constant() == doctest::Approx(2.0));
    CHECK(*OrliczFunction::power(3.0, 2.0).delta2_constant() == doctest::Approx(8.0));
    CHECK_FALSE(OrliczFunction::indicator_ball(1.0).delta2_constant());
    CHECK_FALSE(OrliczFunction::exp_minus_one().delta2_constant());
    CHECK_FALSE(OrliczFunction::entropy_conj().delta2_constant());
    CHECK_FALSE(OrliczFunction::piecewise({0.0}, {2.0}, 4.0).delta2_constant());
    CHECK_FALSE(OrliczFunction::piecewise({0.0, 0.5}, {0.0, 1.0}).delta2_constant());

    // breaks at (0,1) with slopes (1,3): ratio peaks at the breakpoint, phi(2)/phi(1) = 4
    CHECK(*OrliczFunction::piecewise({0.0, 1.0}, {1.0, 3.0}).delta2_constant() ==
          doctest::Approx(4.0));
}

TEST_CASE("delta2 witness is valid pointwise") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> unif(0.0, 5.0);
    auto space = FiniteProbSpace::uniform(4);
    AtomPartition partition(space, {{0, 1}, {2, 3}});
    RandomOrliczFunction Phi(partition, {OrliczFunction::power(2.0),
                                         OrliczFunction::piecewise({0.0, 1.0}, {1.0, 3.0})});
    auto witness = Phi.delta2_witness();
    REQUIRE(witness.has_value());
    CHECK(witness->strictly_positive());
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> values(4);
        for (double& v : values) v = unif(rng);
        RandomScalar t(space, values);
        RandomScalar lhs = Phi.eval(2.0 * t);
        RandomScalar rhs = *witness * Phi.eval(t);
        for (std::size_t i = 0; i < 4; ++i) CHECK(lhs[i] <= rhs[i] + 1e-9);
    }

    RandomOrliczFunction with_ball(partition,
                                   {OrliczFunction::power(2.0), OrliczFunction::indicator_ball(1.0)});
    CHECK_FALSE(with_ball.delta2_witness());
}
