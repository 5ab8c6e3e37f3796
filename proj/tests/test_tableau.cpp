#include <doctest.h>

#include <cmath>

#include "rkq/problem.hpp"
#include "rkq/tableau.hpp"

using namespace rkq;

namespace {

const RhsFn zero_rhs = [](double, const StateVector& y) {
    return StateVector(y.size(), 0.0);
};

const RhsFn identity_rhs = [](double, const StateVector& y) { return y; };

}  // namespace

TEST_CASE("builtin tableaus satisfy the structural invariants") {
    const auto& tables = builtin_tableaus();
    REQUIRE(tables.size() >= 4);
    for (const auto& tab : tables) {
        double bsum = 0.0;
        for (double bi : tab.b) bsum += bi;
        CHECK(std::abs(bsum - 1.0) <= 1e-14);
        for (std::size_t i = 0; i < tab.stage_count(); ++i) {
            double rowsum = 0.0;
            for (std::size_t j = 0; j < tab.stage_count(); ++j) {
                if (j >= i) CHECK(tab.a[i][j] == 0.0);
                rowsum += tab.a[i][j];
            }
            CHECK(std::abs(rowsum - tab.c[i]) <= 1e-14);
        }
    }
}

TEST_CASE("rk8 satisfies the quadrature order conditions through k = 7 only") {
    // sum_i b_i c_i^k = 1/(k+1) is necessary for order k+1; an order-8
    // method meets k = 0..7 and must break at k = 8.
    const auto& tab = builtin_tableau("rk8");
    for (int k = 0; k <= 7; ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i < tab.stage_count(); ++i)
            sum += tab.b[i] * std::pow(tab.c[i], k);
        CHECK(std::abs(sum - 1.0 / (k + 1)) <= 1e-13);
    }
    double sum8 = 0.0;
    for (std::size_t i = 0; i < tab.stage_count(); ++i)
        sum8 += tab.b[i] * std::pow(tab.c[i], 8);
    CHECK(std::abs(sum8 - 1.0 / 9.0) > 1e-6);
}

TEST_CASE("builtin lookup returns the documented methods") {
    CHECK(builtin_tableau("euler").stage_count() == 1);
    CHECK(builtin_tableau("euler").declared_order == 1);
    CHECK(builtin_tableau("rk3").stage_count() == 3);
    CHECK(builtin_tableau("rk3").declared_order == 3);
    CHECK(builtin_tableau("rk4").stage_count() == 4);
    CHECK(builtin_tableau("rk4").declared_order == 4);
    CHECK(builtin_tableau("rk8").declared_order == 8);
    CHECK(builtin_tableau("rk8").stage_count() >= 11);
    CHECK_THROWS_AS(builtin_tableau("nosuch"), std::invalid_argument);
}

TEST_CASE("tableau constructor rejects malformed input") {
    // implicit entry
    CHECK_THROWS_AS(ButcherTableau("bad", 1, {{1.0}}, {1.0}, {0.0}),
                    std::invalid_argument);
    // weights that do not sum to 1
    CHECK_THROWS_AS(ButcherTableau("bad", 1, {{0.0}}, {0.5}, {0.0}),
                    std::invalid_argument);
    // c inconsistent with the row sums
    CHECK_THROWS_AS(
        ButcherTableau("bad", 2, {{0.0, 0.0}, {0.5, 0.0}}, {0.5, 0.5}, {0.0, 0.25}),
        std::invalid_argument);
}

TEST_CASE("rk_step on zero rhs returns the state unchanged") {
    const StateVector y = {1.5, -2.0};
    for (const auto& tab : builtin_tableaus()) {
        const StateVector out = rk_step(tab, zero_rhs, 0.7, y, 0.3);
        CHECK(out[0] == 1.5);
        CHECK(out[1] == -2.0);
    }
}

TEST_CASE("rk_step with the Euler tableau on y' = y") {
    const StateVector out = rk_step(builtin_tableau("euler"), identity_rhs, 0.0, {1.0}, 0.1);
    CHECK(out[0] == doctest::Approx(1.1).epsilon(1e-15));
}

TEST_CASE("classical rk4 on y' = y reproduces the degree-4 Taylor polynomial") {
    const double h = 0.1;
    // oracle: sum_{k=0..4} h^k / k!
    double expected = 0.0, term = 1.0;
    for (int k = 0; k <= 4; ++k) {
        expected += term;
        term *= h / (k + 1);
    }
    const StateVector out = rk_step(builtin_tableau("rk4"), identity_rhs, 0.0, {1.0}, h);
    CHECK(out[0] == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("rk_step is deterministic") {
    const auto prob = pendulum_problem();
    const StateVector a = rk_step(builtin_tableau("rk8"), prob.ivp.rhs, 0.0, prob.ivp.y0, 0.05);
    const StateVector b = rk_step(builtin_tableau("rk8"), prob.ivp.rhs, 0.0, prob.ivp.y0, 0.05);
    CHECK(a[0] == b[0]);
    CHECK(a[1] == b[1]);
}

TEST_CASE("constant shift of a y-independent rhs adds exactly h*k") {
    const RhsFn f = [](double t, const StateVector&) -> StateVector {
        return {std::sin(t), std::cos(t)};
    };
    const StateVector shift = {0.7, -0.3};
    const RhsFn f_shifted = [&](double t, const StateVector& y) {
        StateVector v = f(t, y);
        v[0] += shift[0];
        v[1] += shift[1];
        return v;
    };
    const StateVector y = {0.2, -1.4};
    for (const char* name : {"rk3", "rk4", "rk8"}) {
        for (double h : {0.5, 0.1, 0.013}) {
            const StateVector base = rk_step(builtin_tableau(name), f, 0.3, y, h);
            const StateVector shifted = rk_step(builtin_tableau(name), f_shifted, 0.3, y, h);
            CHECK(shifted[0] == doctest::Approx(base[0] + h * shift[0]).epsilon(1e-14));
            CHECK(shifted[1] == doctest::Approx(base[1] + h * shift[1]).epsilon(1e-14));
        }
    }
}

TEST_CASE("non-finite stage values raise StepFailure with the stage index") {
    const RhsFn inf_rhs = [](double, const StateVector& y) {
        return StateVector(y.size(), std::numeric_limits<double>::infinity());
    };
    CHECK_THROWS_AS(rk_step(builtin_tableau("rk4"), inf_rhs, 0.0, {1.0}, 0.1), StepFailure);

    // finite at c = 0, NaN at the later stage points
    const RhsFn late_nan = [](double t, const StateVector& y) {
        return StateVector(y.size(), t > 0.0 ? std::nan("") : 1.0);
    };
    try {
        rk_step(builtin_tableau("rk4"), late_nan, 0.0, {1.0}, 0.1);
        FAIL("expected StepFailure");
    } catch (const StepFailure& e) {
        CHECK(e.stage_index == 1);
    }
}

TEST_CASE("empirical order matches the declared order on the harmonic oscillator") {
    const auto prob = harmonic_problem();
    const std::vector<double> hs = {1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64};

    CHECK(empirical_order(builtin_tableau("euler"), prob.ivp, 1.0, hs) ==
          doctest::Approx(1.0).epsilon(0.1));
    CHECK(empirical_order(builtin_tableau("rk3"), prob.ivp, 1.0, hs) ==
          doctest::Approx(3.0).epsilon(0.2 / 3.0));
    CHECK(empirical_order(builtin_tableau("rk4"), prob.ivp, 1.0, hs) ==
          doctest::Approx(4.0).epsilon(0.2 / 4.0));
    // order 8 needs larger steps to stay above the rounding floor
    CHECK(empirical_order(builtin_tableau("rk8"), prob.ivp, 1.0, {1.0, 0.5, 0.25, 0.125}) ==
          doctest::Approx(8.0).epsilon(0.5 / 8.0));
}

TEST_CASE("empirical order is not measurable at the rounding floor") {
    auto prob = harmonic_problem();
    prob.ivp.rhs = zero_rhs;  // solution constant, error identically zero
    prob.ivp.exact_solution = [y0 = prob.ivp.y0](double) { return y0; };
    CHECK_THROWS_AS(
        empirical_order(builtin_tableau("rk4"), prob.ivp, 1.0, {0.5, 0.25, 0.125, 0.0625}),
        OrderNotMeasurable);
}

TEST_CASE("empirical order validates the stepsize sequence") {
    const auto prob = harmonic_problem();
    CHECK_THROWS_AS(empirical_order(builtin_tableau("rk4"), prob.ivp, 1.0, {0.5, 0.25, 0.125}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        empirical_order(builtin_tableau("rk4"), prob.ivp, 1.0, {0.5, 0.3, 0.15, 0.075}),
        std::invalid_argument);

    auto no_exact = prob.ivp;
    no_exact.exact_solution.reset();
    CHECK_THROWS_AS(
        empirical_order(builtin_tableau("rk4"), no_exact, 1.0, {0.5, 0.25, 0.125, 0.0625}),
        std::invalid_argument);
}
