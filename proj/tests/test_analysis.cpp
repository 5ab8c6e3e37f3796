#include <doctest.h>

#include <cmath>

#include "rkq/analysis.hpp"

using namespace rkq;

TEST_CASE("hamiltonian_bound is (|dq/dt| + |dp/dt|) * delta") {
    HamiltonianProblem fake;
    fake.ivp.dimension = 2;
    fake.ivp.rhs = [](double, const StateVector&) -> StateVector { return {0.5, -0.3}; };
    CHECK(hamiltonian_bound(fake, {0.0, 0.0}, 1e-6) == doctest::Approx(8e-7).epsilon(1e-15));
    CHECK(hamiltonian_bound(fake, {0.0, 0.0}, 0.0) == 0.0);

    const auto pend = pendulum_problem();
    CHECK(hamiltonian_bound(pend, pend.ivp.y0, 1e-6) ==
          doctest::Approx((0.8 / 6.0 + 0.6) * 1e-6).epsilon(1e-13));
}

TEST_CASE("trajectory_error is the Euclidean phase-space distance") {
    CHECK(trajectory_error({1.0, 2.0}, {1.0, 2.0}) == 0.0);
    CHECK(trajectory_error({1e-6, 1e-6}, {0.0, 0.0}) ==
          doctest::Approx(std::sqrt(2.0) * 1e-6).epsilon(1e-14));
    CHECK(trajectory_error({3e-7, 4e-7}, {0.0, 0.0}) == doctest::Approx(5e-7).epsilon(1e-14));
    CHECK_THROWS_AS(trajectory_error({1.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("trajectory_error is symmetric, nonnegative, zero only at equality") {
    std::uint64_t s = 77;
    auto rnd = [&s]() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(s >> 11) * 0x1.0p-53 - 0.5;
    };
    for (int i = 0; i < 100; ++i) {
        const StateVector a = {rnd(), rnd()}, b = {rnd(), rnd()};
        const double ab = trajectory_error(a, b);
        CHECK(ab == trajectory_error(b, a));
        CHECK(ab >= 0.0);
        CHECK((ab == 0.0) == (a == b));
    }
}

TEST_CASE("diagnose on the single-node trajectory is all zeros") {
    const auto prob = pendulum_problem();
    RunConfig cfg;
    cfg.t_end = 0.0;
    const auto traj = integrate(prob, cfg);
    const auto report = diagnose(traj, prob, tolerance_series(traj, cfg.tolerance));
    REQUIRE(report.trajectory_error.size() == 1);
    CHECK(report.trajectory_error[0] == 0.0);
    CHECK(report.hamiltonian_error[0] == 0.0);
    CHECK(report.max_trajectory_error == 0.0);
    CHECK(report.bound_violations == 0);
}

TEST_CASE("diagnose on a quenched pendulum run") {
    const auto prob = pendulum_problem();
    RunConfig cfg;
    cfg.t_end = 200.0;
    cfg.tolerance.delta_abs = 1e-6;
    const auto traj = integrate(prob, cfg);
    const auto report = diagnose(traj, prob, tolerance_series(traj, cfg.tolerance));

    CHECK(report.trajectory_error.size() == traj.nodes.size());
    CHECK(report.hamiltonian_bound.size() == traj.nodes.size());
    CHECK(report.bound_violations == 0);

    // sqrt(2) bound with reference-error slack
    const double cap = std::sqrt(2.0) * (1e-6 + traj.summary.max_delta8);
    for (double te : report.trajectory_error) CHECK(te <= cap);
    CHECK(report.max_trajectory_error == traj.summary.max_traj_err);
    CHECK(report.max_hamiltonian_error <= traj.summary.max_h_err);
}

TEST_CASE("diagnose validates its inputs") {
    const auto prob = pendulum_problem();
    RunConfig cfg;
    cfg.t_end = 0.0;
    const auto traj = integrate(prob, cfg);
    CHECK_THROWS_AS(diagnose(traj, prob, {}), std::invalid_argument);
    CHECK_THROWS_AS(diagnose(Trajectory{}, prob, {}), std::invalid_argument);
}
