#include "rkq/engine.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "rkq/tracker.hpp"

namespace rkq {

bool quench_decision(const Vec2& global_error_est, double delta) {
    return max_norm(global_error_est) > delta;
}

namespace {

Vec2 to_vec2(const StateVector& y) { return {y[0], y[1]}; }

void accumulate(RunSummary& summary, const NodeRecord& node) {
    summary.max_gerr_q = std::max(summary.max_gerr_q, std::abs(node.gerr[0]));
    summary.max_gerr_p = std::max(summary.max_gerr_p, std::abs(node.gerr[1]));
    summary.max_traj_err = std::max(
        summary.max_traj_err,
        std::sqrt(node.gerr[0] * node.gerr[0] + node.gerr[1] * node.gerr[1]));
    summary.max_delta8 = std::max(summary.max_delta8, max_norm(node.delta8));
}

}  // namespace

Trajectory integrate(const HamiltonianProblem& problem, const RunConfig& config) {
    const IvpProblem& ivp = problem.ivp;
    if (ivp.dimension != 2 || ivp.y0.size() != 2)
        throw std::invalid_argument("integrate: problem must be 2-dimensional (q, p)");
    if (config.t_end < ivp.t0)
        throw std::invalid_argument("integrate: t_end must not precede t0");
    if (config.h0 <= 0.0 || config.max_steps < 1)
        throw std::invalid_argument("integrate: invalid run configuration");

    const ButcherTableau& rk3 = builtin_tableau("rk3");
    const ButcherTableau& rk4 = builtin_tableau("rk4");
    const ButcherTableau& rk8 = builtin_tableau("rk8");

    Trajectory traj;
    StateVector y34 = ivp.y0;
    StateVector y8 = ivp.y0;
    Vec2 delta8 = {0.0, 0.0};
    double t = ivp.t0;

    NodeRecord first;
    first.t = t;
    first.y34 = to_vec2(y34);
    first.y8 = to_vec2(y8);
    first.H34 = problem.hamiltonian(y34[1], y34[0]);
    first.H8 = first.H34;
    traj.nodes.push_back(first);

    const double h_err0 = std::abs(first.H34 - problem.h_exact);
    traj.summary.max_h_err = h_err0;

    double h = config.h0;
    bool guard_warned = false;
    std::int64_t attempts = 0;
    std::int64_t quenches = 0;

    while (t < config.t_end) {
        // Land exactly on t_end; the clip may override the growth clamp.
        const double remaining = config.t_end - t;
        const bool final_step = h >= remaining;
        if (final_step) h = remaining;

        if (++attempts > config.max_steps)
            throw MaxStepsExceeded("integrate: step budget exhausted at t = " +
                                   std::to_string(t));

        const double delta = tolerance_at(y34, config.tolerance);
        StepAttempt attempt = pair_step(rk3, rk4, ivp.rhs, t, y34, h);
        const double err = max_norm(attempt.local_error_estimate);
        const StepControl ctrl = adapt_step(err, delta, h);

        if (!ctrl.accepted) {
            if (ctrl.h_next < config.h_min)
                throw StepsizeUnderflow("integrate: stepsize underflow at t = " +
                                        std::to_string(t));
            h = ctrl.h_next;
            continue;
        }

        // Reference advances over the same interval; its Jacobian is taken at
        // the start-of-step reference state, where delta8 lives.
        const Mat2 jac = problem_jacobian(ivp, t, y8);
        ReferenceStep ref = reference_step(rk8, ivp.rhs, t, y8, h);
        delta8 = propagate_global_error(delta8, {ref.eps[0], ref.eps[1]}, h, jac);

        y34 = attempt.y_high;
        y8 = std::move(ref.y_next);
        const double t_new = final_step ? config.t_end : t + h;

        NodeRecord node;
        node.index = static_cast<std::int64_t>(traj.nodes.size());
        node.t = t_new;
        node.h = h;
        node.eps8 = {ref.eps[0], ref.eps[1]};
        node.delta8 = delta8;

        Vec2 gerr = {y34[0] - y8[0], y34[1] - y8[1]};
        if (config.quench_enabled && quench_decision(gerr, delta)) {
            y34 = y8;
            gerr = {0.0, 0.0};
            node.quenched = true;
            ++quenches;
        }
        node.y34 = to_vec2(y34);
        node.y8 = to_vec2(y8);
        node.gerr = gerr;
        node.H34 = problem.hamiltonian(y34[1], y34[0]);
        node.H8 = problem.hamiltonian(y8[1], y8[0]);

        traj.summary.max_h_err =
            std::max(traj.summary.max_h_err, std::abs(node.H34 - problem.h_exact));
        accumulate(traj.summary, node);

        if (!reference_error_guard(delta8, delta)) {
            traj.summary.reference_guard_ok = false;
            if (!guard_warned) {
                std::fprintf(stderr,
                             "warning: reference global-error estimate %.3e is not "
                             "negligible against tolerance %.3e at t = %.6g\n",
                             max_norm(delta8), delta, t_new);
                guard_warned = true;
            }
        }

        traj.nodes.push_back(node);
        t = t_new;
        h = ctrl.h_next;
    }

    traj.summary.node_count = static_cast<std::int64_t>(traj.nodes.size());
    traj.summary.quench_count = quenches;
    return traj;
}

Trajectory integrate_unquenched(const HamiltonianProblem& problem, RunConfig config) {
    config.quench_enabled = false;
    return integrate(problem, config);
}

}  // namespace rkq
