#ifndef RKQ_ENGINE_HPP
#define RKQ_ENGINE_HPP

#include <cstdint>
#include <vector>

#include "rkq/controller.hpp"
#include "rkq/problem.hpp"
#include "rkq/types.hpp"

namespace rkq {

/// State recorded at one accepted node. The initial condition is node 0 with
/// h = 0 and all error fields zero. At a quenched node y34 == y8 bit-exactly
/// and gerr is identically zero.
struct NodeRecord {
    std::int64_t index = 0;
    double t = 0.0;
    double h = 0.0;    // step taken to reach this node
    Vec2 y34{};        // working (q, p)
    Vec2 y8{};         // reference (q, p)
    Vec2 gerr{};       // y34 - y8, componentwise, as stored
    Vec2 eps8{};       // reference local-error estimate over the last step
    Vec2 delta8{};     // accumulated reference global-error estimate
    bool quenched = false;
    double H34 = 0.0;
    double H8 = 0.0;
};

struct RunConfig {
    double t_end = 4000.0;
    ToleranceSpec tolerance;
    double h0 = 0.01;
    double h_min = 1e-12;
    bool quench_enabled = true;
    std::int64_t max_steps = 10'000'000;
    std::int64_t subsample = 1;  // output thinning, used by the CSV writer
};

struct RunSummary {
    std::int64_t node_count = 0;
    std::int64_t quench_count = 0;
    double max_gerr_q = 0.0;
    double max_gerr_p = 0.0;
    double max_h_err = 0.0;      // max |H34 - h_exact|
    double max_traj_err = 0.0;   // max Euclidean norm of y34 - y8
    double max_delta8 = 0.0;     // max over nodes of max_norm(delta8)
    bool reference_guard_ok = true;
};

struct Trajectory {
    std::vector<NodeRecord> nodes;
    RunSummary summary;
};

/// True iff the estimated global error exceeds the tolerance (strict).
bool quench_decision(const Vec2& global_error_est, double delta);

/// Integrate the problem with adaptive low/high pair stepping, a synchronized
/// high-order reference on the same nodes, per-node global-error estimation,
/// and quenching of the working solution whenever the estimate exceeds the
/// node tolerance.
///
/// Throws StepsizeUnderflow or MaxStepsExceeded on abort; a failed reference
/// guard only flags the summary (and warns once on stderr).
Trajectory integrate(const HamiltonianProblem& problem, const RunConfig& config);

/// The same loop with the quench step disabled; errors accumulate freely.
Trajectory integrate_unquenched(const HamiltonianProblem& problem, RunConfig config);

}  // namespace rkq

#endif  // RKQ_ENGINE_HPP
