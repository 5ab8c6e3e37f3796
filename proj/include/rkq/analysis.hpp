#ifndef RKQ_ANALYSIS_HPP
#define RKQ_ANALYSIS_HPP

#include <cstdint>
#include <vector>

#include "rkq/engine.hpp"
#include "rkq/problem.hpp"
#include "rkq/types.hpp"

namespace rkq {

/// Per-node diagnostics for a completed run. The reference solution stands in
/// for the exact one throughout; this is justified by the reference guard
/// (max_norm(delta8) much smaller than the tolerance).
struct DiagnosticsReport {
    std::vector<double> hamiltonian_error;  // |H(y34) - h_exact|
    std::vector<double> hamiltonian_bound;  // (|dq/dt| + |dp/dt|) * delta at y8
    std::vector<double> trajectory_error;   // ||y34 - y8||_2
    double max_trajectory_error = 0.0;
    double max_hamiltonian_error = 0.0;
    std::int64_t bound_violations = 0;
};

/// First-order bound on the Hamiltonian error for a solution within delta of
/// the state y8: (|dq/dt| + |dp/dt|) * delta, derivatives at y8.
double hamiltonian_bound(const HamiltonianProblem& problem, const StateVector& y8,
                         double delta);

/// Euclidean phase-space distance between the working and reference states.
double trajectory_error(const StateVector& y34, const StateVector& y8);

/// Per-node tolerances tolerance_at(y34, spec) for a trajectory.
std::vector<double> tolerance_series(const Trajectory& traj, const ToleranceSpec& spec);

/// Compute the per-node series and count the nodes where the first-order
/// Hamiltonian bound fails beyond second-order slack:
///   |H(y34) - H(y8)| > (|dq/dt| + |dp/dt|) * e + 100 * e^2,
/// with e = max_norm(y34 - y8) and derivatives at y8. The slack constant 100
/// dominates the dropped Taylor terms for O(1) Hessians at e near 1e-6.
DiagnosticsReport diagnose(const Trajectory& traj, const HamiltonianProblem& problem,
                           const std::vector<double>& delta_series);

}  // namespace rkq

#endif  // RKQ_ANALYSIS_HPP
