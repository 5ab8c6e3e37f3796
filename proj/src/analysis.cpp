#include "rkq/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace rkq {

double hamiltonian_bound(const HamiltonianProblem& problem, const StateVector& y8,
                         double delta) {
    const StateVector f = problem.ivp.rhs(problem.ivp.t0, y8);
    return (std::abs(f[0]) + std::abs(f[1])) * delta;
}

double trajectory_error(const StateVector& y34, const StateVector& y8) {
    if (y34.size() != y8.size())
        throw std::invalid_argument("trajectory_error: dimension mismatch");
    double s = 0.0;
    for (std::size_t m = 0; m < y34.size(); ++m)
        s += (y34[m] - y8[m]) * (y34[m] - y8[m]);
    return std::sqrt(s);
}

std::vector<double> tolerance_series(const Trajectory& traj, const ToleranceSpec& spec) {
    std::vector<double> series;
    series.reserve(traj.nodes.size());
    for (const NodeRecord& node : traj.nodes)
        series.push_back(tolerance_at({node.y34[0], node.y34[1]}, spec));
    return series;
}

DiagnosticsReport diagnose(const Trajectory& traj, const HamiltonianProblem& problem,
                           const std::vector<double>& delta_series) {
    if (traj.nodes.empty())
        throw std::invalid_argument("diagnose: empty trajectory");
    if (delta_series.size() != traj.nodes.size())
        throw std::invalid_argument("diagnose: delta series length mismatch");

    DiagnosticsReport report;
    report.hamiltonian_error.reserve(traj.nodes.size());
    report.hamiltonian_bound.reserve(traj.nodes.size());
    report.trajectory_error.reserve(traj.nodes.size());

    for (std::size_t i = 0; i < traj.nodes.size(); ++i) {
        const NodeRecord& node = traj.nodes[i];
        const StateVector y34 = {node.y34[0], node.y34[1]};
        const StateVector y8 = {node.y8[0], node.y8[1]};

        const double h_err = std::abs(node.H34 - problem.h_exact);
        report.hamiltonian_error.push_back(h_err);
        report.hamiltonian_bound.push_back(hamiltonian_bound(problem, y8, delta_series[i]));
        report.trajectory_error.push_back(trajectory_error(y34, y8));

        report.max_hamiltonian_error = std::max(report.max_hamiltonian_error, h_err);
        report.max_trajectory_error =
            std::max(report.max_trajectory_error, report.trajectory_error.back());

        // First-order bound against the reference, with second-order slack:
        // |H(y34) - H(y8)| <= (|dq/dt| + |dp/dt|) e + 100 e^2, e the actual
        // componentwise deviation at this node.
        const double e = std::max(std::abs(node.gerr[0]), std::abs(node.gerr[1]));
        const double lhs = std::abs(node.H34 - node.H8);
        if (lhs > hamiltonian_bound(problem, y8, e) + 100.0 * e * e)
            ++report.bound_violations;
    }
    return report;
}

}  // namespace rkq
