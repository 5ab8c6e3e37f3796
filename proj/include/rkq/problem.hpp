#ifndef RKQ_PROBLEM_HPP
#define RKQ_PROBLEM_HPP

#include <functional>
#include <optional>

#include "rkq/types.hpp"

namespace rkq {

/// A first-order initial-value problem y' = f(t, y), y(t0) = y0.
struct IvpProblem {
    std::size_t dimension = 0;
    RhsFn rhs;
    std::optional<JacFn> jacobian;  // df/dy, two-dimensional problems only
    double t0 = 0.0;
    StateVector y0;
    std::optional<std::function<StateVector(double)>> exact_solution;
};

/// A two-dimensional canonical Hamiltonian problem with state (q, p).
///
/// rhs is (dH/dp, -dH/dq); h_exact is the conserved value H(p0, q0).
struct HamiltonianProblem {
    IvpProblem ivp;
    std::function<double(double p, double q)> hamiltonian;
    double h_exact = 0.0;
};

/// Pendulum-type system with H(p, q) = p^2/2 - (1 - p/6) cos q,
/// q(0) = arccos(-0.8), p(0) = 0. No closed-form solution.
HamiltonianProblem pendulum_problem();

/// Harmonic oscillator H = (p^2 + q^2)/2 with y0 = (1, 0) and exact solution
/// q = cos t, p = -sin t.
HamiltonianProblem harmonic_problem();

/// |H(p, q) - h_exact| at the state y = (q, p).
double eval_hamiltonian_error(const HamiltonianProblem& prob, const StateVector& y);

/// Central-difference Jacobian of a two-dimensional rhs,
/// step = max(1e-6, 1e-6 * |component|) per column.
Mat2 finite_difference_jacobian(const RhsFn& rhs, double t, const StateVector& y);

/// The problem's analytic Jacobian when supplied, else the central-difference
/// fallback.
Mat2 problem_jacobian(const IvpProblem& problem, double t, const StateVector& y);

}  // namespace rkq

#endif  // RKQ_PROBLEM_HPP
