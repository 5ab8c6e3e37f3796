#include "rkq/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace rkq {

HamiltonianProblem pendulum_problem() {
    HamiltonianProblem prob;
    prob.hamiltonian = [](double p, double q) {
        return p * p / 2.0 - (1.0 - p / 6.0) * std::cos(q);
    };

    prob.ivp.dimension = 2;
    prob.ivp.rhs = [](double, const StateVector& y) -> StateVector {
        const double q = y[0], p = y[1];
        return {p + std::cos(q) / 6.0, (p / 6.0 - 1.0) * std::sin(q)};
    };
    prob.ivp.jacobian = [](double, const StateVector& y) -> Mat2 {
        const double q = y[0], p = y[1];
        return {{{-std::sin(q) / 6.0, 1.0},
                 {(p / 6.0 - 1.0) * std::cos(q), std::sin(q) / 6.0}}};
    };
    prob.ivp.t0 = 0.0;
    prob.ivp.y0 = {std::acos(-0.8), 0.0};
    prob.h_exact = prob.hamiltonian(prob.ivp.y0[1], prob.ivp.y0[0]);
    return prob;
}

HamiltonianProblem harmonic_problem() {
    HamiltonianProblem prob;
    prob.hamiltonian = [](double p, double q) { return (p * p + q * q) / 2.0; };

    prob.ivp.dimension = 2;
    prob.ivp.rhs = [](double, const StateVector& y) -> StateVector {
        return {y[1], -y[0]};
    };
    prob.ivp.jacobian = [](double, const StateVector&) -> Mat2 {
        return {{{0.0, 1.0}, {-1.0, 0.0}}};
    };
    prob.ivp.t0 = 0.0;
    prob.ivp.y0 = {1.0, 0.0};
    prob.ivp.exact_solution = [](double t) -> StateVector {
        return {std::cos(t), -std::sin(t)};
    };
    prob.h_exact = 0.5;
    return prob;
}

double eval_hamiltonian_error(const HamiltonianProblem& prob, const StateVector& y) {
    return std::abs(prob.hamiltonian(y[1], y[0]) - prob.h_exact);
}

Mat2 finite_difference_jacobian(const RhsFn& rhs, double t, const StateVector& y) {
    if (y.size() != 2)
        throw std::invalid_argument("finite_difference_jacobian: state must be 2-dimensional");
    Mat2 jac{};
    for (std::size_t col = 0; col < 2; ++col) {
        const double step = std::max(1e-6, 1e-6 * std::abs(y[col]));
        StateVector yp = y, ym = y;
        yp[col] += step;
        ym[col] -= step;
        const StateVector fp = rhs(t, yp);
        const StateVector fm = rhs(t, ym);
        for (std::size_t row = 0; row < 2; ++row)
            jac[row][col] = (fp[row] - fm[row]) / (2.0 * step);
    }
    return jac;
}

Mat2 problem_jacobian(const IvpProblem& problem, double t, const StateVector& y) {
    if (problem.jacobian) return (*problem.jacobian)(t, y);
    return finite_difference_jacobian(problem.rhs, t, y);
}

}  // namespace rkq
