#ifndef RKQ_TABLEAU_HPP
#define RKQ_TABLEAU_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "rkq/types.hpp"

namespace rkq {

/// Coefficients of an explicit Runge-Kutta method.
///
/// The constructor enforces the structural invariants: a is strictly lower
/// triangular, sum(b) = 1 and c[i] = sum_j a[i][j], both to 1e-14 absolute.
struct ButcherTableau {
    ButcherTableau(std::string name_, int declared_order_,
                   std::vector<std::vector<double>> a_, std::vector<double> b_,
                   std::vector<double> c_);

    std::size_t stage_count() const { return b.size(); }

    std::string name;
    int declared_order;
    std::vector<std::vector<double>> a;  // stage coupling, strictly lower triangular
    std::vector<double> b;               // weights
    std::vector<double> c;               // abscissae
};

/// One explicit RK step: returns y + h * F(t, y, h).
///
/// Stages are evaluated sequentially in index order with plain left-to-right
/// accumulation, so identical inputs give bit-identical results.
/// Throws StepFailure if any stage derivative is non-finite.
StateVector rk_step(const ButcherTableau& tableau, const RhsFn& rhs, double t,
                    const StateVector& y, double h);

/// Built-in methods: forward Euler, Kutta's third-order method, the classical
/// fourth-order method, and the 11-stage eighth-order Cooper-Verner method.
const std::vector<ButcherTableau>& builtin_tableaus();

/// Lookup by name ("euler", "rk3", "rk4", "rk8"). Throws std::invalid_argument
/// for unknown names.
const ButcherTableau& builtin_tableau(const std::string& name);

struct IvpProblem;  // problem.hpp

/// Least-squares slope of log(endpoint global error) vs log(h) for fixed-step
/// integration of a problem with a closed-form solution.
///
/// h_sequence must have at least 4 entries, each half the previous; each h is
/// snapped to an integer number of steps over [t0, t_end]. Throws
/// OrderNotMeasurable if the error at the largest h is already below
/// 100 * machine epsilon.
double empirical_order(const ButcherTableau& tableau, const IvpProblem& problem,
                       double t_end, const std::vector<double>& h_sequence);

}  // namespace rkq

#endif  // RKQ_TABLEAU_HPP
