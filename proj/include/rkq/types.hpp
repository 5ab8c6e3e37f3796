#ifndef RKQ_TYPES_HPP
#define RKQ_TYPES_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rkq {

/// State of the ODE system at one instant. For Hamiltonian problems the
/// ordering is (q, p).
using StateVector = std::vector<double>;

/// Fixed-size 2-vector used for the (q, p) error bookkeeping.
using Vec2 = std::array<double, 2>;

/// 2x2 matrix, row-major: m[row][col].
using Mat2 = std::array<std::array<double, 2>, 2>;

/// Right-hand side f(t, y) of the first-order system y' = f(t, y).
using RhsFn = std::function<StateVector(double, const StateVector&)>;

/// Jacobian df/dy of a two-dimensional right-hand side.
using JacFn = std::function<Mat2(double, const StateVector&)>;

inline double max_norm(const StateVector& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline double max_norm(const Vec2& v) {
    return std::max(std::abs(v[0]), std::abs(v[1]));
}

inline double euclidean_norm(const StateVector& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline bool all_finite(const StateVector& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

/// Base class for run-aborting solver failures.
class SolverError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A stage evaluation produced a non-finite value.
class StepFailure : public SolverError {
  public:
    StepFailure(std::size_t stage, double t)
        : SolverError("non-finite stage value at stage " + std::to_string(stage) +
                      ", t = " + std::to_string(t)),
          stage_index(stage) {}
    std::size_t stage_index;
};

/// The controller drove the stepsize below the configured minimum.
class StepsizeUnderflow : public SolverError {
  public:
    using SolverError::SolverError;
};

/// The integration exceeded the configured step budget.
class MaxStepsExceeded : public SolverError {
  public:
    using SolverError::SolverError;
};

/// Convergence-order measurement hit the rounding floor.
class OrderNotMeasurable : public SolverError {
  public:
    using SolverError::SolverError;
};

}  // namespace rkq

#endif  // RKQ_TYPES_HPP
