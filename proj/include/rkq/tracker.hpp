#ifndef RKQ_TRACKER_HPP
#define RKQ_TRACKER_HPP

#include "rkq/tableau.hpp"
#include "rkq/types.hpp"

namespace rkq {

struct ReferenceStep {
    StateVector y_next;  // two half steps (the more accurate value is kept)
    StateVector eps;     // Richardson estimate of the full step's local error
};

/// Advance the high-order reference over [t, t+h] and estimate its local
/// error by Richardson extrapolation: one full step against two half steps,
///   eps = (y_half - y_full) * 2^z / (2^z - 1),  z = declared order.
ReferenceStep reference_step(const ButcherTableau& tableau, const RhsFn& rhs,
                             double t, const StateVector& y, double h);

/// One step of the global-error recursion:
///   delta_next = eps + (I2 + h * jac) * delta_prev.
Vec2 propagate_global_error(const Vec2& delta_prev, const Vec2& eps, double h,
                            const Mat2& jac);

/// True iff the reference's accumulated error estimate is negligible against
/// the working tolerance: max_norm(delta) <= margin * delta_tol.
bool reference_error_guard(const Vec2& delta, double delta_tol, double margin = 1e-3);

}  // namespace rkq

#endif  // RKQ_TRACKER_HPP
