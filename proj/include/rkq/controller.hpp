#ifndef RKQ_CONTROLLER_HPP
#define RKQ_CONTROLLER_HPP

#include "rkq/tableau.hpp"
#include "rkq/types.hpp"

namespace rkq {

enum class ToleranceMode { absolute, relative };

/// Per-node tolerance parameters. Absolute-only mode is equivalent to
/// delta_rel = 0.
struct ToleranceSpec {
    double delta_abs = 1e-6;
    double delta_rel = 0.0;
    ToleranceMode mode = ToleranceMode::absolute;
};

/// Result of one low/high pair evaluation plus the controller's verdict.
struct StepAttempt {
    StateVector y_low;                // lower-order result
    StateVector y_high;               // higher-order result, propagated on acceptance
    StateVector local_error_estimate; // componentwise |y_high - y_low|
    double h_used = 0.0;
    bool accepted = false;
    double h_next = 0.0;
};

/// Tolerance at the state y:
///   absolute mode: delta_abs
///   relative mode: min_i max(delta_abs, delta_rel * |y_i|)
double tolerance_at(const StateVector& y, const ToleranceSpec& spec);

/// Evaluate both members of the pair over one trial step. The acceptance
/// fields of the returned attempt are left unset.
StepAttempt pair_step(const ButcherTableau& low, const ButcherTableau& high,
                      const RhsFn& rhs, double t, const StateVector& y, double h);

struct StepControl {
    bool accepted = false;
    double h_next = 0.0;
};

/// Elementary stepsize controller: accept iff err <= delta, and
///   h_next = h * clamp(0.9 * (delta/err)^(1/(r+1)), 1/5, 5)
/// with err floored at 1e-300. r is the order of the lower method.
StepControl adapt_step(double err, double delta, double h_used, int r = 3);

}  // namespace rkq

#endif  // RKQ_CONTROLLER_HPP
