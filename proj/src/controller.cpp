#include "rkq/controller.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rkq {

double tolerance_at(const StateVector& y, const ToleranceSpec& spec) {
    if (spec.delta_abs <= 0.0)
        throw std::invalid_argument("tolerance_at: delta_abs must be positive");
    if ((spec.mode == ToleranceMode::absolute) != (spec.delta_rel == 0.0))
        throw std::invalid_argument("tolerance_at: absolute mode is delta_rel == 0");
    if (spec.mode == ToleranceMode::absolute) return spec.delta_abs;
    double delta = std::numeric_limits<double>::infinity();
    for (double yi : y)
        delta = std::min(delta, std::max(spec.delta_abs, spec.delta_rel * std::abs(yi)));
    return delta;
}

StepAttempt pair_step(const ButcherTableau& low, const ButcherTableau& high,
                      const RhsFn& rhs, double t, const StateVector& y, double h) {
    StepAttempt attempt;
    attempt.y_low = rk_step(low, rhs, t, y, h);
    attempt.y_high = rk_step(high, rhs, t, y, h);
    attempt.h_used = h;
    attempt.local_error_estimate.resize(y.size());
    for (std::size_t m = 0; m < y.size(); ++m)
        attempt.local_error_estimate[m] = std::abs(attempt.y_high[m] - attempt.y_low[m]);
    return attempt;
}

StepControl adapt_step(double err, double delta, double h_used, int r) {
    const double floored = std::max(err, 1e-300);
    const double factor =
        std::clamp(0.9 * std::pow(delta / floored, 1.0 / (r + 1)), 0.2, 5.0);
    return {err <= delta, h_used * factor};
}

}  // namespace rkq
