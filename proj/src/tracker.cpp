#include "rkq/tracker.hpp"

#include <cmath>

namespace rkq {

ReferenceStep reference_step(const ButcherTableau& tableau, const RhsFn& rhs,
                             double t, const StateVector& y, double h) {
    const StateVector y_full = rk_step(tableau, rhs, t, y, h);
    const StateVector y_mid = rk_step(tableau, rhs, t, y, h / 2.0);
    StateVector y_half = rk_step(tableau, rhs, t + h / 2.0, y_mid, h / 2.0);

    const double scale = std::exp2(tableau.declared_order);  // 2^z
    ReferenceStep result;
    result.eps.resize(y.size());
    for (std::size_t m = 0; m < y.size(); ++m)
        result.eps[m] = (y_half[m] - y_full[m]) * (scale / (scale - 1.0));
    result.y_next = std::move(y_half);
    return result;
}

Vec2 propagate_global_error(const Vec2& delta_prev, const Vec2& eps, double h,
                            const Mat2& jac) {
    return {eps[0] + (1.0 + h * jac[0][0]) * delta_prev[0] + h * jac[0][1] * delta_prev[1],
            eps[1] + h * jac[1][0] * delta_prev[0] + (1.0 + h * jac[1][1]) * delta_prev[1]};
}

bool reference_error_guard(const Vec2& delta, double delta_tol, double margin) {
    return max_norm(delta) <= margin * delta_tol;
}

}  // namespace rkq
