#include "rkq/tableau.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rkq/problem.hpp"

namespace rkq {

ButcherTableau::ButcherTableau(std::string name_, int declared_order_,
                               std::vector<std::vector<double>> a_,
                               std::vector<double> b_, std::vector<double> c_)
    : name(std::move(name_)),
      declared_order(declared_order_),
      a(std::move(a_)),
      b(std::move(b_)),
      c(std::move(c_)) {
    const std::size_t s = b.size();
    if (s == 0 || declared_order < 1)
        throw std::invalid_argument("ButcherTableau: empty tableau");
    if (a.size() != s || c.size() != s)
        throw std::invalid_argument("ButcherTableau: inconsistent dimensions");

    double bsum = 0.0;
    for (std::size_t i = 0; i < s; ++i) {
        if (a[i].size() != s)
            throw std::invalid_argument("ButcherTableau: a must be square");
        for (std::size_t j = i; j < s; ++j)
            if (a[i][j] != 0.0)
                throw std::invalid_argument(
                    "ButcherTableau: only explicit methods are supported (a[i][j] != 0 for j >= i)");
        double rowsum = 0.0;
        for (std::size_t j = 0; j < i; ++j) rowsum += a[i][j];
        if (std::abs(rowsum - c[i]) > 1e-14)
            throw std::invalid_argument("ButcherTableau: c[i] must equal the row sum of a");
        bsum += b[i];
    }
    if (std::abs(bsum - 1.0) > 1e-14)
        throw std::invalid_argument("ButcherTableau: sum of b must be 1");
}

StateVector rk_step(const ButcherTableau& tableau, const RhsFn& rhs, double t,
                    const StateVector& y, double h) {
    const std::size_t s = tableau.stage_count();
    const std::size_t n = y.size();
    std::vector<StateVector> k(s);
    StateVector yi(n);

    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t m = 0; m < n; ++m) {
            double acc = 0.0;
            for (std::size_t j = 0; j < i; ++j) acc += tableau.a[i][j] * k[j][m];
            yi[m] = y[m] + h * acc;
        }
        k[i] = rhs(t + tableau.c[i] * h, yi);
        if (k[i].size() != n)
            throw std::invalid_argument("rk_step: rhs changed the state dimension");
        if (!all_finite(k[i])) throw StepFailure(i, t);
    }

    StateVector out(n);
    for (std::size_t m = 0; m < n; ++m) {
        double acc = 0.0;
        for (std::size_t i = 0; i < s; ++i) acc += tableau.b[i] * k[i][m];
        out[m] = y[m] + h * acc;
    }
    return out;
}

namespace {

std::vector<std::vector<double>> zeros(std::size_t s) {
    return std::vector<std::vector<double>>(s, std::vector<double>(s, 0.0));
}

ButcherTableau make_euler() {
    return {"euler", 1, zeros(1), {1.0}, {0.0}};
}

// Kutta (1901) third-order method.
ButcherTableau make_rk3() {
    auto a = zeros(3);
    a[1][0] = 0.5;
    a[2][0] = -1.0;
    a[2][1] = 2.0;
    return {"rk3", 3, std::move(a), {1.0 / 6, 2.0 / 3, 1.0 / 6}, {0.0, 0.5, 1.0}};
}

// Classical fourth-order method.
ButcherTableau make_rk4() {
    auto a = zeros(4);
    a[1][0] = 0.5;
    a[2][1] = 0.5;
    a[3][2] = 1.0;
    return {"rk4", 4, std::move(a),
            {1.0 / 6, 1.0 / 3, 1.0 / 3, 1.0 / 6},
            {0.0, 0.5, 0.5, 1.0}};
}

// Cooper & Verner (1972), 11-stage eighth-order method. All entries are
// closed forms in s = sqrt(21); the weighted quadrature sums b.c^k match
// 1/(k+1) through k = 7 and break at k = 8, as an order-8 method must.
ButcherTableau make_rk8() {
    const double s = std::sqrt(21.0);
    auto a = zeros(11);
    a[1][0] = 1.0 / 2;
    a[2][0] = 1.0 / 4;
    a[2][1] = 1.0 / 4;
    a[3][0] = 1.0 / 7;
    a[3][1] = (-7 - 3 * s) / 98;
    a[3][2] = (21 + 5 * s) / 49;
    a[4][0] = (11 + s) / 84;
    a[4][2] = (18 + 4 * s) / 63;
    a[4][3] = (21 - s) / 252;
    a[5][0] = (5 + s) / 48;
    a[5][2] = (9 + s) / 36;
    a[5][3] = (-231 + 14 * s) / 360;
    a[5][4] = (63 - 7 * s) / 80;
    a[6][0] = (10 - s) / 42;
    a[6][2] = (-432 + 92 * s) / 315;
    a[6][3] = (633 - 145 * s) / 90;
    a[6][4] = (-504 + 115 * s) / 70;
    a[6][5] = (63 - 13 * s) / 35;
    a[7][0] = 1.0 / 14;
    a[7][4] = (14 - 3 * s) / 126;
    a[7][5] = (13 - 3 * s) / 63;
    a[7][6] = 1.0 / 9;
    a[8][0] = 1.0 / 32;
    a[8][4] = (91 - 21 * s) / 576;
    a[8][5] = 11.0 / 72;
    a[8][6] = (-385 - 75 * s) / 1152;
    a[8][7] = (63 + 13 * s) / 128;
    a[9][0] = 1.0 / 14;
    a[9][4] = 1.0 / 9;
    a[9][5] = (-733 - 147 * s) / 2205;
    a[9][6] = (515 + 111 * s) / 504;
    a[9][7] = (-51 - 11 * s) / 56;
    a[9][8] = (132 + 28 * s) / 245;
    a[10][4] = (-42 + 7 * s) / 18;
    a[10][5] = (-18 + 28 * s) / 45;
    a[10][6] = (-273 - 53 * s) / 72;
    a[10][7] = (301 + 53 * s) / 72;
    a[10][8] = (28 - 28 * s) / 45;
    a[10][9] = (49 - 7 * s) / 18;

    std::vector<double> b = {1.0 / 20, 0, 0, 0, 0, 0, 0, 49.0 / 180, 16.0 / 45,
                             49.0 / 180, 1.0 / 20};
    std::vector<double> c(11, 0.0);
    for (std::size_t i = 0; i < 11; ++i)
        for (std::size_t j = 0; j < i; ++j) c[i] += a[i][j];
    return {"rk8", 8, std::move(a), std::move(b), std::move(c)};
}

}  // namespace

const std::vector<ButcherTableau>& builtin_tableaus() {
    static const std::vector<ButcherTableau> tables = {make_euler(), make_rk3(),
                                                       make_rk4(), make_rk8()};
    return tables;
}

const ButcherTableau& builtin_tableau(const std::string& name) {
    for (const auto& t : builtin_tableaus())
        if (t.name == name) return t;
    throw std::invalid_argument("unknown tableau: " + name);
}

double empirical_order(const ButcherTableau& tableau, const IvpProblem& problem,
                       double t_end, const std::vector<double>& h_sequence) {
    if (!problem.exact_solution)
        throw std::invalid_argument("empirical_order: problem has no exact solution");
    if (h_sequence.size() < 4)
        throw std::invalid_argument("empirical_order: need at least 4 stepsizes");
    for (std::size_t i = 1; i < h_sequence.size(); ++i)
        if (std::abs(h_sequence[i] - 0.5 * h_sequence[i - 1]) > 1e-12 * h_sequence[0])
            throw std::invalid_argument("empirical_order: each h must be half the previous");

    const double span = t_end - problem.t0;
    const StateVector ref = (*problem.exact_solution)(t_end);

    std::vector<double> log_h, log_err;
    for (double h : h_sequence) {
        const auto steps = std::max<long long>(1, std::llround(span / h));
        const double h_eff = span / static_cast<double>(steps);
        StateVector y = problem.y0;
        double t = problem.t0;
        for (long long i = 0; i < steps; ++i) {
            y = rk_step(tableau, problem.rhs, t, y, h_eff);
            t = problem.t0 + h_eff * static_cast<double>(i + 1);
        }
        StateVector diff(y.size());
        for (std::size_t m = 0; m < y.size(); ++m) diff[m] = y[m] - ref[m];
        const double err = max_norm(diff);
        if (log_err.empty() && err < 100.0 * std::numeric_limits<double>::epsilon())
            throw OrderNotMeasurable(
                "empirical_order: error at the largest stepsize is at the rounding floor");
        log_h.push_back(std::log(h_eff));
        log_err.push_back(std::log(std::max(err, 1e-300)));
    }

    // least-squares slope
    const double n = static_cast<double>(log_h.size());
    const double mx = std::accumulate(log_h.begin(), log_h.end(), 0.0) / n;
    const double my = std::accumulate(log_err.begin(), log_err.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < log_h.size(); ++i) {
        sxx += (log_h[i] - mx) * (log_h[i] - mx);
        sxy += (log_h[i] - mx) * (log_err[i] - my);
    }
    return sxy / sxx;
}

}  // namespace rkq
