"""Adaptive Runge-Kutta integration of Hamiltonian systems with stepwise
global-error control and high-order quenching."""

from ._core import (  # noqa: F401
    ButcherTableau,
    DiagnosticsReport,
    HamiltonianProblem,
    IvpProblem,
    NodeRecord,
    RunConfig,
    RunSummary,
    SolverError,
    StepAttempt,
    ToleranceMode,
    ToleranceSpec,
    Trajectory,
    __version__,
    adapt_step,
    builtin_tableau,
    builtin_tableaus,
    diagnose,
    empirical_order,
    eval_hamiltonian_error,
    hamiltonian_bound,
    harmonic_problem,
    integrate,
    integrate_unquenched,
    pair_step,
    pendulum_problem,
    propagate_global_error,
    quench_decision,
    read_trajectory_csv,
    reference_error_guard,
    reference_step,
    rk_step,
    tolerance_at,
    tolerance_series,
    trajectory_error,
    write_figures,
    write_summary,
    write_trajectory_csv,
)
