#include <chrono>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rkq/engine.hpp"
#include "rkq/figures.hpp"
#include "rkq/output.hpp"
#include "rkq/problem.hpp"

namespace fs = std::filesystem;

namespace {

// Exit codes: 0 ok, 2 bad configuration, 3 output I/O failure, 4 run abort.
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitRun = 4;

struct ModeResult {
    rkq::Trajectory traj;
    double wall_time_s = 0.0;
};

ModeResult run_mode(const rkq::HamiltonianProblem& problem, const rkq::RunConfig& config,
                    bool quench) {
    rkq::RunConfig cfg = config;
    cfg.quench_enabled = quench;
    const auto start = std::chrono::steady_clock::now();
    ModeResult result;
    result.traj = rkq::integrate(problem, cfg);
    result.wall_time_s = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start).count();
    return result;
}

void report(const char* label, const rkq::RunSummary& s) {
    std::printf("%s: nodes=%lld quenches=%lld max_gerr=(%.4g, %.4g) max_H_err=%.4g "
                "max_delta8=%.4g guard_ok=%s\n",
                label, static_cast<long long>(s.node_count),
                static_cast<long long>(s.quench_count), s.max_gerr_q, s.max_gerr_p,
                s.max_h_err, s.max_delta8, s.reference_guard_ok ? "true" : "false");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adaptive Runge-Kutta integration of Hamiltonian systems with "
                 "stepwise global-error control and high-order quenching"};

    std::string problem_name = "pendulum";
    std::string mode = "rkq";
    double t_end = 4000.0;
    double tol_abs = 1e-6;
    double tol_rel = 0.0;
    double h0 = 0.01;
    std::int64_t subsample = 1;
    std::int64_t max_steps = 10'000'000;
    std::string out_dir = "./out";
    bool figures = false;

    app.add_option("--problem", problem_name, "Built-in problem: pendulum or harmonic");
    app.add_option("--mode", mode, "rkq, unquenched or both")
        ->check(CLI::IsMember({"rkq", "unquenched", "both"}));
    app.add_option("--t-end", t_end, "Integration end time");
    app.add_option("--tol-abs", tol_abs, "Absolute tolerance")->check(CLI::PositiveNumber);
    app.add_option("--tol-rel", tol_rel, "Relative tolerance (0 disables relative mode)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--h0", h0, "Initial stepsize")->check(CLI::PositiveNumber);
    app.add_option("--subsample", subsample, "Write every n-th node to the CSV")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-steps", max_steps, "Step-attempt budget")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", out_dir, "Output directory");
    app.add_flag("--figures", figures, "Also emit SVG figures");

    CLI11_PARSE(app, argc, argv);

    rkq::HamiltonianProblem problem;
    if (problem_name == "pendulum") {
        problem = rkq::pendulum_problem();
    } else if (problem_name == "harmonic") {
        problem = rkq::harmonic_problem();
    } else {
        std::fprintf(stderr, "error: unknown problem '%s'\n", problem_name.c_str());
        return kExitConfig;
    }

    rkq::RunConfig config;
    config.t_end = t_end;
    config.tolerance.delta_abs = tol_abs;
    config.tolerance.delta_rel = tol_rel;
    config.tolerance.mode =
        tol_rel > 0.0 ? rkq::ToleranceMode::relative : rkq::ToleranceMode::absolute;
    config.h0 = h0;
    config.max_steps = max_steps;
    config.subsample = subsample;
    if (t_end < problem.ivp.t0) {
        std::fprintf(stderr, "error: --t-end precedes the initial time\n");
        return kExitConfig;
    }

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        std::fprintf(stderr, "error: cannot create output directory %s: %s\n",
                     out_dir.c_str(), ec.message().c_str());
        return kExitIo;
    }

    std::optional<ModeResult> rkq_run, unq_run;
    try {
        if (mode == "rkq" || mode == "both") rkq_run = run_mode(problem, config, true);
        if (mode == "unquenched" || mode == "both")
            unq_run = run_mode(problem, config, false);
    } catch (const rkq::SolverError& e) {
        std::fprintf(stderr, "error: integration aborted: %s\n", e.what());
        return kExitRun;
    }

    try {
        const fs::path out(out_dir);
        std::vector<rkq::NodeRecord> rkq_rows, unq_rows;
        if (rkq_run) {
            write_trajectory_csv(rkq_run->traj, out / "trajectory_rkq.csv", subsample);
            write_summary(rkq_run->traj.summary, rkq_run->wall_time_s,
                          out / "summary_rkq.txt");
            report("rkq", rkq_run->traj.summary);
            if (figures) rkq_rows = rkq::read_trajectory_csv(out / "trajectory_rkq.csv");
        }
        if (unq_run) {
            write_trajectory_csv(unq_run->traj, out / "trajectory_unquenched.csv",
                                 subsample);
            write_summary(unq_run->traj.summary, unq_run->wall_time_s,
                          out / "summary_unquenched.txt");
            report("unquenched", unq_run->traj.summary);
            if (figures)
                unq_rows = rkq::read_trajectory_csv(out / "trajectory_unquenched.csv");
        }
        if (figures) rkq::write_figures(out, rkq_rows, unq_rows, tol_abs);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    }
    return 0;
}
