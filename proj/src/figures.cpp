#include "rkq/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

namespace rkq {

namespace {

struct Series {
    std::vector<double> x, y;
    std::string color;
    std::string label;
};

struct RefLine {
    double y;
    std::string label;
};

struct Panel {
    std::string title, xlabel, ylabel;
    bool log_y = false;
    std::vector<Series> series;
    std::vector<RefLine> ref_lines;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::vector<double> linear_ticks(double lo, double hi, int target = 5) {
    if (!(hi > lo)) return {lo};
    const double raw = (hi - lo) / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * m >= raw) {
            step = mag * m;
            break;
        }
    }
    std::vector<double> ticks;
    for (double v = std::ceil(lo / step) * step; v <= hi + 0.5 * step; v += step)
        ticks.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
    return ticks;
}

// One panel drawn into the rectangle [x0, x0+w] x [y0, y0+h] (SVG coords).
void render_panel(std::string& svg, const Panel& panel, double x0, double y0,
                  double w, double h) {
    const double ml = 62, mr = 12, mt = 24, mb = 36;
    const double px = x0 + ml, py = y0 + mt;
    const double pw = w - ml - mr, ph = h - mt - mb;

    // exact zeros (quenched nodes, empty estimates) have no place on a log
    // axis; they are dropped and the polyline splits around them
    auto plottable = [&](double v) { return !panel.log_y || v > 0.0; };

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const Series& s : panel.series) {
        for (double v : s.x) {
            xmin = std::min(xmin, v);
            xmax = std::max(xmax, v);
        }
        for (double v : s.y) {
            if (!plottable(v)) continue;
            const double t = panel.log_y ? std::log10(v) : v;
            ymin = std::min(ymin, t);
            ymax = std::max(ymax, t);
        }
    }
    for (const RefLine& r : panel.ref_lines) {
        if (!plottable(r.y)) continue;
        const double t = panel.log_y ? std::log10(r.y) : r.y;
        ymin = std::min(ymin, t);
        ymax = std::max(ymax, t);
    }
    if (!(xmax > xmin)) xmax = xmin + 1.0;
    if (!(ymax > ymin)) ymax = ymin + 1.0;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto sx = [&](double v) { return px + (v - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double v) {
        const double t = panel.log_y ? std::log10(v) : v;
        return py + ph - (t - ymin) / (ymax - ymin) * ph;
    };

    svg += "<rect x='" + num(px) + "' y='" + num(py) + "' width='" + num(pw) +
           "' height='" + num(ph) + "' fill='white' stroke='#333'/>\n";
    svg += "<text x='" + num(px + pw / 2) + "' y='" + num(y0 + 15) +
           "' text-anchor='middle' font-size='13'>" + panel.title + "</text>\n";

    for (double tick : linear_ticks(xmin, xmax)) {
        const double X = sx(tick);
        svg += "<line x1='" + num(X) + "' y1='" + num(py + ph) + "' x2='" + num(X) +
               "' y2='" + num(py + ph + 4) + "' stroke='#333'/>\n";
        svg += "<text x='" + num(X) + "' y='" + num(py + ph + 16) +
               "' text-anchor='middle' font-size='10'>" + num(tick) + "</text>\n";
    }
    if (panel.log_y) {
        const int dlo = static_cast<int>(std::ceil(ymin));
        const int dhi = static_cast<int>(std::floor(ymax));
        const int step = std::max(1, (dhi - dlo) / 5);
        for (int d = dlo; d <= dhi; d += step) {
            const double Y = py + ph - (d - ymin) / (ymax - ymin) * ph;
            svg += "<line x1='" + num(px - 4) + "' y1='" + num(Y) + "' x2='" + num(px) +
                   "' y2='" + num(Y) + "' stroke='#333'/>\n";
            svg += "<text x='" + num(px - 6) + "' y='" + num(Y + 3) +
                   "' text-anchor='end' font-size='10'>1e" + std::to_string(d) +
                   "</text>\n";
        }
    } else {
        for (double tick : linear_ticks(ymin, ymax)) {
            const double Y = sy(tick);
            svg += "<line x1='" + num(px - 4) + "' y1='" + num(Y) + "' x2='" + num(px) +
                   "' y2='" + num(Y) + "' stroke='#333'/>\n";
            svg += "<text x='" + num(px - 6) + "' y='" + num(Y + 3) +
                   "' text-anchor='end' font-size='10'>" + num(tick) + "</text>\n";
        }
    }
    svg += "<text x='" + num(px + pw / 2) + "' y='" + num(py + ph + 30) +
           "' text-anchor='middle' font-size='11'>" + panel.xlabel + "</text>\n";
    svg += "<text x='" + num(x0 + 14) + "' y='" + num(py + ph / 2) +
           "' text-anchor='middle' font-size='11' transform='rotate(-90 " +
           num(x0 + 14) + " " + num(py + ph / 2) + ")'>" + panel.ylabel + "</text>\n";

    for (const RefLine& r : panel.ref_lines) {
        const double Y = sy(r.y);
        svg += "<line x1='" + num(px) + "' y1='" + num(Y) + "' x2='" + num(px + pw) +
               "' y2='" + num(Y) + "' stroke='#888' stroke-dasharray='6 3'/>\n";
        svg += "<text x='" + num(px + pw - 4) + "' y='" + num(Y - 4) +
               "' text-anchor='end' font-size='10' fill='#555'>" + r.label + "</text>\n";
    }

    double legend_y = py + 14;
    for (const Series& s : panel.series) {
        std::string points;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            points += num(sx(s.x[i]));
            points += ',';
            points += num(sy(s.y[i]));
            points += ' ';
        }
        svg += "<polyline points='" + points + "' fill='none' stroke='" + s.color +
               "' stroke-width='1'/>\n";
        if (!s.label.empty()) {
            svg += "<line x1='" + num(px + 8) + "' y1='" + num(legend_y) + "' x2='" +
                   num(px + 28) + "' y2='" + num(legend_y) + "' stroke='" + s.color +
                   "' stroke-width='2'/>\n";
            svg += "<text x='" + num(px + 32) + "' y='" + num(legend_y + 3) +
                   "' font-size='10'>" + s.label + "</text>\n";
            legend_y += 13;
        }
    }
}

void write_svg(const std::filesystem::path& path, const std::vector<Panel>& panels) {
    std::string svg =
        "<svg xmlns='http://www.w3.org/2000/svg' viewBox='0 0 800 600' "
        "width='800' height='600'>\n<rect width='800' height='600' fill='white'/>\n";
    if (panels.size() == 1) {
        render_panel(svg, panels[0], 0, 0, 800, 600);
    } else {
        for (std::size_t i = 0; i < panels.size() && i < 4; ++i)
            render_panel(svg, panels[i], 400.0 * (i % 2), 300.0 * (i / 2), 400, 300);
    }
    svg += "</svg>\n";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << svg;
}

Series make_series(const std::vector<NodeRecord>& rows, double (*fy)(const NodeRecord&),
                   std::string color, std::string label, double t_max = -1.0) {
    Series s;
    s.color = std::move(color);
    s.label = std::move(label);
    for (const NodeRecord& n : rows) {
        if (t_max >= 0.0 && n.t > t_max) break;
        s.x.push_back(n.t);
        s.y.push_back(fy(n));
    }
    return s;
}

}  // namespace

void write_figures(const std::filesystem::path& out_dir,
                   const std::vector<NodeRecord>& rkq_rows,
                   const std::vector<NodeRecord>& unquenched_rows,
                   double tol_abs) {
    const std::vector<NodeRecord>& primary = rkq_rows.empty() ? unquenched_rows : rkq_rows;
    if (primary.empty()) return;

    // Figure 1: early-time solution, phase portrait, numerical Hamiltonian.
    const double t_early = std::min(primary.back().t, 25.0);
    Panel pq{"position vs t (early)", "t", "q", false, {}, {}};
    pq.series.push_back(make_series(
        primary, [](const NodeRecord& n) { return n.y34[0]; }, "#1f77b4", "", t_early));
    Panel pp{"momentum vs t (early)", "t", "p", false, {}, {}};
    pp.series.push_back(make_series(
        primary, [](const NodeRecord& n) { return n.y34[1]; }, "#1f77b4", "", t_early));

    Panel phase{"phase portrait", "q", "p", false, {}, {}};
    {
        Series s;
        s.color = "#1f77b4";
        for (const NodeRecord& n : primary) {
            s.x.push_back(n.y34[0]);
            s.y.push_back(n.y34[1]);
        }
        phase.series.push_back(std::move(s));
    }

    Panel ham{"numerical Hamiltonian", "t", "H", false, {}, {}};
    if (!rkq_rows.empty())
        ham.series.push_back(make_series(
            rkq_rows, [](const NodeRecord& n) { return n.H34; }, "#1f77b4", "quenched"));
    if (!unquenched_rows.empty())
        ham.series.push_back(make_series(
            unquenched_rows, [](const NodeRecord& n) { return n.H34; }, "#d62728",
            "unquenched"));
    write_svg(out_dir / "fig1_solution.svg", {pq, pp, phase, ham});

    // Figure 2: componentwise global-error estimates with the tolerance line.
    Panel gerr{"global error vs t", "t", "|y34 - y8|", true, {}, {{tol_abs, "tolerance"}}};
    if (!rkq_rows.empty()) {
        gerr.series.push_back(make_series(
            rkq_rows, [](const NodeRecord& n) { return std::abs(n.gerr[0]); }, "#1f77b4",
            "|q err| quenched"));
        gerr.series.push_back(make_series(
            rkq_rows, [](const NodeRecord& n) { return std::abs(n.gerr[1]); }, "#17becf",
            "|p err| quenched"));
    }
    if (!unquenched_rows.empty()) {
        gerr.series.push_back(make_series(
            unquenched_rows, [](const NodeRecord& n) { return std::abs(n.gerr[0]); },
            "#d62728", "|q err| unquenched"));
        gerr.series.push_back(make_series(
            unquenched_rows, [](const NodeRecord& n) { return std::abs(n.gerr[1]); },
            "#ff7f0e", "|p err| unquenched"));
    }
    write_svg(out_dir / "fig2_global_error.svg", {gerr});

    // Figure 3: Euclidean trajectory error with the sqrt(2)*tolerance bound.
    Panel terr{"trajectory error vs t", "t", "||y34 - y8||",
               true, {}, {{std::sqrt(2.0) * tol_abs, "upper bound"}}};
    auto traj_err = [](const NodeRecord& n) { return std::hypot(n.gerr[0], n.gerr[1]); };
    if (!rkq_rows.empty())
        terr.series.push_back(make_series(rkq_rows, traj_err, "#1f77b4", "quenched"));
    if (!unquenched_rows.empty())
        terr.series.push_back(
            make_series(unquenched_rows, traj_err, "#d62728", "unquenched"));
    write_svg(out_dir / "fig3_trajectory_error.svg", {terr});

    // Figure 4: accumulated reference global-error estimate.
    Panel d8{"reference global-error estimate", "t", "|delta8|", true, {}, {}};
    d8.series.push_back(make_series(
        primary, [](const NodeRecord& n) { return std::abs(n.delta8[0]); }, "#1f77b4",
        "|delta8 q|"));
    d8.series.push_back(make_series(
        primary, [](const NodeRecord& n) { return std::abs(n.delta8[1]); }, "#17becf",
        "|delta8 p|"));
    write_svg(out_dir / "fig4_reference_error.svg", {d8});
}

}  // namespace rkq
