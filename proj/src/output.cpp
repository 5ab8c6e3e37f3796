#include "rkq/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace rkq {

std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

std::vector<std::size_t> subsample_indices(std::size_t node_count, std::int64_t subsample) {
    if (subsample < 1)
        throw std::invalid_argument("subsample must be >= 1");
    std::vector<std::size_t> indices;
    const std::size_t last = node_count - 1;
    for (std::size_t i = 0; i < node_count; i += static_cast<std::size_t>(subsample))
        indices.push_back(i);
    if (node_count > 0 && indices.back() != last) indices.push_back(last);
    return indices;
}

static const char* kCsvHeader =
    "i,t,h,q34,p34,q8,p8,gerr_q,gerr_p,eps8_q,eps8_p,delta8_q,delta8_p,quenched,H34,H8";

std::int64_t write_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path,
                                  std::int64_t subsample) {
    std::ofstream out(path, std::ios::binary);  // binary: byte-stable newlines
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");

    out << kCsvHeader << '\n';
    std::int64_t rows = 0;
    for (std::size_t i : subsample_indices(traj.nodes.size(), subsample)) {
        const NodeRecord& n = traj.nodes[i];
        out << n.index << ',' << format_double(n.t) << ',' << format_double(n.h) << ','
            << format_double(n.y34[0]) << ',' << format_double(n.y34[1]) << ','
            << format_double(n.y8[0]) << ',' << format_double(n.y8[1]) << ','
            << format_double(n.gerr[0]) << ',' << format_double(n.gerr[1]) << ','
            << format_double(n.eps8[0]) << ',' << format_double(n.eps8[1]) << ','
            << format_double(n.delta8[0]) << ',' << format_double(n.delta8[1]) << ','
            << (n.quenched ? 1 : 0) << ',' << format_double(n.H34) << ','
            << format_double(n.H8) << '\n';
        ++rows;
    }
    if (!out) throw std::runtime_error("write failure on " + path.string());
    return rows;
}

std::vector<NodeRecord> read_trajectory_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw std::runtime_error(path.string() + ": unexpected CSV header");

    std::vector<NodeRecord> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string field;
        std::vector<double> v;
        while (std::getline(ss, field, ',')) v.push_back(std::stod(field));
        if (v.size() != 16)
            throw std::runtime_error(path.string() + ": malformed CSV row");
        NodeRecord n;
        n.index = static_cast<std::int64_t>(v[0]);
        n.t = v[1];
        n.h = v[2];
        n.y34 = {v[3], v[4]};
        n.y8 = {v[5], v[6]};
        n.gerr = {v[7], v[8]};
        n.eps8 = {v[9], v[10]};
        n.delta8 = {v[11], v[12]};
        n.quenched = v[13] != 0.0;
        n.H34 = v[14];
        n.H8 = v[15];
        rows.push_back(n);
    }
    return rows;
}

void write_summary(const RunSummary& summary, double wall_time_s,
                   const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "nodes = " << summary.node_count << '\n'
        << "quenches = " << summary.quench_count << '\n'
        << "max_gerr_q = " << format_double(summary.max_gerr_q) << '\n'
        << "max_gerr_p = " << format_double(summary.max_gerr_p) << '\n'
        << "max_traj_err = " << format_double(summary.max_traj_err) << '\n'
        << "max_H_err = " << format_double(summary.max_h_err) << '\n'
        << "max_delta8 = " << format_double(summary.max_delta8) << '\n'
        << "reference_guard_ok = " << (summary.reference_guard_ok ? "true" : "false") << '\n'
        << "wall_time_s = " << format_double(wall_time_s) << '\n';
    if (!out) throw std::runtime_error("write failure on " + path.string());
}

}  // namespace rkq
