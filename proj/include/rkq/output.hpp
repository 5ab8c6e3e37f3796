#ifndef RKQ_OUTPUT_HPP
#define RKQ_OUTPUT_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rkq/engine.hpp"

namespace rkq {

/// Write the trajectory as CSV with columns
///   i,t,h,q34,p34,q8,p8,gerr_q,gerr_p,eps8_q,eps8_p,delta8_q,delta8_p,quenched,H34,H8
/// Floats are shortest round-trip decimals; quenched is 0/1. Every
/// subsample-th node is written and the final node is always included (once).
/// Returns the number of data rows written.
std::int64_t write_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path,
                                  std::int64_t subsample);

/// Parse a trajectory CSV written by write_trajectory_csv.
std::vector<NodeRecord> read_trajectory_csv(const std::filesystem::path& path);

/// Flat `key = value` run summary.
void write_summary(const RunSummary& summary, double wall_time_s,
                   const std::filesystem::path& path);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

/// The subsampled node indices the CSV writer emits.
std::vector<std::size_t> subsample_indices(std::size_t node_count, std::int64_t subsample);

}  // namespace rkq

#endif  // RKQ_OUTPUT_HPP
