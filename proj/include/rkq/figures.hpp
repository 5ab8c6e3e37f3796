#ifndef RKQ_FIGURES_HPP
#define RKQ_FIGURES_HPP

#include <filesystem>
#include <vector>

#include "rkq/engine.hpp"

namespace rkq {

/// Emit the four run figures as self-contained 800x600 SVG files under
/// out_dir: solution overview, global error, trajectory error and reference
/// error. Figures are drawn from the (subsampled) rows the CSV writer emits,
/// so they never feed back into numerical outputs. Either row set may be
/// empty; plots cover whatever is present.
void write_figures(const std::filesystem::path& out_dir,
                   const std::vector<NodeRecord>& rkq_rows,
                   const std::vector<NodeRecord>& unquenched_rows,
                   double tol_abs);

}  // namespace rkq

#endif  // RKQ_FIGURES_HPP
