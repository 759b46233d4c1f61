#pragma once

#include "infoflow/graph.hpp"
#include "infoflow/panel.hpp"
#include "infoflow/simgen.hpp"

#include <filesystem>
#include <iosfwd>
#include <vector>

namespace infoflow {

// Panel CSV: comma separated, one header row, first column a time index that
// is ignored. Remaining header cells become the variable labels.

/// Throws ParseError (with 1-based row/column) on ragged rows, empty or
/// non-numeric cells and non-finite values.
TimeSeriesPanel read_panel_csv(std::istream& in, double dt = 1.0);
TimeSeriesPanel read_panel_csv(const std::filesystem::path& path, double dt = 1.0);

/// Writes `index,<labels...>` followed by one row per time step. Values use
/// 17 significant digits so re-reading reproduces them exactly.
void write_panel_csv(std::ostream& out, const TimeSeriesPanel& panel);

/// Flow matrix as CSV: row = source, column = target, diagonal left empty.
void write_flow_matrix_csv(std::ostream& out, const CausalGraph& graph);

/// Sweep table: epsilon, six |T| columns, six 0/1 significance flags, and
/// the y1/z1 correlation.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace infoflow
