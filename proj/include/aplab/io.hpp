#pragma once

#include <string>

#include "aplab/grid_function.hpp"

namespace aplab {

// CSV format: optional leading comment `# half_width=<float> n_cells=<int>`,
// header `cell_index,value`, then exactly n_cells rows in ascending index
// order.  The writer emits the comment line and a JSON sidecar
// `<path>.json` with {"half_width": ..., "n_cells": ...}; the reader takes
// grid metadata from the comment line if present, else from the sidecar.
// Values are printed with 17 significant digits so round-trips are bit-exact.
GridFunction read_grid_function(const std::string& path);
void write_grid_function(const GridFunction& f, const std::string& path);

// %.17g rendering shared by every CSV writer and the CLI.
std::string format_double(double x);

}  // namespace aplab
