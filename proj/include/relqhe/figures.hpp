#pragma once

#include <string>
#include <vector>

#include "relqhe/cycle.hpp"
#include "relqhe/output.hpp"
#include "relqhe/run_config.hpp"

namespace relqhe {

Table fig_table(int id, const RunConfig& run);
PlotSpec fig_plot(int id);

Table sweep_table(const RunConfig& run);
Table cycle_table(const CycleReport& r, const UncertaintyEfficiency* mapped, double mapped_work);

// Writes <out_dir>/<stem>.csv (and .svg when requested); returns written paths.
std::vector<std::string> write_table(const RunConfig& run, const std::string& stem, const Table& t,
                                     const PlotSpec* plot);

}  // namespace relqhe
