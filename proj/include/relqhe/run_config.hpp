#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relqhe/constants.hpp"
#include "relqhe/ensemble.hpp"

namespace relqhe {

enum class Command { Fig, Cycle, Sweep, Verify };
enum class GridScale { Linear, Log };

struct GridSpec {
    double from = 0.05;
    double to = 1.0;
    int steps = 40;
    GridScale scale = GridScale::Linear;

    std::vector<double> values() const;
    bool operator==(const GridSpec&) const = default;
};

struct RunConfig {
    Command command = Command::Verify;
    int fig_id = 0;
    double mass_kg = electron_mass_kg;
    double L_angstrom = 0.5;
    double T1_K = 300.0;
    double T2_K = 100.0;
    GridSpec grid{};
    std::string sweep_var = "L";
    Method method = Method::OracleSeries;
    bool paper_literal = false;
    std::string out_dir = ".";
    bool emit_svg = false;
    ToleranceOverrides tolerances{};

    EngineConfig engine() const;
    bool operator==(const RunConfig& o) const;
};

// Every file key, as an optional, so file values and command-line flags merge the same way.
struct RunConfigOverrides {
    std::optional<double> mass_kg;
    std::optional<double> L_angstrom;
    std::optional<double> T1_K;
    std::optional<double> T2_K;
    std::optional<double> grid_from;
    std::optional<double> grid_to;
    std::optional<int> grid_steps;
    std::optional<GridScale> grid_scale;
    std::optional<Method> method;
    std::optional<bool> paper_literal;
    std::optional<std::string> out_dir;
    std::optional<double> series_rel_tol;
    std::optional<std::size_t> series_max_terms;
    std::optional<double> fd_step_scale;
};

RunConfigOverrides parse_config_overrides(const std::string& text);
void apply_overrides(RunConfig& run, const RunConfigOverrides& o);
void validate(const RunConfig& run);

// File text on top of the defaults; validated.
RunConfig parse_config(const std::string& text);

std::string read_text_file(const std::string& path);

// defaults, then file text, then flags; validated.
RunConfig merge_config(const std::string& file_text, const RunConfigOverrides& flags);

// Creates the directory if needed and probes it with a temporary file.
void check_output_dir(const std::string& dir);

Method parse_method(const std::string& s);
GridScale parse_grid_scale(const std::string& s);

}  // namespace relqhe
