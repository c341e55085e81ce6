#pragma once

#include <cstddef>
#include <optional>

namespace relqhe {

// CODATA 2018 exact / recommended values, SI.
struct PhysicalConstants {
    double hbar = 1.054571817e-34;
    double k_B = 1.380649e-23;
    double c = 299792458.0;
};

inline constexpr double electron_mass_kg = 9.1093837015e-31;
inline constexpr double angstrom = 1e-10;

struct Tolerances {
    double series_rel_tol = 1e-13;
    std::size_t series_max_terms = 20'000'000;
    double fd_step_scale = 1.0;
};

struct ToleranceOverrides {
    std::optional<double> series_rel_tol;
    std::optional<std::size_t> series_max_terms;
    std::optional<double> fd_step_scale;
};

enum class Well { Single, Partitioned };

const char* to_string(Well w);

class EngineConfig {
public:
    double mass() const { return mass_; }
    double half_width() const { return half_width_; }
    const PhysicalConstants& constants() const { return constants_; }
    const Tolerances& tolerances() const { return tol_; }

    // Level constant pi^2 hbar^2 / (2 m (2L)^2), J.
    double alpha() const;
    double rest_energy() const;       // m c^2
    double compton_length() const;    // hbar / (m c): unit of length in natural units
    double momentum_unit() const;     // m c
    double half_width_natural() const;  // L / (hbar / m c)
    double beta(double T) const;

    friend EngineConfig make_engine_config(double, double, const ToleranceOverrides&);

    EngineConfig with_half_width(double L) const;
    EngineConfig with_tolerances(const ToleranceOverrides& o) const;

private:
    EngineConfig() = default;
    double mass_ = 0;
    double half_width_ = 0;
    PhysicalConstants constants_{};
    Tolerances tol_{};
};

EngineConfig make_engine_config(double mass, double half_width_L,
                                const ToleranceOverrides& overrides = {});

// alpha / (k_B T)
double dimensionless_group(const EngineConfig& cfg, double T);

struct ThermalPoint {
    double temperature;
    double beta;
    double alpha_beta;
    Well well;
};

ThermalPoint make_thermal_point(const EngineConfig& cfg, double T, Well well = Well::Single);

}  // namespace relqhe
