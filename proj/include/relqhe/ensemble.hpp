#pragma once

#include "relqhe/constants.hpp"
#include "relqhe/level_kernels.hpp"
#include "relqhe/spectrum.hpp"

namespace relqhe {

enum class Method { OracleSeries, PaperClosedForm, CorrectedIntegral };

const char* to_string(Method m);

enum class Kernel { Parallel, Serial };

struct EnsembleOptions {
    SpectrumMode mode = SpectrumMode::Expanded;
    double energy_shift = 0;  // uniform shift of every level on top of m c^2, J
    Kernel kernel = Kernel::Parallel;
};

// Canonical state of one well, with m c^2 and the ground level factored out:
//   ln Z = -beta (m c^2 + shift + ground) + log_gs,   U = m c^2 + shift + ground + excess.
struct ThermalState {
    ThermalPoint point{};
    Method method = Method::OracleSeries;
    double shift = 0;     // J
    double ground = 0;    // lowest level above m c^2, J (0 for the closed forms)
    double log_gs = 0;    // log of degeneracy-weighted ground-relative sum
    double excess = 0;    // mean energy above the ground level, J
    double n_mean = 0;
    double n2_mean = 0;
    LevelMoments moments{};  // oracle only

    // Everything below excludes m c^2.
    double log_z() const { return -point.beta * (shift + ground) + log_gs; }
    double thermal_energy() const { return shift + ground + excess; }
    double free_energy(double k_B) const { return shift + ground - k_B * point.temperature * log_gs; }
    double entropy(double k_B) const { return k_B * (log_gs + point.beta * excess); }
};

ThermalState thermal_state(const EngineConfig& cfg, double T, Well well, Method method = Method::OracleSeries,
                           const EnsembleOptions& opts = {});

struct PartitionResult {
    double log_z = 0;  // ln Z with exp(-beta m c^2) removed
    Method method = Method::OracleSeries;
    bool rest_energy_factored = true;
    ThermalPoint thermal_point{};
    double ground_excitation = 0;
    double log_ground_sum = 0;

    double z() const;                               // may underflow to 0 when beta E_1 > ~745
    double log_z_with_rest(double rest_energy) const;
};

PartitionResult partition(const EngineConfig& cfg, double T, Well well, Method method = Method::OracleSeries,
                          const EnsembleOptions& opts = {});

double mean_level(const EngineConfig& cfg, double T, Well well, Method method = Method::OracleSeries,
                  const EnsembleOptions& opts = {});

struct ThermalAverages {
    double n_mean = 0;
    double n2_mean = 0;
    double x_mean_T = 0;   // m
    double x2_mean_T = 0;  // m^2
    double p2_mean_T = 0;  // (kg m/s)^2, includes 2 m^2 c^2
    double U = 0;          // J, includes m c^2

    double variance_x() const { return x2_mean_T - x_mean_T * x_mean_T; }
};

ThermalAverages thermal_averages(const EngineConfig& cfg, double T, Well well = Well::Single,
                                 const EnsembleOptions& opts = {});

// U including m c^2, and U - m c^2.
double internal_energy(const EngineConfig& cfg, double T, Well well, Method method = Method::OracleSeries,
                       const EnsembleOptions& opts = {});
double thermal_energy(const EngineConfig& cfg, double T, Well well, Method method = Method::OracleSeries,
                      const EnsembleOptions& opts = {});

}  // namespace relqhe
