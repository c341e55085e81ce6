#pragma once

#include "relqhe/constants.hpp"

namespace relqhe {

enum class SpectrumMode { Exact, Expanded };

const char* to_string(SpectrumMode m);

enum class Validity { Valid, NegativeVarianceRegime };

const char* to_string(Validity v);

struct LevelData {
    long n = 0;
    double p_n = 0;              // kg m/s
    double energy_exact = 0;     // J
    double energy_expanded = 0;  // J
    double excitation = 0;       // E - m c^2 for the requested mode, J
    double phi_plus = 1;
    double x_mean = 0;           // m
    double x2_mean = 0;          // m^2
    double p_mean = 0;
    double p2_mean = 0;          // (kg m/s)^2
    Validity validity = Validity::Valid;

    double variance_x() const { return x2_mean - x_mean * x_mean; }
    double variance_p() const { return p2_mean - p_mean * p_mean; }
};

double level_momentum(long n, const EngineConfig& cfg);

// Energies above the rest energy, evaluated without cancellation.
double excitation_exact(long n, const EngineConfig& cfg);
double excitation_expanded(long n, const EngineConfig& cfg);
double excitation(long n, const EngineConfig& cfg, SpectrumMode mode);

// E_expanded - E_exact >= 0
double expansion_remainder(long n, const EngineConfig& cfg);

double fv_plus(long n, const EngineConfig& cfg);
double fv_minus(long n, const EngineConfig& cfg);

LevelData level(long n, const EngineConfig& cfg, SpectrumMode mode = SpectrumMode::Expanded);

enum class RestMomentum { Excluded, Included };

// dx * dp of level n in units of hbar.
double state_uncertainty(long n, const EngineConfig& cfg, RestMomentum rest = RestMomentum::Excluded);

}  // namespace relqhe
