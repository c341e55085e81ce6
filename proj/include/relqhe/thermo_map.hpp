#pragma once

#include "relqhe/constants.hpp"
#include "relqhe/uncertainty.hpp"

namespace relqhe {

// 16 c sqrt(2 m c) / (pi^3 hbar^2) in natural units
double mapping_constant();

// C_T split so that (u - u_ref) + n2_over_k can be formed without cancellation.
struct CompensatorTerm {
    double n2_over_k = 0;
    double u_ref = 0;
    double value() const { return n2_over_k - u_ref; }
};

CompensatorTerm compensator(const EngineConfig& cfg, double T, const UncertaintyOptions& opts = {});
double c_t(const EngineConfig& cfg, double T, const UncertaintyOptions& opts = {});

// (u + C_T) scaled by the mapping constant; u = dx/(hbar/mc) + dp/(mc).
double mapped_radicand(const EngineConfig& cfg, double T, double dx, double dp, const UncertaintyOptions& opts = {});
// exp(-beta m c^2) factored out
double partition_from_uncertainty(const EngineConfig& cfg, double T, double dx, double dp,
                                  const UncertaintyOptions& opts = {});

struct UncertaintyMappedState {
    double temperature = 0;
    double u_sum = 0;
    double c_t = 0;
    double radicand = 0;
    double z_mapped = 0;        // factored
    double log_z_mapped = 0;    // factored
    double zeta = 0;
    double eta_corr = 0;
    double tau = 0;
    double chi = 0;
    double thermal_energy = 0;  // U - m c^2, J
    double free_energy = 0;     // F - m c^2, J
    double s_mapped = 0;        // J/K
    double u_mapped = 0;        // J, includes m c^2
    double f_mapped = 0;        // J, includes m c^2
    double prefactor_log_residual = 0;  // ln of the free-energy root over ln Z; 0 when the prefactors agree
};

UncertaintyMappedState mapped_state(const EngineConfig& cfg, double T, const UncertaintyOptions& opts = {});

double internal_energy_from_uncertainty(const EngineConfig& cfg, double T, const UncertaintyOptions& opts = {});
double helmholtz_from_uncertainty(const EngineConfig& cfg, double T, const UncertaintyOptions& opts = {});
double entropy_from_uncertainty(const EngineConfig& cfg, double T, const UncertaintyOptions& opts = {});

// d u / d beta of the closed-form uncertainty sum (beta in 1/J)
double uncertainty_sum_beta_derivative(const EngineConfig& cfg, double T, const UncertaintyOptions& opts = {});

// The printed auxiliary expressions, natural units (k_B = 1 for tau and chi).
struct LiteralAuxiliaries {
    double c_t = 0;
    double zeta = 0;
    double eta_corr = 0;
    double tau = 0;
    double chi = 0;
    double radicand = 0;      // K (u + C_T)
    bool defined = false;     // radicand > 0
    double energy_residual = 0;   // |U_lit - (-d ln Z_lit / d beta)| / |(-d ln Z_lit / d beta)|
};

double c_t_literal(const EngineConfig& cfg, double T);
LiteralAuxiliaries literal_auxiliaries(const EngineConfig& cfg, double T);

}  // namespace relqhe
