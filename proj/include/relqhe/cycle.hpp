#pragma once

#include <string>
#include <vector>

#include "relqhe/constants.hpp"
#include "relqhe/ensemble.hpp"
#include "relqhe/uncertainty.hpp"

namespace relqhe {

struct CycleOptions {
    Method method = Method::OracleSeries;
    EnsembleOptions ensemble{};
};

// Absorbed heat is positive. Corners: A single@T1, B partitioned@T1, C partitioned@T2, D single@T2.
struct CycleReport {
    double T1 = 0, T2 = 0;
    ThermalState A, B, C, D;
    double log_Z_A = 0, log_Z_B = 0, log_Z_C = 0, log_Z_D = 0;  // m c^2 factored out
    double Z_A = 0, Z_B = 0, Z_C = 0, Z_D = 0;                  // exp of the above, may underflow
    double U_A = 0, U_B = 0, U_C = 0, U_D = 0;                  // J, including m c^2
    double Q_AB = 0, Q_BC = 0, Q_CD = 0, Q_DA = 0;
    double W = 0;
    double heat_in = 0;           // Q_DA + Q_AB
    double efficiency = 0;        // W / heat_in
    double efficiency_alt = 0;    // 1 + (Q_BC + Q_CD) / heat_in
    bool efficiency_defined = false;
    double carnot = 0;
    Method method = Method::OracleSeries;
};

CycleReport run_cycle(const EngineConfig& cfg, double T1, double T2, const CycleOptions& opts = {});

struct UncertaintyCycleOptions {
    Method z_method = Method::OracleSeries;  // used for ln(Z_B/Z_A) and ln(Z_D/Z_C)
    UncertaintyOptions uncertainty{};
};

// f or g: mapping constant times (u + C_T), formed with the compensated difference
double uncertainty_weight(const EngineConfig& cfg, double T, double u, const UncertaintyOptions& opts = {});

double work_prefactor(const EngineConfig& cfg);          // pi alpha
double work_prefactor_literal(const EngineConfig& cfg);  // 8 L^2 alpha / (hbar^2 pi^2)

double work_from_uncertainty(const EngineConfig& cfg, double T1, double T2, const UncertaintyCycleOptions& opts = {});

struct UncertaintyEfficiency {
    double eta = 0;         // f, g form
    double eta_n_bar = 0;   // n_bar^2 form
    double f = 0, g = 0;
    double log_BA = 0, log_DC = 0;
};

double efficiency_formula(double f, double g, double log_BA, double log_DC);

UncertaintyEfficiency efficiency_from_uncertainty_detail(const EngineConfig& cfg, double T1, double T2,
                                                         const UncertaintyCycleOptions& opts = {});
double efficiency_from_uncertainty(const EngineConfig& cfg, double T1, double T2,
                                   const UncertaintyCycleOptions& opts = {});

struct EfficiencyBoundPoint {
    double L = 0;
    double T1 = 0, T2 = 0;
    double u1 = 0, u2 = 0;
    double u1_lower = 0, u1_upper = 0, u2_lower = 0, u2_upper = 0;
    double f_lower = 0, f_upper = 0, g_lower = 0, g_upper = 0;
    double eta_lower = 0, eta_upper = 0;
    double eta_reference = 0;  // f = n1^2, g = n2^2
    double eta_cycle = 0;      // oracle cycle
    Validity validity = Validity::Valid;
    bool weights_positive = true;  // all four f, g bound weights > 0, so the mapped partition function exists
};

struct EfficiencyBounds {
    std::string sweep_variable = "u_T1";
    std::vector<EfficiencyBoundPoint> points;
};

EfficiencyBounds efficiency_bounds(const EngineConfig& cfg, double T1, double T2, const std::vector<double>& L_values,
                                   const UncertaintyCycleOptions& opts = {});

}  // namespace relqhe
