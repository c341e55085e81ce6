#pragma once

#include "relqhe/constants.hpp"
#include "relqhe/ensemble.hpp"
#include "relqhe/spectrum.hpp"

namespace relqhe {

struct UncertaintyOptions {
    bool paper_literal = false;  // literal SI momentum bracket (8 m c^2 / hbar^2 + ...)^(1/2)
    EnsembleOptions ensemble{};
};

struct UncertaintyReport {
    double dx = 0;              // m
    double dp = 0;              // kg m/s
    double product = 0;         // J s
    double sum_normalized = 0;  // dx / (hbar/mc) + dp / (mc); raw SI sum when paper_literal
    double var_x = 0;           // m^2
    double var_p = 0;           // (kg m/s)^2
    double n_bar = 0;
    double phi = 1;             // phi+ entering the closed form (oracle: 1, n-dependence kept in the sums)
    Method method = Method::OracleSeries;
    Validity validity_flag = Validity::Valid;
    bool paper_literal = false;
};

// phi+ at n = max(1, round(n_bar))
double closed_form_phi(const EngineConfig& cfg, double n_bar);

double closed_form_n_bar(const EngineConfig& cfg, double T);

// Closed-form position variance for given alpha*beta and phi, m^2 (may be negative).
double closed_variance_x(const EngineConfig& cfg, double alpha_beta, double phi);
// Same, with the erfc-bearing intermediate kept.
double closed_variance_x_erfc_form(const EngineConfig& cfg, double alpha_beta, double phi);
// Kinetic closed form pi^3 hbar^2 n^2 / (8 L^2) + 2 m^2 c^2
double closed_variance_p(const EngineConfig& cfg, double n_bar);
// Literal SI bracket (hbar/2)^2 (8 m c^2/hbar^2 + pi^3 n^2/(2 L^2)); not dimensionally a (kg m/s)^2.
double literal_variance_p(const EngineConfig& cfg, double n_bar);

double thermal_variance_x(const EngineConfig& cfg, double T, Method method = Method::PaperClosedForm,
                          const UncertaintyOptions& opts = {});
double thermal_variance_p(const EngineConfig& cfg, double T, Method method = Method::PaperClosedForm,
                          const UncertaintyOptions& opts = {});

UncertaintyReport uncertainty_report(const EngineConfig& cfg, double T, Method method = Method::PaperClosedForm,
                                     const UncertaintyOptions& opts = {});

// Closed-form uncertainty sum with n_bar held fixed, natural units.
double sum_uncertainty_fixed_n(const EngineConfig& cfg, double n_bar, double T,
                               const UncertaintyOptions& opts = {});

// natural-unit helpers
double natural_length(const EngineConfig& cfg, double x);
double natural_momentum(const EngineConfig& cfg, double p);

}  // namespace relqhe
