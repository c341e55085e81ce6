#include "relqhe/cycle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "relqhe/bounds.hpp"
#include "relqhe/errors.hpp"
#include "relqhe/parallel.hpp"
#include "relqhe/thermo_map.hpp"

namespace relqhe {

namespace {

void check_order(double T1, double T2) {
    if (!(T2 > 0.0)) throw Error(ErrorKind::NonPositiveParameter, "temperatures must be > 0");
    if (T2 > T1) throw Error(ErrorKind::TemperatureOrder, "engine mode needs T1 >= T2");
}

// U_j - U_i without ever forming m c^2 + ...
double energy_change(const ThermalState& i, const ThermalState& j) {
    return (j.shift - i.shift) + (j.ground - i.ground) + (j.excess - i.excess);
}

// U_j - U_i + k T ln(Z_j / Z_i) at a common temperature; the level offsets cancel against ln Z.
double isothermal_heat(const ThermalState& i, const ThermalState& j, double kT) {
    return (j.excess - i.excess) + kT * (j.log_gs - i.log_gs);
}

double log_ratio(const ThermalState& num, const ThermalState& den) {
    return -num.point.beta * ((num.shift + num.ground) - (den.shift + den.ground)) + (num.log_gs - den.log_gs);
}

}  // namespace

CycleReport run_cycle(const EngineConfig& cfg, double T1, double T2, const CycleOptions& opts) {
    check_order(T1, T2);
    const double k_B = cfg.constants().k_B;
    CycleReport r;
    r.T1 = T1;
    r.T2 = T2;
    r.method = opts.method;
    r.A = thermal_state(cfg, T1, Well::Single, opts.method, opts.ensemble);
    r.B = thermal_state(cfg, T1, Well::Partitioned, opts.method, opts.ensemble);
    r.C = thermal_state(cfg, T2, Well::Partitioned, opts.method, opts.ensemble);
    r.D = thermal_state(cfg, T2, Well::Single, opts.method, opts.ensemble);
    r.log_Z_A = r.A.log_z();
    r.log_Z_B = r.B.log_z();
    r.log_Z_C = r.C.log_z();
    r.log_Z_D = r.D.log_z();
    r.Z_A = std::exp(r.log_Z_A);
    r.Z_B = std::exp(r.log_Z_B);
    r.Z_C = std::exp(r.log_Z_C);
    r.Z_D = std::exp(r.log_Z_D);
    const double mc2 = cfg.rest_energy();
    r.U_A = mc2 + r.A.thermal_energy();
    r.U_B = mc2 + r.B.thermal_energy();
    r.U_C = mc2 + r.C.thermal_energy();
    r.U_D = mc2 + r.D.thermal_energy();

    r.Q_AB = isothermal_heat(r.A, r.B, k_B * T1);
    r.Q_BC = energy_change(r.B, r.C);
    r.Q_CD = isothermal_heat(r.C, r.D, k_B * T2);
    r.Q_DA = energy_change(r.D, r.A);
    r.W = r.Q_AB + r.Q_BC + r.Q_CD + r.Q_DA;
    r.heat_in = r.Q_DA + r.Q_AB;
    r.carnot = 1.0 - T2 / T1;
    if (r.heat_in > 0.0) {
        r.efficiency_defined = true;
        r.efficiency = r.W / r.heat_in;
        r.efficiency_alt = 1.0 + (r.Q_BC + r.Q_CD) / r.heat_in;
    } else {
        r.efficiency = std::numeric_limits<double>::quiet_NaN();
        r.efficiency_alt = std::numeric_limits<double>::quiet_NaN();
    }
    return r;
}

double uncertainty_weight(const EngineConfig& cfg, double T, double u, const UncertaintyOptions& opts) {
    const CompensatorTerm ct = compensator(cfg, T, opts);
    return mapping_constant() * ((u - ct.u_ref) + ct.n2_over_k);
}

double work_prefactor(const EngineConfig& cfg) { return std::numbers::pi * cfg.alpha(); }

double work_prefactor_literal(const EngineConfig& cfg) {
    const double L = cfg.half_width();
    const double hb = cfg.constants().hbar;
    return 8.0 * L * L * cfg.alpha() / (hb * hb * std::numbers::pi * std::numbers::pi);
}

namespace {

struct LogRatios {
    double BA, DC;
};

LogRatios corner_log_ratios(const EngineConfig& cfg, double T1, double T2, Method m, const EnsembleOptions& e) {
    const ThermalState A = thermal_state(cfg, T1, Well::Single, m, e);
    const ThermalState B = thermal_state(cfg, T1, Well::Partitioned, m, e);
    const ThermalState C = thermal_state(cfg, T2, Well::Partitioned, m, e);
    const ThermalState D = thermal_state(cfg, T2, Well::Single, m, e);
    return {log_ratio(B, A), log_ratio(D, C)};
}

}  // namespace

double work_from_uncertainty(const EngineConfig& cfg, double T1, double T2, const UncertaintyCycleOptions& opts) {
    check_order(T1, T2);
    const double u1 = uncertainty_report(cfg, T1, Method::PaperClosedForm, opts.uncertainty).sum_normalized;
    const double u2 = uncertainty_report(cfg, T2, Method::PaperClosedForm, opts.uncertainty).sum_normalized;
    const double f = uncertainty_weight(cfg, T1, u1, opts.uncertainty);
    const double g = uncertainty_weight(cfg, T2, u2, opts.uncertainty);
    if (!(f > 0.0 && g > 0.0)) throw Error(ErrorKind::DomainError, "uncertainty radicand is not positive");
    const LogRatios lr = corner_log_ratios(cfg, T1, T2, opts.z_method, opts.uncertainty.ensemble);
    return work_prefactor(cfg) * (f * lr.BA + g * lr.DC);
}

double efficiency_formula(double f, double g, double log_BA, double log_DC) {
    const double num = g * log_DC + f * log_BA;
    const double den = -g / 2.0 + f * (log_BA + 0.5);
    const double scale = std::max({std::abs(g) / 2.0, std::abs(f * log_BA), std::abs(f) / 2.0});
    if (!(std::abs(den) > 1e-14 * scale))
        throw Error(ErrorKind::DegenerateDenominator, "efficiency denominator vanishes");
    return num / den;
}

UncertaintyEfficiency efficiency_from_uncertainty_detail(const EngineConfig& cfg, double T1, double T2,
                                                         const UncertaintyCycleOptions& opts) {
    check_order(T1, T2);
    const double u1 = uncertainty_report(cfg, T1, Method::PaperClosedForm, opts.uncertainty).sum_normalized;
    const double u2 = uncertainty_report(cfg, T2, Method::PaperClosedForm, opts.uncertainty).sum_normalized;
    UncertaintyEfficiency e;
    e.f = uncertainty_weight(cfg, T1, u1, opts.uncertainty);
    e.g = uncertainty_weight(cfg, T2, u2, opts.uncertainty);
    if (!(e.f > 0.0 && e.g > 0.0)) throw Error(ErrorKind::DomainError, "uncertainty radicand is not positive");
    const LogRatios lr = corner_log_ratios(cfg, T1, T2, opts.z_method, opts.uncertainty.ensemble);
    e.log_BA = lr.BA;
    e.log_DC = lr.DC;
    e.eta = efficiency_formula(e.f, e.g, lr.BA, lr.DC);
    const double n1 = closed_form_n_bar(cfg, T1);
    const double n2 = closed_form_n_bar(cfg, T2);
    e.eta_n_bar = efficiency_formula(n1 * n1, n2 * n2, lr.BA, lr.DC);
    return e;
}

double efficiency_from_uncertainty(const EngineConfig& cfg, double T1, double T2, const UncertaintyCycleOptions& opts) {
    return efficiency_from_uncertainty_detail(cfg, T1, T2, opts).eta;
}

EfficiencyBounds efficiency_bounds(const EngineConfig& base, double T1, double T2, const std::vector<double>& L_values,
                                   const UncertaintyCycleOptions& opts) {
    check_order(T1, T2);
    EfficiencyBounds out;
    out.points = parallel_map<EfficiencyBoundPoint>(L_values.size(), [&](std::size_t idx) {
        const EngineConfig cfg = base.with_half_width(L_values[idx]);
        EfficiencyBoundPoint p;
        p.L = L_values[idx];
        p.T1 = T1;
        p.T2 = T2;
        const UncertaintyReport r1 = uncertainty_report(cfg, T1, Method::PaperClosedForm, opts.uncertainty);
        const UncertaintyReport r2 = uncertainty_report(cfg, T2, Method::PaperClosedForm, opts.uncertainty);
        p.u1 = r1.sum_normalized;
        p.u2 = r2.sum_normalized;
        if (r1.validity_flag != Validity::Valid || r2.validity_flag != Validity::Valid)
            p.validity = Validity::NegativeVarianceRegime;
        p.u1_lower = std::sqrt(thermal_lower_bound(cfg, T1));
        p.u2_lower = std::sqrt(thermal_lower_bound(cfg, T2));
        p.u1_upper = std::sqrt(2.0 * reverse_bound_thermal(cfg, T1));
        p.u2_upper = std::sqrt(2.0 * reverse_bound_thermal(cfg, T2));
        p.f_lower = uncertainty_weight(cfg, T1, p.u1_lower, opts.uncertainty);
        p.f_upper = uncertainty_weight(cfg, T1, p.u1_upper, opts.uncertainty);
        p.g_lower = uncertainty_weight(cfg, T2, p.u2_lower, opts.uncertainty);
        p.g_upper = uncertainty_weight(cfg, T2, p.u2_upper, opts.uncertainty);
        p.weights_positive = p.f_lower > 0.0 && p.f_upper > 0.0 && p.g_lower > 0.0 && p.g_upper > 0.0;
        const LogRatios lr = corner_log_ratios(cfg, T1, T2, opts.z_method, opts.uncertainty.ensemble);
        const double eta_l = efficiency_formula(p.f_lower, p.g_lower, lr.BA, lr.DC);
        const double eta_u = efficiency_formula(p.f_upper, p.g_upper, lr.BA, lr.DC);
        p.eta_lower = std::min(eta_l, eta_u);
        p.eta_upper = std::max(eta_l, eta_u);
        const double n1 = closed_form_n_bar(cfg, T1);
        const double n2 = closed_form_n_bar(cfg, T2);
        p.eta_reference = efficiency_formula(n1 * n1, n2 * n2, lr.BA, lr.DC);
        p.eta_cycle = run_cycle(cfg, T1, T2, CycleOptions{Method::OracleSeries, opts.uncertainty.ensemble}).efficiency;
        return p;
    });
    return out;
}

}  // namespace relqhe
