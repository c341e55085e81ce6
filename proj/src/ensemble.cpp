#include "relqhe/ensemble.hpp"

#include <cmath>
#include <numbers>

#include "relqhe/errors.hpp"
#include "relqhe/numerics.hpp"

namespace relqhe {

const char* to_string(Method m) {
    switch (m) {
        case Method::OracleSeries: return "oracle";
        case Method::PaperClosedForm: return "paper";
        case Method::CorrectedIntegral: return "corrected";
    }
    return "unknown";
}

namespace {

ThermalState oracle_state(const EngineConfig& cfg, const ThermalPoint& tp, const EnsembleOptions& opts) {
    LevelSeries s{&cfg, tp.well, opts.mode, tp.beta};
    const LevelMoments m = opts.kernel == Kernel::Parallel ? level_moments_parallel(s, cfg.tolerances())
                                                           : level_moments_serial(s, cfg.tolerances());
    const double degeneracy = tp.well == Well::Single ? 1.0 : 2.0;
    ThermalState st;
    st.point = tp;
    st.method = Method::OracleSeries;
    st.shift = opts.energy_shift;
    st.ground = s.ground_excitation();
    st.log_gs = std::log(degeneracy) + std::log1p(m.excited);
    st.excess = m.gap / m.weight;
    st.n_mean = m.k1 / m.weight;
    st.n2_mean = m.k2 / m.weight;
    st.moments = m;
    return st;
}

ThermalState closed_state(const EngineConfig& cfg, const ThermalPoint& tp, const EnsembleOptions& opts) {
    const double a = tp.alpha_beta;
    ThermalState st;
    st.point = tp;
    st.method = Method::PaperClosedForm;
    st.shift = opts.energy_shift;
    // The partitioned well gives 2 * (1/2) sqrt(pi / (4 alpha beta)), the same value.
    st.log_gs = std::log(0.5 * std::sqrt(std::numbers::pi / a));
    st.excess = 0.5 / tp.beta;
    st.n_mean = 1.0 / std::sqrt(std::numbers::pi * a);
    st.n2_mean = 1.0 / (2.0 * a);
    (void)cfg;
    return st;
}

ThermalState corrected_state(const EngineConfig& cfg, const ThermalPoint& tp, const EnsembleOptions& opts) {
    // Euler-Maclaurin: sum_{n>=1} e^{-a n^2} ~ (1/2) sqrt(pi/a) - 1/2,
    // sum n e^{-a n^2} ~ 1/(2a) - 1/12, sum n^2 e^{-a n^2} ~ sqrt(pi)/(4 a^{3/2}).
    const double a = tp.well == Well::Single ? tp.alpha_beta : 4.0 * tp.alpha_beta;
    const double g = tp.well == Well::Single ? 1.0 : 2.0;
    const double step = tp.well == Well::Single ? 1.0 : 2.0;
    const double s0 = 0.5 * std::sqrt(std::numbers::pi / a) - 0.5;
    if (!(s0 > 0.0))
        throw Error(ErrorKind::DomainError, "corrected integral needs alpha*beta below pi");
    const double s1 = 0.5 / a - 1.0 / 12.0;
    const double s2 = 0.25 * std::sqrt(std::numbers::pi) * std::pow(a, -1.5);
    ThermalState st;
    st.point = tp;
    st.method = Method::CorrectedIntegral;
    st.shift = opts.energy_shift;
    st.log_gs = std::log(g * s0);
    st.n_mean = step * s1 / s0;
    st.n2_mean = step * step * s2 / s0;
    st.excess = cfg.alpha() * st.n2_mean;
    return st;
}

}  // namespace

ThermalState thermal_state(const EngineConfig& cfg, double T, Well well, Method method, const EnsembleOptions& opts) {
    const ThermalPoint tp = make_thermal_point(cfg, T, well);
    switch (method) {
        case Method::OracleSeries: return oracle_state(cfg, tp, opts);
        case Method::PaperClosedForm: return closed_state(cfg, tp, opts);
        case Method::CorrectedIntegral: return corrected_state(cfg, tp, opts);
    }
    throw Error(ErrorKind::BadParameter, "unknown method");
}

double PartitionResult::z() const { return std::exp(log_z); }

double PartitionResult::log_z_with_rest(double rest_energy) const {
    return log_z - thermal_point.beta * rest_energy;
}

PartitionResult partition(const EngineConfig& cfg, double T, Well well, Method method, const EnsembleOptions& opts) {
    const ThermalState st = thermal_state(cfg, T, well, method, opts);
    PartitionResult r;
    r.log_z = st.log_z();
    r.method = method;
    r.thermal_point = st.point;
    r.ground_excitation = st.ground;
    r.log_ground_sum = st.log_gs;
    return r;
}

double mean_level(const EngineConfig& cfg, double T, Well well, Method method, const EnsembleOptions& opts) {
    return thermal_state(cfg, T, well, method, opts).n_mean;
}

ThermalAverages thermal_averages(const EngineConfig& cfg, double T, Well well, const EnsembleOptions& opts) {
    const ThermalState st = thermal_state(cfg, T, well, Method::OracleSeries, opts);
    const LevelMoments& m = st.moments;
    const double L = cfg.half_width();
    const double mc = cfg.momentum_unit();
    ThermalAverages a;
    a.n_mean = st.n_mean;
    a.n2_mean = st.n2_mean;
    a.x_mean_T = L * (m.phi2 / m.weight);
    a.x2_mean_T = 4.0 * L * L * (m.x2_shape / m.weight);
    a.p2_mean_T = m.p2_kin / m.weight + 2.0 * mc * mc;
    a.U = cfg.rest_energy() + st.thermal_energy();
    return a;
}

double internal_energy(const EngineConfig& cfg, double T, Well well, Method method, const EnsembleOptions& opts) {
    return cfg.rest_energy() + thermal_energy(cfg, T, well, method, opts);
}

double thermal_energy(const EngineConfig& cfg, double T, Well well, Method method, const EnsembleOptions& opts) {
    return thermal_state(cfg, T, well, method, opts).thermal_energy();
}

}  // namespace relqhe
