#include "relqhe/spectrum.hpp"

#include <cmath>
#include <numbers>

#include "relqhe/errors.hpp"

namespace relqhe {

const char* to_string(SpectrumMode m) { return m == SpectrumMode::Exact ? "exact" : "expanded"; }

const char* to_string(Validity v) { return v == Validity::Valid ? "valid" : "negative_variance"; }

namespace {

void check_level(long n) {
    if (n < 1) throw Error(ErrorKind::LevelOutOfRange, "level index must be >= 1, got " + std::to_string(n));
}

// epsilon = p / (m c)
double reduced_momentum(long n, const EngineConfig& cfg) {
    return level_momentum(n, cfg) / cfg.momentum_unit();
}

}  // namespace

double level_momentum(long n, const EngineConfig& cfg) {
    check_level(n);
    return static_cast<double>(n) * std::numbers::pi * cfg.constants().hbar / (2.0 * cfg.half_width());
}

double excitation_exact(long n, const EngineConfig& cfg) {
    const double e = reduced_momentum(n, cfg);
    const double e2 = e * e;
    return cfg.rest_energy() * e2 / (std::sqrt(1.0 + e2) + 1.0);
}

double excitation_expanded(long n, const EngineConfig& cfg) {
    check_level(n);
    const double dn = static_cast<double>(n);
    return cfg.alpha() * dn * dn;
}

double excitation(long n, const EngineConfig& cfg, SpectrumMode mode) {
    return mode == SpectrumMode::Exact ? excitation_exact(n, cfg) : excitation_expanded(n, cfg);
}

double expansion_remainder(long n, const EngineConfig& cfg) {
    const double e = reduced_momentum(n, cfg);
    const double e2 = e * e;
    const double s = std::sqrt(1.0 + e2) + 1.0;
    return cfg.rest_energy() * e2 * e2 / (2.0 * s * s);
}

double fv_plus(long n, const EngineConfig& cfg) {
    // With r = E/(m c^2) = sqrt(1 + eps^2): phi+ = (r + 1) / (2 sqrt r) = 1 + (sqrt r - 1)^2 / (2 sqrt r)
    const double e = reduced_momentum(n, cfg);
    const double e2 = e * e;
    const double r = std::sqrt(1.0 + e2);
    const double sr = std::sqrt(r);
    const double sr_minus_1 = (e2 / (r + 1.0)) / (sr + 1.0);
    return 1.0 + sr_minus_1 * sr_minus_1 / (2.0 * sr);
}

double fv_minus(long n, const EngineConfig& cfg) {
    const double e = reduced_momentum(n, cfg);
    const double e2 = e * e;
    const double r = std::sqrt(1.0 + e2);
    return -(e2 / (r + 1.0)) / (2.0 * std::sqrt(r));
}

LevelData level(long n, const EngineConfig& cfg, SpectrumMode mode) {
    check_level(n);
    LevelData d;
    const double L = cfg.half_width();
    const double mc = cfg.momentum_unit();
    const double npi = static_cast<double>(n) * std::numbers::pi;
    d.n = n;
    d.p_n = level_momentum(n, cfg);
    d.energy_exact = cfg.rest_energy() + excitation_exact(n, cfg);
    d.energy_expanded = cfg.rest_energy() + excitation_expanded(n, cfg);
    d.excitation = excitation(n, cfg, mode);
    d.phi_plus = fv_plus(n, cfg);
    const double phi2 = d.phi_plus * d.phi_plus;
    d.x_mean = L * phi2;
    d.x2_mean = 4.0 * L * L * phi2 * (1.0 / 3.0 - 1.0 / (2.0 * npi * npi));
    d.p_mean = 0.0;
    d.p2_mean = d.p_n * d.p_n + 2.0 * mc * mc;
    if (!(d.variance_x() > 0.0)) d.validity = Validity::NegativeVarianceRegime;
    return d;
}

double state_uncertainty(long n, const EngineConfig& cfg, RestMomentum rest) {
    const LevelData d = level(n, cfg, SpectrumMode::Exact);
    if (d.validity != Validity::Valid)
        throw Error(ErrorKind::DomainError, "position variance is not positive for level " + std::to_string(n));
    const double var_p = rest == RestMomentum::Included ? d.variance_p() : d.p_n * d.p_n;
    return std::sqrt(d.variance_x()) * std::sqrt(var_p) / cfg.constants().hbar;
}

}  // namespace relqhe
