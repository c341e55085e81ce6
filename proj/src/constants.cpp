#include "relqhe/constants.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "relqhe/errors.hpp"

namespace relqhe {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonPositiveParameter: return "NonPositiveParameter";
        case ErrorKind::BadTolerance: return "BadTolerance";
        case ErrorKind::BadParameter: return "BadParameter";
        case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
        case ErrorKind::SeriesNotConverged: return "SeriesNotConverged";
        case ErrorKind::EvaluationFailure: return "EvaluationFailure";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorKind::BadBasisSize: return "BadBasisSize";
        case ErrorKind::TemperatureOrder: return "TemperatureOrder";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownKey: return "UnknownKey";
        case ErrorKind::ConflictingFlags: return "ConflictingFlags";
    }
    return "Unknown";
}

const char* to_string(Well w) { return w == Well::Single ? "single" : "partitioned"; }

namespace {

void check_tolerances(const Tolerances& t) {
    if (!(t.series_rel_tol > 0.0 && t.series_rel_tol < 1e-6))
        throw Error(ErrorKind::BadTolerance, "series_rel_tol must lie in (0, 1e-6)");
    if (t.series_max_terms < 10'000)
        throw Error(ErrorKind::BadTolerance, "series_max_terms must be at least 10000");
    if (!(t.fd_step_scale > 0.0 && std::isfinite(t.fd_step_scale)))
        throw Error(ErrorKind::BadTolerance, "fd_step_scale must be positive");
}

Tolerances apply(Tolerances t, const ToleranceOverrides& o) {
    if (o.series_rel_tol) t.series_rel_tol = *o.series_rel_tol;
    if (o.series_max_terms) t.series_max_terms = *o.series_max_terms;
    if (o.fd_step_scale) t.fd_step_scale = *o.fd_step_scale;
    check_tolerances(t);
    return t;
}

}  // namespace

EngineConfig make_engine_config(double mass, double half_width_L, const ToleranceOverrides& overrides) {
    if (!std::isfinite(mass) || !std::isfinite(half_width_L))
        throw Error(ErrorKind::NonPositiveParameter, "mass and L must be finite");
    if (mass <= 0.0) throw Error(ErrorKind::NonPositiveParameter, "mass must be > 0");
    if (half_width_L <= 0.0) throw Error(ErrorKind::NonPositiveParameter, "L must be > 0");
    EngineConfig cfg;
    cfg.mass_ = mass;
    cfg.half_width_ = half_width_L;
    cfg.tol_ = apply(Tolerances{}, overrides);
    return cfg;
}

EngineConfig EngineConfig::with_half_width(double L) const {
    ToleranceOverrides o{tol_.series_rel_tol, tol_.series_max_terms, tol_.fd_step_scale};
    return make_engine_config(mass_, L, o);
}

EngineConfig EngineConfig::with_tolerances(const ToleranceOverrides& o) const {
    EngineConfig cfg = *this;
    cfg.tol_ = apply(tol_, o);
    return cfg;
}

double EngineConfig::alpha() const {
    const double hb = constants_.hbar;
    const double w = 2.0 * half_width_;
    return std::numbers::pi * std::numbers::pi * hb * hb / (2.0 * mass_ * w * w);
}

double EngineConfig::rest_energy() const { return mass_ * constants_.c * constants_.c; }
double EngineConfig::compton_length() const { return constants_.hbar / (mass_ * constants_.c); }
double EngineConfig::momentum_unit() const { return mass_ * constants_.c; }
double EngineConfig::half_width_natural() const { return half_width_ / compton_length(); }

double EngineConfig::beta(double T) const {
    if (!(T > 0.0) || !std::isfinite(T))
        throw Error(ErrorKind::NonPositiveParameter, "temperature must be > 0");
    return 1.0 / (constants_.k_B * T);
}

double dimensionless_group(const EngineConfig& cfg, double T) { return cfg.alpha() * cfg.beta(T); }

ThermalPoint make_thermal_point(const EngineConfig& cfg, double T, Well well) {
    const double b = cfg.beta(T);
    return ThermalPoint{T, b, cfg.alpha() * b, well};
}

}  // namespace relqhe
