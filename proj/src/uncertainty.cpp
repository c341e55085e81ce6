#include "relqhe/uncertainty.hpp"

#include <cmath>
#include <numbers>

#include "relqhe/errors.hpp"
#include "relqhe/numerics.hpp"

namespace relqhe {

namespace {

constexpr double pi = std::numbers::pi;
const double pi_5_2 = std::pow(pi, 2.5);

UncertaintyReport finish(const EngineConfig& cfg, UncertaintyReport r, const UncertaintyOptions& opts) {
    r.paper_literal = opts.paper_literal;
    if (!(r.var_x > 0.0)) {
        r.validity_flag = Validity::NegativeVarianceRegime;
        r.dx = 0.0;
    } else {
        r.dx = std::sqrt(r.var_x);
    }
    r.dp = std::sqrt(r.var_p);
    r.product = r.dx * r.dp;
    if (opts.paper_literal) {
        r.sum_normalized = r.dx + r.dp;
    } else {
        r.sum_normalized = natural_length(cfg, r.dx) + natural_momentum(cfg, r.dp);
    }
    return r;
}

}  // namespace

double natural_length(const EngineConfig& cfg, double x) { return x / cfg.compton_length(); }
double natural_momentum(const EngineConfig& cfg, double p) { return p / cfg.momentum_unit(); }

double closed_form_n_bar(const EngineConfig& cfg, double T) {
    return 1.0 / std::sqrt(pi * dimensionless_group(cfg, T));
}

double closed_form_phi(const EngineConfig& cfg, double n_bar) {
    const long n = std::max(1L, std::lround(n_bar));
    return fv_plus(n, cfg);
}

double closed_variance_x(const EngineConfig& cfg, double A, double phi) {
    const double L = cfg.half_width();
    const double phi2 = phi * phi;
    const double bracket = (4.0 / 3.0 - phi2) + (4.0 / (pi * pi)) * A - (4.0 / pi_5_2) * std::sqrt(A) * std::exp(-A);
    return L * L * phi2 * bracket;
}

double closed_variance_x_erfc_form(const EngineConfig& cfg, double A, double phi) {
    const double L = cfg.half_width();
    const double phi2 = phi * phi;
    const double num = std::exp(-A) - std::sqrt(pi * A) * numerics::erfc(std::sqrt(A));
    const double den = 0.5 * std::sqrt(pi / A);
    return -(2.0 * L * L / (pi * pi)) * phi2 * num / den + (4.0 * L * L / 3.0) * phi2 - L * L * phi2 * phi2;
}

double closed_variance_p(const EngineConfig& cfg, double n_bar) {
    const double L = cfg.half_width();
    const double hb = cfg.constants().hbar;
    const double mc = cfg.momentum_unit();
    return pi * pi * pi * hb * hb * n_bar * n_bar / (8.0 * L * L) + 2.0 * mc * mc;
}

double literal_variance_p(const EngineConfig& cfg, double n_bar) {
    const double L = cfg.half_width();
    const double hb = cfg.constants().hbar;
    const double mc2 = cfg.rest_energy();
    return 0.25 * hb * hb * (8.0 * mc2 / (hb * hb) + pi * pi * pi * n_bar * n_bar / (2.0 * L * L));
}

double thermal_variance_x(const EngineConfig& cfg, double T, Method method, const UncertaintyOptions& opts) {
    if (method == Method::OracleSeries) return thermal_averages(cfg, T, Well::Single, opts.ensemble).variance_x();
    const double A = dimensionless_group(cfg, T);
    const double n_bar = 1.0 / std::sqrt(pi * A);
    return closed_variance_x(cfg, A, closed_form_phi(cfg, n_bar));
}

double thermal_variance_p(const EngineConfig& cfg, double T, Method method, const UncertaintyOptions& opts) {
    if (method == Method::OracleSeries) return thermal_averages(cfg, T, Well::Single, opts.ensemble).p2_mean_T;
    const double n_bar = closed_form_n_bar(cfg, T);
    return opts.paper_literal ? literal_variance_p(cfg, n_bar) : closed_variance_p(cfg, n_bar);
}

UncertaintyReport uncertainty_report(const EngineConfig& cfg, double T, Method method, const UncertaintyOptions& opts) {
    UncertaintyReport r;
    r.method = method;
    if (method == Method::OracleSeries) {
        const ThermalAverages a = thermal_averages(cfg, T, Well::Single, opts.ensemble);
        r.var_x = a.variance_x();
        r.var_p = opts.paper_literal ? literal_variance_p(cfg, a.n_mean) : a.p2_mean_T;
        r.n_bar = a.n_mean;
        r.phi = 1.0;
        return finish(cfg, r, opts);
    }
    if (method != Method::PaperClosedForm)
        throw Error(ErrorKind::BadParameter, "uncertainty report supports oracle and paper methods");
    const double A = dimensionless_group(cfg, T);
    r.n_bar = 1.0 / std::sqrt(pi * A);
    r.phi = closed_form_phi(cfg, r.n_bar);
    r.var_x = closed_variance_x(cfg, A, r.phi);
    r.var_p = opts.paper_literal ? literal_variance_p(cfg, r.n_bar) : closed_variance_p(cfg, r.n_bar);
    return finish(cfg, r, opts);
}

double sum_uncertainty_fixed_n(const EngineConfig& cfg, double n_bar, double T, const UncertaintyOptions& opts) {
    if (!(n_bar >= 1.0)) throw Error(ErrorKind::BadParameter, "n_bar must be >= 1");
    const double A = dimensionless_group(cfg, T);
    UncertaintyReport r;
    r.method = Method::PaperClosedForm;
    r.n_bar = n_bar;
    r.phi = closed_form_phi(cfg, n_bar);
    r.var_x = closed_variance_x(cfg, A, r.phi);
    r.var_p = opts.paper_literal ? literal_variance_p(cfg, n_bar) : closed_variance_p(cfg, n_bar);
    return finish(cfg, r, opts).sum_normalized;
}

}  // namespace relqhe
