#include "relqhe/bounds.hpp"

#include <cmath>
#include <numbers>

#include "relqhe/ensemble.hpp"
#include "relqhe/errors.hpp"
#include "relqhe/spectrum.hpp"
#include "relqhe/uncertainty.hpp"

namespace relqhe {

namespace {

constexpr double pi = std::numbers::pi;
const double pi_5_2 = std::pow(pi, 2.5);

void check_level(long n) {
    if (n < 1) throw Error(ErrorKind::LevelOutOfRange, "level index must be >= 1");
}

// Matrix elements for the box of width 2 ell, sine basis, before phi+ scaling.
double x_element_bare(double ell, long n, long m) {
    if ((n + m) % 2 == 0) return 0.0;
    const double dn = static_cast<double>(n), dm = static_cast<double>(m);
    const double d = dn * dn - dm * dm;
    return -16.0 * ell * dn * dm / (pi * pi * d * d);
}

double p_element_bare_abs(double ell, long n, long m) {
    if ((n + m) % 2 == 0) return 0.0;
    const double dn = static_cast<double>(n), dm = static_cast<double>(m);
    return 2.0 * dn * dm / (ell * std::abs(dn * dn - dm * dm));
}

}  // namespace

double box_x_element(const EngineConfig& cfg, long n, long m, double shift) {
    check_level(n);
    check_level(m);
    const double ell = cfg.half_width_natural();
    const double scale = fv_plus(n, cfg) * fv_plus(m, cfg);
    if (n == m) return scale * (ell + shift);
    return scale * x_element_bare(ell, n, m);
}

double box_p_element_abs(const EngineConfig& cfg, long n, long m) {
    check_level(n);
    check_level(m);
    if (n == m) return 0.0;
    return fv_plus(n, cfg) * fv_plus(m, cfg) * p_element_bare_abs(cfg.half_width_natural(), n, m);
}

double sum_variance_lower_bound(const EngineConfig& cfg, long k, long N, double shift) {
    check_level(k);
    if (N < k) throw Error(ErrorKind::BadBasisSize, "basis size must be >= state index");
    const double phik = fv_plus(k, cfg);
    const double norm = phik * phik;
    const double x_mean = box_x_element(cfg, k, k, shift) / norm;
    double sum = 0.0;
    for (long n = 1; n <= N; ++n) {
        double xb = box_x_element(cfg, n, k, shift);
        if (n == k) xb -= x_mean * norm;
        const double pb = box_p_element_abs(cfg, n, k);
        const double t = std::abs(xb) + pb;
        sum += t * t;
    }
    return 0.5 * sum;
}

double state_variance_sum(const EngineConfig& cfg, long n) {
    const LevelData d = level(n, cfg, SpectrumMode::Exact);
    return natural_length(cfg, natural_length(cfg, d.variance_x())) +
           natural_momentum(cfg, natural_momentum(cfg, d.variance_p()));
}

bool state_variance_valid(const EngineConfig& cfg, long n) {
    return level(n, cfg, SpectrumMode::Exact).validity == Validity::Valid;
}

double reverse_bound_state(const EngineConfig& cfg, long n) {
    check_level(n);
    const double ell = cfg.half_width_natural();
    const double phi = fv_plus(n, cfg);
    const double npi = static_cast<double>(n) * pi;
    return 4.0 * ell * ell * phi * phi * (1.0 / 3.0 - 1.0 / (2.0 * npi * npi)) + npi * npi / (4.0 * ell * ell) + 2.0;
}

double raw_second_moment_sum(const EngineConfig& cfg, long n, double shift) {
    check_level(n);
    const double ell = cfg.half_width_natural();
    const double phi2 = fv_plus(n, cfg) * fv_plus(n, cfg);
    const double npi = static_cast<double>(n) * pi;
    // <(x + s)^2> = <x^2> + 2 s <x> + s^2
    const double x2 = 4.0 * ell * ell * phi2 * (1.0 / 3.0 - 1.0 / (2.0 * npi * npi)) + 2.0 * shift * ell * phi2 +
                      shift * shift;
    return x2 + npi * npi / (4.0 * ell * ell) + 2.0;
}

long default_basis_size(long k) { return std::max(200L, 4 * k); }

double thermal_variance_sum(const EngineConfig& cfg, double T) {
    const ThermalAverages a = thermal_averages(cfg, T, Well::Single);
    return natural_length(cfg, natural_length(cfg, a.variance_x())) +
           natural_momentum(cfg, natural_momentum(cfg, a.p2_mean_T));
}

double thermal_lower_bound(const EngineConfig& cfg, double T, double shift) {
    const ThermalState st = thermal_state(cfg, T, Well::Single, Method::OracleSeries);
    const double beta = st.point.beta;
    const double total = st.moments.weight;
    LevelSeries s{&cfg, Well::Single, SpectrumMode::Expanded, beta};
    double sum = 0.0;
    for (long k = 1;; ++k) {
        const double w = std::exp(-beta * s.gap(static_cast<std::size_t>(k))) / total;
        if (w < 1e-17 && k > 1) break;
        sum += w * sum_variance_lower_bound(cfg, k, default_basis_size(k), shift);
    }
    return sum;
}

double reverse_bound_thermal(const EngineConfig& cfg, double T) {
    const double A = dimensionless_group(cfg, T);
    const double n_bar = 1.0 / std::sqrt(pi * A);
    const double phi = closed_form_phi(cfg, n_bar);
    const double phi2 = phi * phi;
    const double ell = cfg.half_width_natural();
    const double l2 = ell * ell;
    return -(8.0 * l2 * std::sqrt(A) / pi_5_2) * phi2 * (std::exp(-A) - std::sqrt(pi * A)) +
           (8.0 * l2 / 3.0) * phi2 - 2.0 * l2 * phi2 * phi2 + n_bar * n_bar * pi * pi * pi / (4.0 * l2) + 4.0;
}

BoundPair state_bounds(const EngineConfig& cfg, long n, long basis_size) {
    BoundPair b;
    b.subject = BoundSubject::PerState;
    b.n = n;
    b.lower = sum_variance_lower_bound(cfg, n, basis_size > 0 ? basis_size : default_basis_size(n));
    b.upper = reverse_bound_state(cfg, n);
    b.measured = state_variance_sum(cfg, n);
    b.valid = state_variance_valid(cfg, n);
    return b;
}

BoundPair thermal_bounds(const EngineConfig& cfg, double T) {
    BoundPair b;
    b.subject = BoundSubject::Thermal;
    b.temperature = T;
    b.lower = thermal_lower_bound(cfg, T);
    b.upper = reverse_bound_thermal(cfg, T);
    b.measured = thermal_variance_sum(cfg, T);
    b.valid = uncertainty_report(cfg, T, Method::PaperClosedForm).validity_flag == Validity::Valid;
    return b;
}

DunklWilliamsRecord dunkl_williams(double var_a, double var_b, double cov, double var_diff) {
    const double da = std::sqrt(var_a), db = std::sqrt(var_b);
    const double denom = 1.0 - cov / (da * db);
    if (!(denom > 0.0)) throw Error(ErrorKind::DegenerateDenominator, "1 - Cov/(dA dB) <= 0");
    DunklWilliamsRecord r;
    r.var_a = var_a;
    r.var_b = var_b;
    r.cov = cov;
    r.var_diff = var_diff;
    r.lhs = var_a + var_b;
    r.rhs = 2.0 * var_diff / denom - 2.0 * da * db;
    r.slack = r.rhs - r.lhs;
    return r;
}

DunklWilliamsRecord dunkl_williams_check(const EngineConfig& cfg, long n, double shift) {
    const LevelData d = level(n, cfg, SpectrumMode::Exact);
    const double ell = cfg.half_width_natural();
    const double phi2 = d.phi_plus * d.phi_plus;
    const double npi = static_cast<double>(n) * pi;
    // moments of x + s
    const double x1 = ell * phi2 + shift;
    const double x2 = 4.0 * ell * ell * phi2 * (1.0 / 3.0 - 1.0 / (2.0 * npi * npi)) + 2.0 * shift * ell * phi2 +
                      shift * shift;
    const double var_x = x2 - x1 * x1;
    const double var_p = natural_momentum(cfg, natural_momentum(cfg, d.variance_p()));
    // <{x, p}> vanishes in a real stationary state and <p> = 0
    const double cov = 0.0;
    return dunkl_williams(var_x, var_p, cov, var_x + var_p - 2.0 * cov);
}

DunklWilliamsRecord dunkl_williams_check_thermal(const EngineConfig& cfg, double T) {
    const ThermalAverages a = thermal_averages(cfg, T, Well::Single);
    const double var_x = natural_length(cfg, natural_length(cfg, a.variance_x()));
    const double var_p = natural_momentum(cfg, natural_momentum(cfg, a.p2_mean_T));
    const double cov = 0.0;
    return dunkl_williams(var_x, var_p, cov, var_x + var_p - 2.0 * cov);
}

}  // namespace relqhe
