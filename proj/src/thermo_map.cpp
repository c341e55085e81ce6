#include "relqhe/thermo_map.hpp"

#include <cmath>
#include <numbers>

#include "relqhe/errors.hpp"
#include "relqhe/numerics.hpp"

namespace relqhe {

namespace {

constexpr double pi = std::numbers::pi;
const double pi_5_2 = std::pow(pi, 2.5);

void check_phi(double phi) {
    if (!(phi * phi < 4.0 / 3.0)) throw Error(ErrorKind::DomainError, "phi+^2 >= 4/3");
}

double sum_of(const EngineConfig& cfg, double dx, double dp, const UncertaintyOptions& opts) {
    if (opts.paper_literal) return dx + dp;
    return natural_length(cfg, dx) + natural_momentum(cfg, dp);
}

struct ClosedParts {
    double A;
    double n2;     // n_bar^2
    double phi;
    UncertaintyReport report;
};

ClosedParts closed_parts(const EngineConfig& cfg, double T, const UncertaintyOptions& opts) {
    ClosedParts c;
    c.A = dimensionless_group(cfg, T);
    c.n2 = 1.0 / (pi * c.A);
    c.report = uncertainty_report(cfg, T, Method::PaperClosedForm, opts);
    c.phi = c.report.phi;
    check_phi(c.phi);
    if (c.report.validity_flag != Validity::Valid)
        throw Error(ErrorKind::DomainError, "closed-form position variance is not positive");
    return c;
}

}  // namespace

double mapping_constant() { return 16.0 * std::numbers::sqrt2 / (pi * pi * pi); }

CompensatorTerm compensator(const EngineConfig& cfg, double T, const UncertaintyOptions& opts) {
    const ClosedParts c = closed_parts(cfg, T, opts);
    return CompensatorTerm{c.n2 / mapping_constant(), c.report.sum_normalized};
}

double c_t(const EngineConfig& cfg, double T, const UncertaintyOptions& opts) {
    return compensator(cfg, T, opts).value();
}

double mapped_radicand(const EngineConfig& cfg, double T, double dx, double dp, const UncertaintyOptions& opts) {
    const CompensatorTerm ct = compensator(cfg, T, opts);
    const double u = sum_of(cfg, dx, dp, opts);
    return mapping_constant() * ((u - ct.u_ref) + ct.n2_over_k);
}

double partition_from_uncertainty(const EngineConfig& cfg, double T, double dx, double dp,
                                  const UncertaintyOptions& opts) {
    const double R = mapped_radicand(cfg, T, dx, dp, opts);
    if (!(R > 0.0)) throw Error(ErrorKind::DomainError, "uncertainty radicand is not positive");
    return 0.5 * pi * std::sqrt(R);
}

double uncertainty_sum_beta_derivative(const EngineConfig& cfg, double T, const UncertaintyOptions& opts) {
    const ClosedParts c = closed_parts(cfg, T, opts);
    const double alpha = cfg.alpha();
    const double beta = cfg.beta(T);
    const double L = cfg.half_width();
    const double phi2 = c.phi * c.phi;
    const double sA = std::sqrt(c.A);
    const double dvar_x = L * L * phi2 * alpha *
                          (4.0 / (pi * pi) - (4.0 / pi_5_2) * std::exp(-c.A) * (0.5 / sA - sA));
    const double dn2 = -c.n2 / beta;
    const double hb = cfg.constants().hbar;
    double dvar_p = pi * pi * pi * hb * hb * dn2 / (8.0 * L * L);
    if (opts.paper_literal) dvar_p = 0.25 * hb * hb * pi * pi * pi * dn2 / (2.0 * L * L);
    const double ddx = dvar_x / (2.0 * c.report.dx);
    const double ddp = dvar_p / (2.0 * c.report.dp);
    if (opts.paper_literal) return ddx + ddp;
    return natural_length(cfg, ddx) + natural_momentum(cfg, ddp);
}

UncertaintyMappedState mapped_state(const EngineConfig& cfg, double T, const UncertaintyOptions& opts) {
    const ClosedParts c = closed_parts(cfg, T, opts);
    const double K = mapping_constant();
    const double beta = cfg.beta(T);
    const double k_B = cfg.constants().k_B;
    UncertaintyMappedState s;
    s.temperature = T;
    s.u_sum = c.report.sum_normalized;
    const CompensatorTerm ct{c.n2 / K, c.report.sum_normalized};
    s.c_t = ct.value();
    s.radicand = K * ((s.u_sum - ct.u_ref) + ct.n2_over_k);
    if (!(s.radicand > 0.0)) throw Error(ErrorKind::DomainError, "uncertainty radicand is not positive");
    s.z_mapped = 0.5 * pi * std::sqrt(s.radicand);
    s.log_z_mapped = std::log(s.z_mapped);

    // zeta and eta_corr cancel in their sum; keep extra digits.
    const long double du = uncertainty_sum_beta_derivative(cfg, T, opts);
    const long double dn2 = -static_cast<long double>(c.n2) / beta;
    const long double half_pi = 0.5L * std::numbers::pi_v<long double>;
    const long double zeta = -half_pi * (dn2 - static_cast<long double>(K) * du);
    const long double eta = -half_pi * static_cast<long double>(K) * du;
    s.zeta = static_cast<double>(zeta);
    s.eta_corr = static_cast<double>(eta);
    s.tau = k_B * s.zeta;
    s.chi = k_B * s.eta_corr;
    const long double piR = std::numbers::pi_v<long double> * s.radicand;
    s.thermal_energy = static_cast<double>((zeta + eta) / piR);

    const double root3 = std::sqrt((4.0 * std::numbers::sqrt2 / pi) * ((s.u_sum - ct.u_ref) + ct.n2_over_k));
    const double log_root3 = std::log(root3);
    s.free_energy = -log_root3 / beta;
    const long double tc = static_cast<long double>(k_B) * (zeta + eta);
    s.s_mapped = k_B * log_root3 + static_cast<double>(static_cast<long double>(beta) * tc / piR);
    s.prefactor_log_residual = log_root3 - s.log_z_mapped;
    s.u_mapped = cfg.rest_energy() + s.thermal_energy;
    s.f_mapped = cfg.rest_energy() + s.free_energy;
    return s;
}

double internal_energy_from_uncertainty(const EngineConfig& cfg, double T, const UncertaintyOptions& opts) {
    return mapped_state(cfg, T, opts).u_mapped;
}

double helmholtz_from_uncertainty(const EngineConfig& cfg, double T, const UncertaintyOptions& opts) {
    return mapped_state(cfg, T, opts).f_mapped;
}

double entropy_from_uncertainty(const EngineConfig& cfg, double T, const UncertaintyOptions& opts) {
    return mapped_state(cfg, T, opts).s_mapped;
}

namespace {

struct LiteralInputs {
    double ell, an, bn, A, phi, u;
};

LiteralInputs literal_inputs(const EngineConfig& cfg, double T) {
    LiteralInputs in;
    in.ell = cfg.half_width_natural();
    in.an = cfg.alpha() / cfg.rest_energy();
    in.bn = cfg.beta(T) * cfg.rest_energy();
    in.A = in.an * in.bn;
    const UncertaintyReport r = uncertainty_report(cfg, T, Method::PaperClosedForm);
    in.phi = r.phi;
    in.u = r.sum_normalized;
    check_phi(in.phi);
    return in;
}

double c_t_lit(double ell, double A, double phi) {
    const double d = 4.0 / 3.0 - phi * phi;
    const double br = 2.0 * (A - std::sqrt(pi) * std::pow(A, 1.5) - 1.0) / (pi_5_2 * std::sqrt(A) * d) - 1.0;
    return ell * phi * std::sqrt(d) * br - std::numbers::sqrt2;
}

double zeta_lit(double ell, double an, double bn, double phi) {
    const double d = 4.0 / 3.0 - phi * phi;
    const double A = an * bn;
    const double t1 = 2.0 * ell * phi / (pi_5_2 * std::sqrt(A * d)) * (an - std::pow(an, 1.5) * std::sqrt(pi * bn));
    const double t2 = ell * phi / (pi_5_2 * std::pow(bn, 1.5) * std::sqrt(an * d)) *
                      (A - std::sqrt(pi) * std::pow(A, 1.5) - 1.0);
    return mapping_constant() * (t1 - t2);
}

double eta_lit(double ell, double an, double bn, double phi) {
    const double A = an * bn;
    const double phi2 = phi * phi;
    const double e = std::exp(-A);
    const double num = 4.0 * ell * ell * phi2 / pi_5_2 *
                       (std::sqrt(an / (4.0 * bn)) * (e - std::sqrt(pi * A)) +
                        std::sqrt(A) * (-an * e - std::sqrt(pi * an / (4.0 * bn))));
    const double var = ell * ell * phi2 * (4.0 / 3.0 - phi2) -
                       4.0 * ell * ell * phi2 * std::sqrt(A) / pi_5_2 * (e - std::sqrt(pi * A));
    return num / (2.0 * std::sqrt(var));
}

}  // namespace

double c_t_literal(const EngineConfig& cfg, double T) {
    const LiteralInputs in = literal_inputs(cfg, T);
    return c_t_lit(in.ell, in.A, in.phi);
}

LiteralAuxiliaries literal_auxiliaries(const EngineConfig& cfg, double T) {
    const LiteralInputs in = literal_inputs(cfg, T);
    const double K = mapping_constant();
    LiteralAuxiliaries a;
    a.c_t = c_t_lit(in.ell, in.A, in.phi);
    a.zeta = zeta_lit(in.ell, in.an, in.bn, in.phi);
    a.eta_corr = eta_lit(in.ell, in.an, in.bn, in.phi);
    a.tau = a.zeta;
    a.chi = a.eta_corr;
    a.radicand = K * (in.u + a.c_t);
    a.defined = a.radicand > 0.0;
    if (!a.defined) {
        a.energy_residual = std::numeric_limits<double>::quiet_NaN();
        return a;
    }
    // ln Z_lit(beta) with the literal C_T and the closed-form u, natural units
    const double ell = in.ell, an = in.an, phi = in.phi;
    auto log_z = [&](double bn) {
        const double A = an * bn;
        const double phi2 = phi * phi;
        const double var_x = ell * ell * phi2 * ((4.0 / 3.0 - phi2) + 4.0 * A / (pi * pi) -
                                                 4.0 / pi_5_2 * std::sqrt(A) * std::exp(-A));
        const double n2 = 1.0 / (pi * A);
        const double u = std::sqrt(var_x) + std::sqrt(pi * pi * pi * n2 / (8.0 * ell * ell) + 2.0);
        return std::log(0.5 * pi * std::sqrt(K * (u + c_t_lit(ell, A, phi))));
    };
    const double u_fd = -numerics::central_diff(log_z, in.bn, cfg.tolerances().fd_step_scale);
    const double u_lit = (a.zeta + a.eta_corr) / (pi * a.radicand);
    a.energy_residual = std::abs(u_lit - u_fd) / std::abs(u_fd);
    return a;
}

}  // namespace relqhe
