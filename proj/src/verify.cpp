#include "relqhe/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "relqhe/bounds.hpp"
#include "relqhe/cycle.hpp"
#include "relqhe/ensemble.hpp"
#include "relqhe/errors.hpp"
#include "relqhe/level_kernels.hpp"
#include "relqhe/numerics.hpp"
#include "relqhe/parallel.hpp"
#include "relqhe/thermo_map.hpp"
#include "relqhe/uncertainty.hpp"

namespace relqhe {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();

template <typename... Args>
std::string fmt(const char* f, Args... args) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// Largest value seen, with the point it came from.
struct Worst {
    double value = -std::numeric_limits<double>::infinity();
    std::string where;
    void update(double v, const std::string& w) {
        if (v > value || std::isnan(v)) {
            value = v;
            where = w;
        }
    }
    void merge(const Worst& o) { update(o.value, o.where); }
};

CheckResult at_most(const std::string& name, const Worst& w, double threshold) {
    CheckResult r;
    r.name = name;
    r.measured = w.value;
    r.threshold = threshold;
    r.status = w.value <= threshold ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = "worst at " + w.where;
    return r;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

std::vector<double> logspace(double a, double b, int n) {
    std::vector<double> v(n);
    const double la = std::log(a), lb = std::log(b);
    for (int i = 0; i < n; ++i) v[i] = std::exp(la + (lb - la) * i / (n - 1));
    return v;
}

UncertaintyOptions uopts(const RunConfig& run) {
    UncertaintyOptions o;
    o.paper_literal = run.paper_literal;
    return o;
}

double rel_err(double a, double b, double floor) { return std::abs(a - b) / std::max(std::abs(b), floor); }

// Angstrom grid plus wide wells where many levels are populated.
std::vector<double> identity_L_values() {
    std::vector<double> Ls = linspace(0.05, 1.0, 8);
    for (double L : {30.0, 300.0, 3000.0}) Ls.push_back(L);
    for (double& L : Ls) L *= angstrom;
    return Ls;
}

CheckResult quantum_bound(const RunConfig& run) {
    const EngineConfig base = run.engine();
    const double half_hbar = 0.5 * base.constants().hbar;
    const auto Ls = linspace(0.05, 1.0, 20);
    const auto Ts = logspace(10.0, 1000.0, 20);
    auto rows = parallel_map<Worst>(Ls.size(), [&](std::size_t i) {
        Worst w;
        const EngineConfig cfg = base.with_half_width(Ls[i] * angstrom);
        for (double T : Ts) {
            const UncertaintyReport r = uncertainty_report(cfg, T, Method::OracleSeries);
            w.update(-(r.product / half_hbar), fmt("L=%g A, T=%g K", Ls[i], T));
        }
        return w;
    });
    Worst w;
    for (const auto& x : rows) w.merge(x);
    CheckResult r;
    r.name = "quantum_bound_grid";
    r.measured = -w.value;
    r.threshold = 1.0;
    r.status = -w.value >= 1.0 ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = "min dX*dP/(hbar/2) over 400 points, at " + w.where;
    return r;
}

// Well half-width giving the requested alpha*beta at temperature T.
EngineConfig config_for_alpha_beta(const EngineConfig& base, double ab, double T) {
    const double hb = base.constants().hbar;
    const double alpha = ab * base.constants().k_B * T;
    return base.with_half_width(pi * hb / std::sqrt(8.0 * base.mass() * alpha));
}

Worst fidelity_worst(const RunConfig& run, bool energy) {
    const EngineConfig base = run.engine();
    const double T = 150.0;
    const auto abs = logspace(1e-8, 1e-2, 40);
    auto rows = parallel_map<Worst>(abs.size(), [&](std::size_t i) {
        const EngineConfig cfg = config_for_alpha_beta(base, abs[i], T);
        const ThermalState o = thermal_state(cfg, T, Well::Single, Method::OracleSeries);
        const ThermalState p = thermal_state(cfg, T, Well::Single, Method::PaperClosedForm);
        const double scale = 1.1 * std::sqrt(abs[i] / pi);
        double err;
        if (energy) {
            const double kT = cfg.constants().k_B * T;
            err = std::abs(p.thermal_energy() - o.thermal_energy()) / kT;
        } else {
            err = std::abs(std::expm1(p.log_z() - o.log_z()));
        }
        Worst w;
        w.update(err / scale, fmt("alpha*beta=%g (T=%g K)", abs[i], T));
        return w;
    });
    Worst w;
    for (const auto& x : rows) w.merge(x);
    return w;
}

CheckResult closed_form_z(const RunConfig& run) {
    CheckResult r = at_most("closed_form_fidelity_Z", fidelity_worst(run, false), 1.0);
    r.detail = "max |Z_paper/Z_oracle - 1| / (1.1 sqrt(alpha beta/pi)), " + r.detail;
    return r;
}

CheckResult closed_form_u(const RunConfig& run) {
    CheckResult r = at_most("closed_form_fidelity_U", fidelity_worst(run, true), 1.0);
    r.detail = "max |U_paper - U_oracle| / (k_B T 1.1 sqrt(alpha beta/pi)), " + r.detail;
    return r;
}

struct IdentityWorst {
    Worst energy_split, entropy_fd, energy_fd;
};

IdentityWorst direct_identities(const EngineConfig& base, Method method, double T1, double T2) {
    const auto Ls = identity_L_values();
    const double k = base.constants().k_B;
    const double scale = base.tolerances().fd_step_scale;
    auto rows = parallel_map<IdentityWorst>(Ls.size(), [&](std::size_t i) {
        IdentityWorst w;
        const EngineConfig cfg = base.with_half_width(Ls[i]);
        for (double T : {T2, T1}) {
            const std::string where = fmt("L=%g A, T=%g K %s", Ls[i] / angstrom, T, to_string(method));
            const ThermalState s = thermal_state(cfg, T, Well::Single, method);
            const double kT = k * T;
            // ground-relative: the ground level does not depend on T
            const double U = s.excess;
            const double F = -kT * s.log_gs;
            const double S = s.entropy(k);
            w.energy_split.update(rel_err(F + T * S, U, 1e-6 * kT), where);
            auto F_of_T = [&](double t) { return -k * t * thermal_state(cfg, t, Well::Single, method).log_gs; };
            w.entropy_fd.update(rel_err(-numerics::central_diff(F_of_T, T, scale), S, 1e-6 * k), where);
            auto lgs_of_T = [&](double t) { return thermal_state(cfg, t, Well::Single, method).log_gs; };
            const double U_fd = k * T * T * numerics::central_diff(lgs_of_T, T, scale);
            w.energy_fd.update(rel_err(U_fd, U, 1e-6 * kT), where);
        }
        return w;
    });
    IdentityWorst w;
    for (const auto& x : rows) {
        w.energy_split.merge(x.energy_split);
        w.entropy_fd.merge(x.entropy_fd);
        w.energy_fd.merge(x.energy_fd);
    }
    return w;
}

IdentityWorst mapped_identities(const EngineConfig& base, const UncertaintyOptions& opts, double T1, double T2,
                                Worst& prefactor) {
    const auto Ls = identity_L_values();
    const double k = base.constants().k_B;
    const double scale = base.tolerances().fd_step_scale;
    struct Row {
        IdentityWorst w;
        Worst pre;
    };
    auto rows = parallel_map<Row>(Ls.size(), [&](std::size_t i) {
        Row r;
        const EngineConfig cfg = base.with_half_width(Ls[i]);
        for (double T : {T2, T1}) {
            const std::string where = fmt("L=%g A, T=%g K", Ls[i] / angstrom, T);
            const UncertaintyMappedState m = mapped_state(cfg, T, opts);
            const double kT = k * T;
            r.w.energy_split.update(rel_err(m.free_energy + T * m.s_mapped, m.thermal_energy, 1e-6 * kT), where);
            auto F_of_T = [&](double t) { return mapped_state(cfg, t, opts).free_energy; };
            r.w.entropy_fd.update(rel_err(-numerics::central_diff(F_of_T, T, scale), m.s_mapped, 1e-6 * k), where);
            auto lz_of_T = [&](double t) { return mapped_state(cfg, t, opts).log_z_mapped; };
            const double U_fd = k * T * T * numerics::central_diff(lz_of_T, T, scale);
            r.w.energy_fd.update(rel_err(U_fd, m.thermal_energy, 1e-6 * kT), where);
            r.pre.update(std::abs(m.prefactor_log_residual), where);
        }
        return r;
    });
    IdentityWorst w;
    for (const auto& x : rows) {
        w.energy_split.merge(x.w.energy_split);
        w.entropy_fd.merge(x.w.entropy_fd);
        w.energy_fd.merge(x.w.energy_fd);
        prefactor.merge(x.pre);
    }
    return w;
}

CheckResult identities_direct(const RunConfig& run, Method method, const char* name) {
    const IdentityWorst w = direct_identities(run.engine(), method, run.T1_K, run.T2_K);
    Worst all;
    all.merge(w.energy_split);
    all.merge(w.entropy_fd);
    all.merge(w.energy_fd);
    CheckResult r = at_most(name, all, 1e-6);
    r.detail = fmt("U=F+TS %.3g, S=-dF/dT %.3g, U=-dlnZ/dbeta %.3g; ", w.energy_split.value, w.entropy_fd.value,
                   w.energy_fd.value) +
               all.where;
    return r;
}

CheckResult identities_oracle(const RunConfig& run) {
    return identities_direct(run, Method::OracleSeries, "identities_direct_oracle");
}

CheckResult identities_paper(const RunConfig& run) {
    return identities_direct(run, Method::PaperClosedForm, "identities_direct_paper");
}

CheckResult identities_mapped(const RunConfig& run) {
    Worst pre;
    const IdentityWorst w = mapped_identities(run.engine(), uopts(run), run.T1_K, run.T2_K, pre);
    Worst all;
    all.merge(w.energy_split);
    all.merge(w.entropy_fd);
    all.merge(w.energy_fd);
    CheckResult r = at_most("identities_uncertainty_mapped", all, 1e-6);
    r.detail = fmt("U=F+TS %.3g, S=-dF/dT %.3g, U=-dlnZ/dbeta %.3g, prefactor residual %.3g; ",
                   w.energy_split.value, w.entropy_fd.value, w.energy_fd.value, pre.value) +
               all.where;
    return r;
}

CheckResult prefactor_residual(const RunConfig& run) {
    Worst pre;
    mapped_identities(run.engine(), uopts(run), run.T1_K, run.T2_K, pre);
    CheckResult r = at_most("free_energy_prefactor_residual", pre, 1e-12);
    r.detail = "constant ln-residual between the free-energy and partition prefactors, " + r.detail;
    return r;
}

CheckResult bound_ordering_states(const RunConfig& run) {
    const EngineConfig base = run.engine();
    const std::vector<double> Ls = {run.L_angstrom};
    auto rows = parallel_map<Worst>(Ls.size(), [&](std::size_t i) {
        Worst w;
        const EngineConfig cfg = base.with_half_width(Ls[i] * angstrom);
        for (long n = 1; n <= 50; ++n) {
            const BoundPair b = state_bounds(cfg, n);
            if (!b.valid) continue;
            const double tol = 8 * eps * b.measured;
            const double viol = std::max(b.lower - b.measured, b.measured - b.upper) / b.measured;
            w.update(b.lower <= b.measured + tol && b.measured <= b.upper + tol ? std::min(viol, 0.0) : viol,
                     fmt("L=%g A, n=%ld", Ls[i], n));
        }
        return w;
    });
    Worst w;
    for (const auto& x : rows) w.merge(x);
    CheckResult r = at_most("bound_ordering_states", w, 8 * eps);
    r.detail = "max relative violation of lower <= var sum <= reverse, n=1..50 at the configured L, " + r.detail;
    return r;
}

CheckResult bound_ordering_thermal(const RunConfig& run) {
    const EngineConfig base = run.engine();
    const auto Ls = linspace(0.05, 1.0, 10);
    const auto Ts = logspace(10.0, 1000.0, 6);
    auto rows = parallel_map<Worst>(Ls.size(), [&](std::size_t i) {
        Worst w;
        const EngineConfig cfg = base.with_half_width(Ls[i] * angstrom);
        for (double T : Ts) {
            const BoundPair b = thermal_bounds(cfg, T);
            if (!b.valid) continue;
            const double viol = std::max(b.lower - b.measured, b.measured - b.upper) / b.measured;
            w.update(viol, fmt("L=%g A, T=%g K", Ls[i], T));
        }
        return w;
    });
    Worst w;
    for (const auto& x : rows) w.merge(x);
    CheckResult r = at_most("bound_ordering_thermal", w, 8 * eps);
    r.detail = "max relative violation of lower <= thermal var sum <= reverse, " + r.detail;
    return r;
}

CheckResult dunkl_williams_slack(const RunConfig& run) {
    const EngineConfig base = run.engine();
    Worst w;
    for (double L : {0.05, 0.5, 1.0, 100.0}) {
        const EngineConfig cfg = base.with_half_width(L * angstrom);
        for (long n = 1; n <= 50; ++n) {
            if (!state_variance_valid(cfg, n)) continue;
            const DunklWilliamsRecord d = dunkl_williams_check(cfg, n);
            w.update(-d.slack / d.lhs, fmt("L=%g A, n=%ld", L, n));
        }
        for (double T : {run.T2_K, run.T1_K}) {
            if (thermal_averages(cfg, T).variance_x() <= 0.0) continue;
            const DunklWilliamsRecord d = dunkl_williams_check_thermal(cfg, T);
            w.update(-d.slack / d.lhs, fmt("L=%g A, T=%g K", L, T));
        }
    }
    CheckResult r = at_most("dunkl_williams_slack", w, 8 * eps);
    r.detail = "max relative deficit of rhs - lhs, " + r.detail;
    return r;
}

CheckResult bounds_translation(const RunConfig& run) {
    const EngineConfig cfg = run.engine().with_half_width(0.5 * angstrom);
    Worst w;
    const double ell = cfg.half_width_natural();
    for (double s : {-3.0 * ell, 0.5 * ell, 10.0 * ell}) {
        for (long n : {1L, 2L, 7L, 20L}) {
            const long N = default_basis_size(n);
            const double a = sum_variance_lower_bound(cfg, n, N, 0.0);
            const double b = sum_variance_lower_bound(cfg, n, N, s);
            w.update(rel_err(b, a, 0.0), fmt("lower bound, n=%ld, shift=%g", n, s));
            const double d0 = dunkl_williams_check(cfg, n, 0.0).lhs;
            const double d1 = dunkl_williams_check(cfg, n, s).lhs;
            w.update(rel_err(d1, d0, 0.0), fmt("Dunkl-Williams, n=%ld, shift=%g", n, s));
        }
    }
    CheckResult r = at_most("bounds_translation_invariance", w, 1e-9);
    return r;
}

CheckResult cycle_zero_work(const RunConfig& run) {
    const EngineConfig base = run.engine();
    Worst w;
    for (double L : {0.05, 0.5, 1.0, 100.0, 10000.0}) {
        const EngineConfig cfg = base.with_half_width(L * angstrom);
        for (double T : {10.0, 100.0, 1000.0}) {
            const CycleReport c = run_cycle(cfg, T, T);
            w.update(std::abs(c.W) / (cfg.constants().k_B * T), fmt("L=%g A, T=%g K", L, T));
        }
    }
    CheckResult r = at_most("cycle_zero_work_equal_temperatures", w, 1e-12);
    r.detail = "max |W|/(k_B T) at T1=T2, " + r.detail;
    return r;
}

CheckResult cycle_golden(const RunConfig& run) {
    const EngineConfig cfg = run.engine().with_half_width(0.5 * angstrom);
    const CycleReport c = run_cycle(cfg, 150.0, 100.0);
    CheckResult r;
    r.name = "cycle_golden_point";
    r.measured = c.efficiency;
    r.threshold = c.carnot;
    const bool ok = c.W > 0 && c.efficiency_defined && c.efficiency <= c.carnot * (1 + 4 * eps);
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = fmt("electron, 2L=1 A, 150 K / 100 K: W=%.6g J, eta - carnot = %.3g", c.W, c.efficiency - c.carnot);
    return r;
}

CheckResult cycle_shift(const RunConfig& run) {
    const EngineConfig base = run.engine();
    Worst w;
    for (double L : {0.5, 1.0, 10000.0}) {
        const EngineConfig cfg = base.with_half_width(L * angstrom);
        const CycleReport c0 = run_cycle(cfg, 150.0, 100.0);
        const double kT = cfg.constants().k_B * 150.0;
        for (double shift : {1e3 * kT, cfg.rest_energy(), -0.5 * cfg.rest_energy()}) {
            CycleOptions o;
            o.ensemble.energy_shift = shift;
            const CycleReport c1 = run_cycle(cfg, 150.0, 100.0, o);
            w.update(std::abs(c1.W - c0.W) / kT, fmt("W, L=%g A, shift=%g J", L, shift));
            w.update(std::abs(c1.efficiency - c0.efficiency), fmt("eta, L=%g A, shift=%g J", L, shift));
        }
    }
    CheckResult r = at_most("cycle_energy_shift_invariance", w, 1e-12);
    return r;
}

CheckResult cycle_bookkeeping(const RunConfig& run) {
    const EngineConfig base = run.engine();
    Worst w;
    for (double L : {0.5, 1.0, 100.0, 10000.0}) {
        const EngineConfig cfg = base.with_half_width(L * angstrom);
        const CycleReport c = run_cycle(cfg, 150.0, 100.0);
        const double kT = cfg.constants().k_B * 150.0;
        const double sum = c.Q_AB + c.Q_BC + c.Q_CD + c.Q_DA;
        w.update(std::abs(c.W - sum) / kT, fmt("W - sum Q, L=%g A", L));
        w.update(std::abs(c.efficiency - c.efficiency_alt), fmt("eta - eta_alt, L=%g A", L));
    }
    return at_most("cycle_heat_bookkeeping", w, 1e-12);
}

CheckResult configured_point(const RunConfig& run) {
    const EngineConfig cfg = run.engine();
    const double half_hbar = 0.5 * cfg.constants().hbar;
    double worst = std::numeric_limits<double>::infinity();
    for (double T : {run.T2_K, run.T1_K})
        worst = std::min(worst, uncertainty_report(cfg, T, Method::OracleSeries).product / half_hbar);
    const CycleReport c = run_cycle(cfg, run.T1_K, run.T2_K);
    CheckResult r;
    r.name = "configured_point";
    r.measured = worst;
    r.threshold = 1.0;
    const bool eta_ok = !c.efficiency_defined || c.efficiency <= c.carnot * (1 + 4 * eps) + 4 * eps;
    r.status = worst >= 1.0 && eta_ok ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = fmt("L=%g A: min dX*dP/(hbar/2), eta - carnot = %.3g", run.L_angstrom, c.efficiency - c.carnot);
    return r;
}

CheckResult erfc_reference(const RunConfig&) {
    Worst w;
    for (int i = 0; i < 10000; ++i) {
        const double x = -10.0 + 20.0 * i / 9999.0;
        w.update(rel_err(numerics::erfc(x), std::erfc(x), 0.0), fmt("x=%.17g", x));
    }
    CheckResult r = at_most("erfc_vs_libm", w, 1e-12);
    r.detail = "10^4 points on [-10, 10], " + r.detail;
    return r;
}

CheckResult erfc_identities(const RunConfig&) {
    Worst w;
    for (double x : linspace(0.0, 6.0, 601)) {
        w.update(std::abs(numerics::erfc(x) + numerics::erfc(-x) - 2.0) / 2.0, fmt("symmetry x=%g", x));
        w.update(std::abs(numerics::erf(x) + numerics::erfc(x) - 1.0), fmt("erf+erfc x=%g", x));
    }
    w.update(rel_err(numerics::erfc(1.0), 0.157299207050285130658779364917, 0.0), std::string("erfc(1)"));
    return at_most("erfc_identities", w, 4 * eps);
}

CheckResult gauss_overlap(const RunConfig& run) {
    const Tolerances tol = run.engine().tolerances();
    Worst w;
    for (double a : {2e-3, 5e-3, 1e-2, 2e-2, 5e-2}) {
        for (int k = 0; k <= 2; ++k) {
            const double d = numerics::gauss_sum_direct(a, k, tol).value;
            const double c = numerics::gauss_sum_accelerated(a, k, tol).value;
            w.update(rel_err(c, d, 0.0), fmt("a=%g, k=%d", a, k));
        }
    }
    CheckResult r = at_most("gauss_sum_direct_vs_accelerated", w, 1e-11);
    return r;
}

CheckResult kernel_agreement(const RunConfig& run) {
    const EngineConfig base = run.engine();
    Worst w;
    for (double ab : {1e-6, 1e-3, 1.0}) {
        const EngineConfig cfg = config_for_alpha_beta(base, ab, 150.0);
        for (Well well : {Well::Single, Well::Partitioned}) {
            const LevelSeries s{&cfg, well, SpectrumMode::Expanded, cfg.beta(150.0)};
            const LevelMoments a = level_moments_serial(s, cfg.tolerances());
            const LevelMoments b = level_moments_parallel(s, cfg.tolerances());
            const std::string where = fmt("alpha*beta=%g%s", ab, well == Well::Single ? " single" : " partitioned");
            w.update(rel_err(b.weight, a.weight, 0.0), where);
            w.update(rel_err(b.k2, a.k2, 0.0), where);
            w.update(rel_err(b.gap, a.gap, 1e-300), where);
        }
    }
    return at_most("kernel_parallel_vs_serial", w, 1e-12);
}

CheckResult derivatives(const RunConfig& run) {
    const EngineConfig base = run.engine();
    const UncertaintyOptions opts = uopts(run);
    const double k = base.constants().k_B;
    const double scale = base.tolerances().fd_step_scale;
    Worst w;
    for (double L : linspace(0.05, 1.0, 6)) {
        const EngineConfig cfg = base.with_half_width(L * angstrom);
        for (double T : {run.T2_K, run.T1_K}) {
            const double beta = 1.0 / (k * T);
            auto u_of = [&](double t) {
                return uncertainty_report(cfg, 1.0 / (k * beta * t), Method::PaperClosedForm, opts).sum_normalized;
            };
            // d/dt at t = 1 of u(beta t) = beta du/dbeta
            const double fd = numerics::central_diff(u_of, 1.0, scale) / beta;
            const double an = uncertainty_sum_beta_derivative(cfg, T, opts);
            w.update(rel_err(fd, an, 0.0), fmt("du/dbeta, L=%g A, T=%g K", L, T));
        }
    }
    const Tolerances tol = base.tolerances();
    for (double a : {1e-3, 1e-1, 2.0}) {
        auto s0 = [&](double t) { return numerics::gauss_sum(a * t, 0, tol).value; };
        const double fd = numerics::central_diff(s0, 1.0, scale) / a;
        w.update(rel_err(-fd, numerics::gauss_sum(a, 2, tol).value, 0.0), fmt("dS0/da, a=%g", a));
    }
    return at_most("analytic_vs_central_difference", w, 1e-6);
}

CheckResult dimensional(const RunConfig& run) {
    CheckResult r;
    r.name = "dimensional_consistency";
    if (run.paper_literal) {
        r.status = CheckStatus::Skipped;
        r.detail = "paper_literal momentum bracket adds 8 m c^2/hbar^2 (1/m^2) to a (kg m/s)^2 term; "
                   "not dimensionally consistent, check skipped";
        return r;
    }
    Worst w;
    const EngineConfig base = run.engine();
    for (double L : {0.05, 0.5, 1.0}) {
        const EngineConfig cfg = base.with_half_width(L * angstrom);
        const double ell = cfg.half_width_natural();
        for (double n : {0.01, 1.0, 3.0}) {
            const double mc = cfg.momentum_unit();
            const double nat = closed_variance_p(cfg, n) / (mc * mc);
            const double expect = pi * pi * pi * n * n / (8.0 * ell * ell) + 2.0;
            w.update(rel_err(nat, expect, 0.0), fmt("momentum bracket, L=%g A, n=%g", L, n));
        }
        const UncertaintyReport u = uncertainty_report(cfg, run.T2_K, Method::PaperClosedForm);
        const double expect = u.dx / cfg.compton_length() + u.dp / cfg.momentum_unit();
        w.update(rel_err(u.sum_normalized, expect, 0.0), fmt("dX+dP natural units, L=%g A", L));
    }
    r = at_most("dimensional_consistency", w, 1e-13);
    return r;
}

}  // namespace

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skipped: return "SKIPPED";
    }
    return "?";
}

bool VerifyReport::all_passed() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) return false;
    return true;
}

std::string VerifyReport::text() const {
    std::ostringstream os;
    int failed = 0;
    for (const auto& c : checks) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "measured=%.6g threshold=%.6g", c.measured, c.threshold);
        os << to_string(c.status) << "  " << c.name << "  " << buf << "  " << c.detail << '\n';
        if (c.status == CheckStatus::Fail) ++failed;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu checks, %d failed, %.2f s\n", checks.size(), failed, seconds);
    os << buf;
    if (failed) {
        os << "failing:";
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) os << ' ' << c.name;
        os << '\n';
    }
    return os.str();
}

const std::vector<NamedCheck>& verify_checks() {
    static const std::vector<NamedCheck> checks = {
        {"quantum_bound_grid", quantum_bound},
        {"closed_form_fidelity_Z", closed_form_z},
        {"closed_form_fidelity_U", closed_form_u},
        {"identities_direct_oracle", identities_oracle},
        {"identities_direct_paper", identities_paper},
        {"identities_uncertainty_mapped", identities_mapped},
        {"free_energy_prefactor_residual", prefactor_residual},
        {"bound_ordering_states", bound_ordering_states},
        {"bound_ordering_thermal", bound_ordering_thermal},
        {"dunkl_williams_slack", dunkl_williams_slack},
        {"bounds_translation_invariance", bounds_translation},
        {"cycle_zero_work_equal_temperatures", cycle_zero_work},
        {"cycle_golden_point", cycle_golden},
        {"cycle_energy_shift_invariance", cycle_shift},
        {"cycle_heat_bookkeeping", cycle_bookkeeping},
        {"configured_point", configured_point},
        {"erfc_vs_libm", erfc_reference},
        {"erfc_identities", erfc_identities},
        {"gauss_sum_direct_vs_accelerated", gauss_overlap},
        {"kernel_parallel_vs_serial", kernel_agreement},
        {"analytic_vs_central_difference", derivatives},
        {"dimensional_consistency", dimensional},
    };
    return checks;
}

CheckResult run_check(const NamedCheck& c, const RunConfig& run) {
    try {
        CheckResult r = c.run(run);
        if (std::isnan(r.measured)) {
            r.status = CheckStatus::Fail;
            r.detail = "NaN measured; " + r.detail;
        }
        return r;
    } catch (const Error& e) {
        CheckResult r;
        r.name = c.name;
        r.status = CheckStatus::Fail;
        r.measured = std::numeric_limits<double>::quiet_NaN();
        r.detail = e.what();
        return r;
    }
}

VerifyReport run_verify(const RunConfig& run) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    for (const auto& c : verify_checks()) rep.checks.push_back(run_check(c, run));
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace relqhe
