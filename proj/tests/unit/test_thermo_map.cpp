#include "goldens.hpp"
#include "support.hpp"

#include "relqhe/ensemble.hpp"
#include "relqhe/numerics.hpp"
#include "relqhe/thermo_map.hpp"
#include "relqhe/uncertainty.hpp"

using namespace relqhe;
using support::kind_of;
using support::rel;

TEST_CASE("mapping constant") {
    CHECK(rel(mapping_constant(), 16.0 * std::sqrt(2.0) / std::pow(support::pi, 3)) < 1e-15);
}

TEST_CASE("compensator golden and structure") {
    CHECK(rel(c_t(support::electron(0.3), 100.0), golden::c_t_03A_100K) < 1e-12);
    for (double T : {100.0, 300.0}) {
        const EngineConfig cfg = support::electron(0.3);
        const CompensatorTerm t = compensator(cfg, T);
        const double n = closed_form_n_bar(cfg, T);
        CHECK(rel(t.n2_over_k, n * n / mapping_constant()) < 1e-15);
        CHECK(t.u_ref == uncertainty_report(cfg, T).sum_normalized);
    }
}

TEST_CASE("partition round trip through the uncertainty map") {
    for (double L : {0.05, 0.3, 1.0, 1e3}) {
        const EngineConfig cfg = support::electron(L);
        for (double T : {100.0, 300.0}) {
            const UncertaintyReport r = uncertainty_report(cfg, T);
            const double z = partition_from_uncertainty(cfg, T, r.dx, r.dp);
            const double ref = std::exp(partition(cfg, T, Well::Single, Method::PaperClosedForm).log_z);
            CHECK(rel(z, ref) < 1e-12);
            // larger uncertainty, larger Z
            CHECK(partition_from_uncertainty(cfg, T, r.dx * 1.001, r.dp) > z);
        }
    }
    const EngineConfig cfg = support::electron(0.3);
    CHECK(kind_of([&] { partition_from_uncertainty(cfg, 100.0, 1e-20, 1e-30); }) == ErrorKind::DomainError);
}

TEST_CASE("mapped partition function against the oracle") {
    for (double ab : {1e-6, 1e-4, 1e-2}) {
        const EngineConfig cfg = support::electron_at_alpha_beta(ab, 150.0);
        const UncertaintyMappedState m = mapped_state(cfg, 150.0);
        const double o = partition(cfg, 150.0, Well::Single).log_z;
        CHECK(std::abs(std::expm1(m.log_z_mapped - o)) <= 1.1 * std::sqrt(ab / support::pi));
    }
}

TEST_CASE("mapped energies and identities") {
    for (double L : {0.05, 0.5, 30.0, 3e3}) {
        const EngineConfig cfg = support::electron(L);
        const double k = cfg.constants().k_B;
        for (double T : {100.0, 300.0}) {
            const UncertaintyMappedState m = mapped_state(cfg, T);
            CHECK(rel(m.thermal_energy, 0.5 * k * T) < 1e-9);
            CHECK(rel(internal_energy_from_uncertainty(cfg, T), cfg.rest_energy() + 0.5 * k * T) < 1e-15);
            CHECK(m.u_mapped - cfg.rest_energy() == doctest::Approx(m.thermal_energy).epsilon(1e-3));
            CHECK(std::abs(m.prefactor_log_residual) < 1e-12);
            CHECK(rel(m.s_mapped, (m.thermal_energy - m.free_energy) / T) < 1e-9);
            if (m.s_mapped >= 0.0) CHECK(m.free_energy <= m.thermal_energy);
            auto F = [&](double t) { return mapped_state(cfg, t).free_energy; };
            CHECK(rel(-numerics::central_diff(F, T), m.s_mapped) < 1e-6);
            CHECK(entropy_from_uncertainty(cfg, T) == m.s_mapped);
            CHECK(helmholtz_from_uncertainty(cfg, T) == m.f_mapped);
        }
    }
}

TEST_CASE("small alpha*beta: the logarithm dominates the entropy") {
    const EngineConfig cfg = support::electron_at_alpha_beta(1e-8, 150.0);
    const UncertaintyMappedState m = mapped_state(cfg, 150.0);
    const double k = cfg.constants().k_B;
    CHECK(k * m.log_z_mapped > 5.0 * std::abs(m.s_mapped - k * m.log_z_mapped));
}

TEST_CASE("free energy falls as the uncertainty sum grows") {
    const EngineConfig cfg = support::electron(0.5);
    const double T = 200.0;
    const UncertaintyReport r = uncertainty_report(cfg, T);
    const double kT = cfg.constants().k_B * T;
    const double f0 = -kT * std::log(partition_from_uncertainty(cfg, T, r.dx, r.dp));
    const double f1 = -kT * std::log(partition_from_uncertainty(cfg, T, r.dx * 1.01, r.dp));
    CHECK(f1 < f0);
}

TEST_CASE("analytic uncertainty-sum derivative") {
    const EngineConfig cfg = support::electron(0.5);
    const double k = cfg.constants().k_B;
    for (double T : {100.0, 300.0}) {
        const double beta = 1.0 / (k * T);
        auto u = [&](double t) { return uncertainty_report(cfg, 1.0 / (k * beta * t)).sum_normalized; };
        CHECK(rel(numerics::central_diff(u, 1.0) / beta, uncertainty_sum_beta_derivative(cfg, T)) < 1e-6);
    }
}

TEST_CASE("printed auxiliaries are kept as diagnostics") {
    const EngineConfig cfg = support::electron(0.3);
    const LiteralAuxiliaries a = literal_auxiliaries(cfg, 100.0);
    CHECK(a.c_t == c_t_literal(cfg, 100.0));
    CHECK(std::isfinite(a.c_t));
    CHECK_FALSE(a.defined);
    CHECK(a.radicand < 0.0);
}
