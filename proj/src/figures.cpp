#include "relqhe/figures.hpp"

#include <cmath>
#include <filesystem>
#include <limits>

#include "relqhe/errors.hpp"
#include "relqhe/parallel.hpp"
#include "relqhe/thermo_map.hpp"
#include "relqhe/uncertainty.hpp"

namespace relqhe {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

UncertaintyOptions uncertainty_options(const RunConfig& run) {
    UncertaintyOptions o;
    o.paper_literal = run.paper_literal;
    return o;
}

struct TL {
    double T;
    double L_angstrom;
};

std::vector<TL> two_temperature_grid(const RunConfig& run) {
    std::vector<TL> pts;
    const std::vector<double> Ls = run.grid.values();
    for (double T : {run.T2_K, run.T1_K})
        for (double L : Ls) pts.push_back({T, L});
    return pts;
}

Table fig1(const RunConfig& run) {
    Table t;
    t.header = {"T_K", "L_angstrom", "method", "validity", "dx_m", "dp_kg_m_s", "sum_uncertainty", "sum_oracle"};
    const EngineConfig base = run.engine();
    const auto pts = two_temperature_grid(run);
    const auto opts = uncertainty_options(run);
    t.rows = parallel_map<std::vector<Cell>>(pts.size(), [&](std::size_t i) {
        const EngineConfig cfg = base.with_half_width(pts[i].L_angstrom * angstrom);
        const UncertaintyReport r = uncertainty_report(cfg, pts[i].T, Method::PaperClosedForm, opts);
        const UncertaintyReport o = uncertainty_report(cfg, pts[i].T, Method::OracleSeries, opts);
        return std::vector<Cell>{pts[i].T, pts[i].L_angstrom, std::string("paper"),
                                 std::string(to_string(r.validity_flag)), r.dx, r.dp, r.sum_normalized,
                                 o.sum_normalized};
    });
    return t;
}

Table fig2(const RunConfig& run) {
    Table t;
    t.header = {"n_bar", "T_K", "L_angstrom", "method", "validity", "sum_uncertainty"};
    const EngineConfig base = run.engine();
    const std::vector<double> Ls = run.grid.values();
    const auto opts = uncertainty_options(run);
    const double T = run.T2_K;
    std::vector<std::pair<long, double>> pts;
    for (long n : {1L, 2L})
        for (double L : Ls) pts.emplace_back(n, L);
    t.rows = parallel_map<std::vector<Cell>>(pts.size(), [&](std::size_t i) {
        const EngineConfig cfg = base.with_half_width(pts[i].second * angstrom);
        const double u = sum_uncertainty_fixed_n(cfg, static_cast<double>(pts[i].first), T, opts);
        return std::vector<Cell>{pts[i].first, T, pts[i].second, std::string("paper"), std::string("valid"), u};
    });
    return t;
}

Table fig3(const RunConfig& run) {
    Table t;
    t.header = {"T_K", "L_angstrom", "method", "validity", "u_sum", "S_mapped_J_per_K", "S_oracle_J_per_K"};
    const EngineConfig base = run.engine();
    const auto pts = two_temperature_grid(run);
    const auto opts = uncertainty_options(run);
    t.rows = parallel_map<std::vector<Cell>>(pts.size(), [&](std::size_t i) {
        const EngineConfig cfg = base.with_half_width(pts[i].L_angstrom * angstrom);
        const ThermalState o = thermal_state(cfg, pts[i].T, Well::Single, Method::OracleSeries);
        const double s_oracle = o.entropy(cfg.constants().k_B);
        try {
            const UncertaintyMappedState m = mapped_state(cfg, pts[i].T, opts);
            return std::vector<Cell>{pts[i].T, pts[i].L_angstrom, std::string("paper"), std::string("valid"),
                                     m.u_sum, m.s_mapped, s_oracle};
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DomainError) throw;
            return std::vector<Cell>{pts[i].T, pts[i].L_angstrom, std::string("paper"), std::string("domain_error"),
                                     nan, nan, s_oracle};
        }
    });
    return t;
}

Table fig4(const RunConfig& run) {
    Table t;
    t.header = {"L_angstrom", "T1_K",     "T2_K",      "u_T1",          "u_T2",      "u_T1_lower",
                "u_T1_upper", "f_lower",  "f_upper",   "g_lower",       "g_upper",   "eta_lower",
                "eta_upper",  "eta_reference", "eta_cycle", "method", "validity", "construction"};
    UncertaintyCycleOptions opts;
    opts.z_method = run.method == Method::PaperClosedForm ? Method::PaperClosedForm : Method::OracleSeries;
    opts.uncertainty = uncertainty_options(run);
    std::vector<double> Ls;
    for (double L : run.grid.values()) Ls.push_back(L * angstrom);
    const EfficiencyBounds b = efficiency_bounds(run.engine(), run.T1_K, run.T2_K, Ls, opts);
    for (const auto& p : b.points) {
        t.rows.push_back({p.L / angstrom, p.T1, p.T2, p.u1, p.u2, p.u1_lower, p.u1_upper, p.f_lower, p.f_upper,
                          p.g_lower, p.g_upper, p.eta_lower, p.eta_upper, p.eta_reference, p.eta_cycle,
                          std::string(to_string(opts.z_method)),
                          std::string(p.weights_positive ? to_string(p.validity) : "negative_weight"),
                          std::string("compensated_bounds_minmax")});
    }
    return t;
}

}  // namespace

Table fig_table(int id, const RunConfig& run) {
    switch (id) {
        case 1: return fig1(run);
        case 2: return fig2(run);
        case 3: return fig3(run);
        case 4: return fig4(run);
    }
    throw Error(ErrorKind::BadParameter, "figure id must be 1..4");
}

PlotSpec fig_plot(int id) {
    switch (id) {
        case 1: return {"Sum uncertainty vs L", "L_angstrom", "sum_uncertainty", "T_K", {}};
        case 2: return {"Sum uncertainty vs L at fixed n", "L_angstrom", "sum_uncertainty", "n_bar", {}};
        case 3: return {"Entropy vs uncertainty sum", "u_sum", "S_mapped_J_per_K", "T_K", {}};
        case 4: return {"Efficiency bounds vs uncertainty", "u_T1", "eta_lower", "", {"eta_upper"}};
    }
    throw Error(ErrorKind::BadParameter, "figure id must be 1..4");
}

Table sweep_table(const RunConfig& run) {
    Table t;
    t.header = {"variable", "value", "L_angstrom", "T_K", "method", "validity", "dx_m", "dp_kg_m_s", "product_J_s",
                "product_over_half_hbar", "sum_uncertainty", "n_mean", "log_Z", "U_minus_mc2_J", "F_minus_mc2_J",
                "S_J_per_K"};
    const EngineConfig base = run.engine();
    const std::vector<double> xs = run.grid.values();
    const auto opts = uncertainty_options(run);
    const Method m = run.method;
    t.rows = parallel_map<std::vector<Cell>>(xs.size(), [&](std::size_t i) {
        const bool sweep_L = run.sweep_var == "L";
        const double L = sweep_L ? xs[i] : run.L_angstrom;
        const double T = sweep_L ? run.T1_K : xs[i];
        const EngineConfig cfg = base.with_half_width(L * angstrom);
        const double k_B = cfg.constants().k_B;
        const Method um = m == Method::CorrectedIntegral ? Method::PaperClosedForm : m;
        const UncertaintyReport r = uncertainty_report(cfg, T, um, opts);
        const ThermalState st = thermal_state(cfg, T, Well::Single, m);
        return std::vector<Cell>{run.sweep_var, xs[i], L, T, std::string(to_string(m)),
                                 std::string(to_string(r.validity_flag)), r.dx, r.dp, r.product,
                                 r.product / (0.5 * cfg.constants().hbar), r.sum_normalized,
                                 st.n_mean, st.log_z(), st.thermal_energy(), st.free_energy(k_B), st.entropy(k_B)};
    });
    return t;
}

Table cycle_table(const CycleReport& r, const UncertaintyEfficiency* mapped, double mapped_work) {
    Table t;
    t.header = {"quantity", "value"};
    auto add = [&](const std::string& k, double v) { t.rows.push_back({k, v}); };
    add("T1_K", r.T1);
    add("T2_K", r.T2);
    add("log_Z_A", r.log_Z_A);
    add("log_Z_B", r.log_Z_B);
    add("log_Z_C", r.log_Z_C);
    add("log_Z_D", r.log_Z_D);
    add("U_A_minus_mc2_J", r.A.thermal_energy());
    add("U_B_minus_mc2_J", r.B.thermal_energy());
    add("U_C_minus_mc2_J", r.C.thermal_energy());
    add("U_D_minus_mc2_J", r.D.thermal_energy());
    add("Q_AB_J", r.Q_AB);
    add("Q_BC_J", r.Q_BC);
    add("Q_CD_J", r.Q_CD);
    add("Q_DA_J", r.Q_DA);
    add("W_J", r.W);
    add("heat_in_J", r.heat_in);
    add("efficiency", r.efficiency);
    add("efficiency_alt", r.efficiency_alt);
    add("carnot", r.carnot);
    if (mapped) {
        add("W_uncertainty_J", mapped_work);
        add("eta_uncertainty", mapped->eta);
        add("eta_uncertainty_n_bar", mapped->eta_n_bar);
        add("f", mapped->f);
        add("g", mapped->g);
    }
    return t;
}

std::vector<std::string> write_table(const RunConfig& run, const std::string& stem, const Table& t,
                                     const PlotSpec* plot) {
    std::filesystem::create_directories(run.out_dir);
    std::vector<std::string> paths;
    const std::string csv = (std::filesystem::path(run.out_dir) / (stem + ".csv")).string();
    write_file(csv, to_csv(t));
    paths.push_back(csv);
    if (run.emit_svg && plot) {
        const std::string svg = (std::filesystem::path(run.out_dir) / (stem + ".svg")).string();
        write_file(svg, to_svg(t, *plot));
        paths.push_back(svg);
    }
    return paths;
}

}  // namespace relqhe
