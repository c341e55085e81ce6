// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 only on PASS.
//   acceptance --criterion N|verify [--cli path/to/relqhe]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "oracle/brute_force.hpp"
#include "oracle/mpfr_oracle.hpp"
#include "relqhe/bounds.hpp"
#include "relqhe/constants.hpp"
#include "relqhe/cycle.hpp"
#include "relqhe/ensemble.hpp"
#include "relqhe/numerics.hpp"
#include "relqhe/run_config.hpp"
#include "relqhe/spectrum.hpp"
#include "relqhe/thermo_map.hpp"
#include "relqhe/uncertainty.hpp"
#include "relqhe/verify.hpp"

namespace fs = std::filesystem;
using namespace relqhe;

namespace {

constexpr double pi = std::numbers::pi;

std::string cli_path = "relqhe";

struct Outcome {
    bool pass = true;
    std::vector<std::string> lines;

    void expect(bool ok, const std::string& what) {
        lines.push_back(std::string(ok ? "  ok    " : "  FAIL  ") + what);
        pass = pass && ok;
    }
};

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

std::vector<double> logspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a * std::pow(b / a, static_cast<double>(i) / (n - 1));
    return v;
}

EngineConfig electron(double L_angstrom) { return make_engine_config(electron_mass_kg, L_angstrom * angstrom); }

EngineConfig electron_at_alpha_beta(double ab, double T) {
    const PhysicalConstants k{};
    return make_engine_config(electron_mass_kg, pi * k.hbar / std::sqrt(8.0 * electron_mass_kg * ab * k.k_B * T));
}

fs::path scratch_dir(const std::string& tag) {
    fs::path p = fs::temp_directory_path() / ("relqhe_acceptance_" + std::to_string(::getpid()) + "_" + tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

int run_cli(const std::string& args) {
    const std::string cmd = "\"" + cli_path + "\" " + args + " > /dev/null 2>&1";
    const int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Csv {
    std::map<std::string, std::size_t> col;
    std::vector<std::vector<std::string>> rows;

    double d(std::size_t r, const std::string& c) const { return std::stod(rows[r][col.at(c)]); }
    const std::string& s(std::size_t r, const std::string& c) const { return rows[r][col.at(c)]; }
};

Csv read_csv(const fs::path& p) {
    Csv t;
    std::istringstream in(slurp(p));
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string c;
        while (std::getline(ls, c, ',')) cells.push_back(c);
        if (header) {
            for (std::size_t i = 0; i < cells.size(); ++i) t.col[cells[i]] = i;
            header = false;
        } else {
            t.rows.push_back(cells);
        }
    }
    return t;
}

// Rows of one temperature, kept in file order (increasing L).
std::vector<std::size_t> rows_at(const Csv& t, double T) {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.d(i, "T_K") == T) r.push_back(i);
    return r;
}

Outcome quantum_bound() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto Ls = linspace(0.05, 1.0, 40);
    const auto Ts = logspace(10.0, 1000.0, 40);
    double worst = 1e300, worst_bf = 1e300, agree = 0.0;
    long violations = 0;
    for (double L : Ls) {
        const EngineConfig cfg = electron(L);
        const double half_hbar = 0.5 * cfg.constants().hbar;
        for (double T : Ts) {
            const UncertaintyReport r = uncertainty_report(cfg, T, Method::OracleSeries);
            const double q = r.product / half_hbar;
            worst = std::min(worst, q);
            if (!(q >= 1.0)) ++violations;

            // independent: level moments averaged with brute-force Boltzmann weights
            const long double ab = cfg.alpha() / (cfg.constants().k_B * T);
            const long double xm = oracle::level_average(ab, 1, [&](long n) { return level(n, cfg).x_mean; });
            const long double x2 = oracle::level_average(ab, 1, [&](long n) { return level(n, cfg).x2_mean; });
            const long double p2 = oracle::level_average(ab, 1, [&](long n) { return level(n, cfg).p2_mean; });
            const double bf = static_cast<double>(std::sqrt((x2 - xm * xm) * p2)) / half_hbar;
            worst_bf = std::min(worst_bf, bf);
            agree = std::max(agree, std::abs(bf - q) / q);
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(violations == 0, "library oracle dX*dP >= hbar/2 on 40 x 40 points, violations=" +
                                  std::to_string(violations) + ", min ratio " + num(worst));
    o.expect(worst_bf >= 1.0, "brute-force dX*dP >= hbar/2, min ratio " + num(worst_bf));
    o.expect(agree < 1e-9, "library vs brute force, max relative difference " + num(agree));
    o.expect(secs < 5.0, "runtime " + num(secs) + " s < 5 s");
    return o;
}

Outcome fidelity() {
    Outcome o;
    const auto abs = logspace(1e-8, 1e-2, 40);
    const double T = 150.0;
    double worst = 0.0, oracle_gap = 0.0;
    std::string where;
    for (double ab : abs) {
        const EngineConfig cfg = electron_at_alpha_beta(ab, T);
        const double z_bf = static_cast<double>(oracle::gauss_sum(ab, 0));
        const double z_paper = std::exp(partition(cfg, T, Well::Single, Method::PaperClosedForm).log_z);
        const double z_lib = std::exp(partition(cfg, T, Well::Single, Method::OracleSeries).log_z);
        const double ratio = (std::abs(z_paper - z_bf) / z_bf) / (1.1 * std::sqrt(ab / pi));
        if (ratio > worst) {
            worst = ratio;
            where = num(ab);
        }
        oracle_gap = std::max(oracle_gap, std::abs(z_lib - z_bf) / z_bf);
    }
    o.expect(worst <= 1.0, "|Z_closed - Z_bf|/Z_bf / (1.1 sqrt(ab/pi)) max " + num(worst) + " at ab=" + where);
    o.expect(oracle_gap < 1e-10, "library series vs brute force, max relative " + num(oracle_gap));
    return o;
}

Outcome from_verify(const std::vector<std::string>& names) {
    Outcome o;
    RunConfig run;
    for (const auto& c : verify_checks()) {
        if (std::find(names.begin(), names.end(), c.name) == names.end()) continue;
        const CheckResult r = run_check(c, run);
        o.expect(r.status == CheckStatus::Pass,
                 c.name + " measured=" + num(r.measured) + " threshold=" + num(r.threshold) + "  " + r.detail);
    }
    return o;
}

Outcome identities() {
    Outcome o = from_verify({"identities_direct_oracle", "identities_direct_paper", "identities_uncertainty_mapped",
                             "free_energy_prefactor_residual"});
    // direct forms against brute-force level sums, wide wells only (many levels populated)
    double worst = 0.0;
    for (double L : {30.0, 300.0, 3000.0}) {
        const EngineConfig cfg = electron(L);
        for (double T : {10.0, 100.0, 1000.0}) {
            const double kT = cfg.constants().k_B * T;
            const long double ab = cfg.alpha() / kT;
            const long double n2 = oracle::level_average(ab, 1, [](long n) { return static_cast<long double>(n) * n; });
            const double excess = static_cast<double>(cfg.alpha() * (n2 - 1.0L));
            const double lib = thermal_energy(cfg, T, Well::Single) - cfg.alpha();
            worst = std::max(worst, std::abs(lib - excess) / std::max(std::abs(excess), 1e-6 * kT));
        }
    }
    o.expect(worst < 1e-6, "U - ground vs brute-force level average, max relative " + num(worst));
    return o;
}

Outcome bound_ordering() {
    Outcome o;
    long checked = 0, bad_lower = 0, bad_upper = 0;
    std::string first;
    for (double L : linspace(0.05, 1.0, 20)) {
        const EngineConfig cfg = electron(L);
        for (long n = 1; n <= 50; ++n) {
            if (!state_variance_valid(cfg, n)) continue;
            const BoundPair b = state_bounds(cfg, n);
            const double v = state_variance_sum(cfg, n);
            ++checked;
            const bool lo = b.lower <= v * (1.0 + 1e-12);
            const bool up = v <= b.upper * (1.0 + 1e-12);
            if (!lo) ++bad_lower;
            if (!up) ++bad_upper;
            if ((!lo || !up) && first.empty()) first = "L=" + num(L) + " A, n=" + std::to_string(n);
        }
    }
    o.expect(bad_lower + bad_upper == 0, "states n=1..50 on 20 L values: " + std::to_string(checked) +
                                             " checked, lower violations " + std::to_string(bad_lower) +
                                             ", reverse violations " + std::to_string(bad_upper) +
                                             (first.empty() ? "" : ", first at " + first));
    long tchecked = 0, tbad = 0;
    for (double L : linspace(0.05, 1.0, 20))
        for (double T : logspace(10.0, 1000.0, 20)) {
            const BoundPair b = thermal_bounds(electron(L), T);
            if (!b.valid) continue;
            ++tchecked;
            if (!(b.lower <= b.measured * (1.0 + 1e-12) && b.measured <= b.upper * (1.0 + 1e-12))) ++tbad;
        }
    o.expect(tbad == 0, "thermal points: " + std::to_string(tchecked) + " checked, violations " + std::to_string(tbad));
    return o;
}

Outcome cycle() {
    Outcome o;
    double w_equal = 0.0;
    for (double L : {0.3, 1.0, 30.0, 3000.0})
        for (double T : {10.0, 150.0, 1000.0}) {
            const EngineConfig cfg = electron(L);
            w_equal = std::max(w_equal, std::abs(run_cycle(cfg, T, T).W) / (cfg.constants().k_B * T));
        }
    o.expect(w_equal <= 1e-12, "|W|/kT at T1 = T2, max " + num(w_equal));

    const EngineConfig g = electron(0.5);
    const CycleReport r = run_cycle(g, 150.0, 100.0);
    o.expect(r.W > 0.0, "golden point W = " + num(r.W) + " J > 0");
    const double carnot = 1.0 - 100.0 / 150.0;
    o.expect(r.efficiency <= carnot + 4.0 * std::numeric_limits<double>::epsilon(),
             "golden point eta = " + num(r.efficiency) + " <= Carnot " + num(carnot));

    double dw = 0.0, deta = 0.0;
    for (double shift : {1e-25, g.rest_energy(), -0.5 * g.rest_energy()}) {
        CycleOptions opt;
        opt.ensemble.energy_shift = shift;
        const CycleReport s = run_cycle(g, 150.0, 100.0, opt);
        dw = std::max(dw, std::abs(s.W - r.W) / (g.constants().k_B * 150.0));
        deta = std::max(deta, std::abs(s.efficiency - r.efficiency));
    }
    o.expect(dw <= 1e-12 && deta <= 1e-12, "energy shift: |dW|/kT " + num(dw) + ", |d eta| " + num(deta));
    return o;
}

Outcome figure_shapes() {
    Outcome o;
    const fs::path dir = scratch_dir("shapes");
    for (int id : {1, 3, 4}) {
        const int st = run_cli("fig --id " + std::to_string(id) + " --out-dir \"" + dir.string() + "\"");
        if (st != 0) {
            o.expect(false, "relqhe fig --id " + std::to_string(id) + " exit status " + std::to_string(st));
            return o;
        }
    }

    const Csv f1 = read_csv(dir / "fig1.csv");
    std::map<double, std::vector<std::size_t>> by_T;
    for (double T : {100.0, 300.0}) by_T[T] = rows_at(f1, T);
    for (auto& [T, rows] : by_T) {
        double lo = 1e300, hi = -1e300, at03 = 0.0, after = -1e300;
        for (std::size_t i : rows) {
            const double L = f1.d(i, "L_angstrom"), s = f1.d(i, "sum_uncertainty");
            if (L <= 0.3 + 1e-9) {
                lo = std::min(lo, s);
                hi = std::max(hi, s);
                at03 = s;
            } else {
                after = std::max(after, s);
            }
        }
        const double mid = f1.d(rows.back(), "sum_uncertainty");
        o.expect((hi - lo) / std::abs(lo) < 1e-3,
                 "fig1 T=" + num(T) + " K: relative spread for L <= 0.3 A is " + num((hi - lo) / std::abs(lo)));
        o.expect(mid < at03 * (1.0 - 1e-3) && after <= at03,
                 "fig1 T=" + num(T) + " K: drop past 0.3 A, sum at 0.3 A " + num(at03) + ", at end " + num(mid) +
                     ", max after " + num(after));
    }
    {
        const auto& a = by_T[100.0];
        const auto& b = by_T[300.0];
        int sign = 0;
        bool consistent = a.size() == b.size();
        for (std::size_t k = 0; consistent && k < a.size(); ++k) {
            const double d = f1.d(a[k], "sum_uncertainty") - f1.d(b[k], "sum_uncertainty");
            const int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
            if (s == 0 || (sign != 0 && s != sign)) consistent = false;
            sign = s;
        }
        o.expect(consistent, std::string("fig1 temperature curves keep one order, 100 K ") +
                                 (sign > 0 ? "above" : "below") + " 300 K");
    }

    const Csv f3 = read_csv(dir / "fig3.csv");
    for (double T : {100.0, 300.0}) {
        auto rows = rows_at(f3, T);
        std::sort(rows.begin(), rows.end(),
                  [&](std::size_t x, std::size_t y) { return f3.d(x, "u_sum") < f3.d(y, "u_sum"); });
        long breaks = 0;
        for (std::size_t k = 1; k < rows.size(); ++k)
            if (!(f3.d(rows[k], "S_mapped_J_per_K") > f3.d(rows[k - 1], "S_mapped_J_per_K"))) ++breaks;
        o.expect(breaks == 0, "fig3 T=" + num(T) + " K: S strictly increasing in u, " + std::to_string(breaks) +
                                  " non-increasing steps of " + std::to_string(rows.size() - 1));
    }

    const Csv f4 = read_csv(dir / "fig4.csv");
    std::vector<std::size_t> rows(f4.rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    std::sort(rows.begin(), rows.end(), [&](std::size_t x, std::size_t y) { return f4.d(x, "u_T1") < f4.d(y, "u_T1"); });
    long up_rises = 0, ordered = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (f4.d(rows[k], "eta_lower") <= f4.d(rows[k], "eta_upper")) ++ordered;
        if (k > 0 && !(f4.d(rows[k], "eta_upper") < f4.d(rows[k - 1], "eta_upper"))) ++up_rises;
    }
    o.expect(up_rises == 0, "fig4 eta_upper decreasing in u, " + std::to_string(up_rises) + " non-decreasing steps");

    // near-flat first half, then a dip below the flat level
    const std::size_t half = rows.size() / 2;
    double lo1 = 1e300, hi1 = -1e300, tail_min = 1e300;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const double e = f4.d(rows[k], "eta_lower");
        if (k < half) {
            lo1 = std::min(lo1, e);
            hi1 = std::max(hi1, e);
        } else {
            tail_min = std::min(tail_min, e);
        }
    }
    const double flat = hi1 - lo1, dip = lo1 - tail_min;
    o.expect(dip > 2.0 * flat && dip > 0.0,
             "fig4 eta_lower flat then dipping: first-half spread " + num(flat) + ", dip after " + num(dip));

    const double gap0 = f4.d(rows.front(), "eta_upper") - f4.d(rows.front(), "eta_lower");
    const double gap1 = f4.d(rows.back(), "eta_upper") - f4.d(rows.back(), "eta_lower");
    o.expect(std::abs(gap1) < std::abs(gap0),
             "fig4 gap shrinks toward high u: " + num(std::abs(gap0)) + " -> " + num(std::abs(gap1)));
    o.expect(ordered == static_cast<long>(rows.size()), "fig4 eta_lower <= eta_upper on " + std::to_string(ordered) +
                                                            " of " + std::to_string(rows.size()) + " rows");
    fs::remove_all(dir);
    return o;
}

Outcome numerics_check() {
    Outcome o;
    double worst = 0.0, at = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const double x = -10.0 + 20.0 * i / (n - 1);
        const double e = std::abs(numerics::erfc(x) - oracle::erfc_mp(x)) / oracle::erfc_mp(x);
        if (e > worst) {
            worst = e;
            at = x;
        }
    }
    o.expect(worst <= 1e-12, "erfc vs MPFR on 1e4 points in [-10, 10], max relative " + num(worst) + " at x=" + num(at));

    // dU/dT (heat capacity from the analytic energy) vs central difference, and du/dbeta
    double dworst = 0.0;
    for (double L : {0.3, 30.0, 3000.0}) {
        const EngineConfig cfg = electron(L);
        for (double T : {50.0, 300.0}) {
            const double kB = cfg.constants().k_B;
            const double beta = 1.0 / (kB * T);
            auto log_z = [&](double b) { return partition(cfg, 1.0 / (kB * b), Well::Single).log_z; };
            const double h = 1e-4 * beta;
            const double fd = -(log_z(beta + h) - log_z(beta - h)) / (2.0 * h);
            const double U = internal_energy(cfg, T, Well::Single) - cfg.rest_energy();
            dworst = std::max(dworst, std::abs(fd - U) / std::abs(U));

            auto u = [&](double b) { return uncertainty_report(cfg, 1.0 / (kB * b)).sum_normalized; };
            const double fdu = (u(beta + h) - u(beta - h)) / (2.0 * h);
            const double an = uncertainty_sum_beta_derivative(cfg, T);
            dworst = std::max(dworst, std::abs(fdu - an) / std::max(std::abs(an), 1e-300));
        }
    }
    o.expect(dworst <= 1e-6, "analytic vs central-difference derivatives, max relative " + num(dworst));
    Outcome v = from_verify({"analytic_vs_central_difference"});
    for (auto& l : v.lines) o.lines.push_back(l);
    o.pass = o.pass && v.pass;
    return o;
}

Outcome determinism() {
    Outcome o;
    const fs::path a = scratch_dir("det_a"), b = scratch_dir("det_b");
    const int sa = run_cli("fig --id 2 --out-dir \"" + a.string() + "\"");
    const int sb = run_cli("fig --id 2 --out-dir \"" + b.string() + "\"");
    o.expect(sa == 0 && sb == 0, "relqhe fig --id 2 exit status " + std::to_string(sa) + ", " + std::to_string(sb));
    const std::string ca = slurp(a / "fig2.csv"), cb = slurp(b / "fig2.csv");
    o.expect(!ca.empty() && ca == cb, "two runs byte-identical (" + std::to_string(ca.size()) + " bytes)");
    o.expect(ca == slurp(fs::path(RELQHE_GOLDEN_DIR) / "fig2.csv"), "matches the frozen golden fig2.csv");
    fs::remove_all(a);
    fs::remove_all(b);
    return o;
}

Outcome verify_runtime() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const int st = run_cli("verify");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(st == 0, "relqhe verify exit status " + std::to_string(st));
    o.expect(secs < 60.0, "relqhe verify took " + num(secs) + " s < 60 s");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> ids;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) {
            ids.push_back(argv[++i]);
        } else if (a == "--cli" && i + 1 < argc) {
            cli_path = argv[++i];
        } else {
            std::cerr << "usage: acceptance [--criterion 1..8|verify|all]... [--cli path]\n";
            return 2;
        }
    }
    const std::map<std::string, std::pair<std::string, std::function<Outcome()>>> table = {
        {"1", {"quantum bound on the L x T grid", quantum_bound}},
        {"2", {"closed-form partition function fidelity", fidelity}},
        {"3", {"thermodynamic identities", identities}},
        {"4", {"bound ordering", bound_ordering}},
        {"5", {"cycle sanity", cycle}},
        {"6", {"figure shapes", figure_shapes}},
        {"7", {"numerics", numerics_check}},
        {"8", {"determinism of fig --id 2", determinism}},
        {"verify", {"verify exit status and runtime", verify_runtime}},
    };
    if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
        ids.clear();
        for (const auto& [k, v] : table) ids.push_back(k);
    }
    bool all = true;
    for (const auto& id : ids) {
        const auto it = table.find(id);
        if (it == table.end()) {
            std::cerr << "unknown criterion " << id << "\n";
            return 2;
        }
        Outcome o;
        try {
            o = it->second.second();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        for (const auto& l : o.lines) std::cout << l << "\n";
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << it->second.first << "\n";
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
