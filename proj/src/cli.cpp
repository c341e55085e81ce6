#include "relqhe/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "relqhe/cycle.hpp"
#include "relqhe/errors.hpp"
#include "relqhe/figures.hpp"
#include "relqhe/verify.hpp"

namespace relqhe {

CliOutcome parse_cli(int argc, const char* const* argv) {
    CLI::App app{"Relativistic particle-in-a-box thermodynamics and Stirling engine"};
    app.require_subcommand(1);

    std::string config_path;
    RunConfigOverrides flags;
    double mass = 0, L = 0, T1 = 0, T2 = 0, from = 0, to = 0, rel_tol = 0;
    int steps = 0;
    std::size_t max_terms = 0;
    bool log_scale = false, linear_scale = false, paper_literal = false, svg = false;
    std::string method, out_dir;

    app.add_option("--config", config_path, "key = value config file");
    auto* o_mass = app.add_option("--mass-kg", mass, "particle mass, kg");
    auto* o_L = app.add_option("--L", L, "well half-width, Angstrom");
    auto* o_T1 = app.add_option("--T1", T1, "hot bath temperature, K");
    auto* o_T2 = app.add_option("--T2", T2, "cold bath temperature, K");
    auto* o_from = app.add_option("--from", from, "grid start");
    auto* o_to = app.add_option("--to", to, "grid end");
    auto* o_steps = app.add_option("--steps", steps, "grid points");
    app.add_flag("--log", log_scale, "logarithmic grid");
    app.add_flag("--linear", linear_scale, "linear grid");
    auto* o_method = app.add_option("--method", method, "oracle | paper | corrected");
    app.add_flag("--paper-literal", paper_literal, "literal SI momentum bracket");
    auto* o_out = app.add_option("--out-dir", out_dir, "output directory");
    app.add_flag("--svg", svg, "also write SVG plots");
    auto* o_terms = app.add_option("--series-max-terms", max_terms, "level-sum term cap");
    auto* o_tol = app.add_option("--series-rel-tol", rel_tol, "level-sum relative tolerance");

    int fig_id = 0;
    std::string sweep_var = "L";
    auto* fig = app.add_subcommand("fig", "reproduce a figure as CSV");
    fig->add_option("--id", fig_id, "figure number")->required()->check(CLI::Range(1, 4));
    auto* cycle = app.add_subcommand("cycle", "evaluate the Stirling cycle at T1, T2");
    auto* sweep = app.add_subcommand("sweep", "thermal and uncertainty quantities over a grid");
    sweep->add_option("--var", sweep_var, "L or T")->check(CLI::IsMember({"L", "T"}));
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    for (auto* sub : {fig, cycle, sweep, verify}) sub->fallthrough();

    CliOutcome out;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out.message = app.help();
        return out;
    } catch (const CLI::CallForAllHelp&) {
        out.message = app.help("", CLI::AppFormatMode::All);
        return out;
    } catch (const CLI::ParseError& e) {
        out.message = std::string(e.get_name()) + ": " + e.what() + "\n" + app.help();
        out.exit_code = e.get_exit_code();
        return out;
    }

    if (log_scale && linear_scale) throw Error(ErrorKind::ConflictingFlags, "--log and --linear are exclusive");
    if (*o_mass) flags.mass_kg = mass;
    if (*o_L) flags.L_angstrom = L;
    if (*o_T1) flags.T1_K = T1;
    if (*o_T2) flags.T2_K = T2;
    if (*o_from) flags.grid_from = from;
    if (*o_to) flags.grid_to = to;
    if (*o_steps) flags.grid_steps = steps;
    if (log_scale) flags.grid_scale = GridScale::Log;
    if (linear_scale) flags.grid_scale = GridScale::Linear;
    if (*o_method) flags.method = parse_method(method);
    if (paper_literal) flags.paper_literal = true;
    if (*o_out) flags.out_dir = out_dir;
    if (*o_terms) flags.series_max_terms = max_terms;
    if (*o_tol) flags.series_rel_tol = rel_tol;

    const std::string text = config_path.empty() ? std::string() : read_text_file(config_path);
    RunConfig run = merge_config(text, flags);
    run.emit_svg = svg;
    if (fig->parsed()) {
        run.command = Command::Fig;
        run.fig_id = fig_id;
    } else if (cycle->parsed()) {
        run.command = Command::Cycle;
    } else if (sweep->parsed()) {
        run.command = Command::Sweep;
        run.sweep_var = sweep_var;
    } else {
        run.command = Command::Verify;
    }
    validate(run);
    out.run = run;
    return out;
}

namespace {

void print_paths(const std::vector<std::string>& paths, std::ostream& out) {
    for (const auto& p : paths) out << "wrote " << p << '\n';
}

}  // namespace

int execute(const RunConfig& run, std::ostream& out) {
    switch (run.command) {
        case Command::Verify: {
            const VerifyReport rep = run_verify(run);
            out << rep.text();
            return rep.all_passed() ? 0 : 1;
        }
        case Command::Fig: {
            check_output_dir(run.out_dir);
            const Table t = fig_table(run.fig_id, run);
            const PlotSpec plot = fig_plot(run.fig_id);
            print_paths(write_table(run, "fig" + std::to_string(run.fig_id), t, &plot), out);
            return 0;
        }
        case Command::Sweep: {
            check_output_dir(run.out_dir);
            const Table t = sweep_table(run);
            const PlotSpec plot{"Sweep over " + run.sweep_var, "value", "sum_uncertainty", "", {}};
            print_paths(write_table(run, "sweep", t, &plot), out);
            return 0;
        }
        case Command::Cycle: {
            check_output_dir(run.out_dir);
            const EngineConfig cfg = run.engine();
            CycleOptions co;
            co.method = run.method;
            const CycleReport c = run_cycle(cfg, run.T1_K, run.T2_K, co);
            UncertaintyCycleOptions uo;
            uo.z_method = run.method == Method::PaperClosedForm ? Method::PaperClosedForm : Method::OracleSeries;
            uo.uncertainty.paper_literal = run.paper_literal;
            std::optional<UncertaintyEfficiency> mapped;
            double mapped_work = 0;
            try {
                mapped = efficiency_from_uncertainty_detail(cfg, run.T1_K, run.T2_K, uo);
                mapped_work = work_from_uncertainty(cfg, run.T1_K, run.T2_K, uo);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::DegenerateDenominator && e.kind() != ErrorKind::DomainError) throw;
                out << "uncertainty-form efficiency undefined: " << e.what() << '\n';
                mapped.reset();
            }
            const Table t = cycle_table(c, mapped ? &*mapped : nullptr, mapped_work);
            out << to_csv(t);
            print_paths(write_table(run, "cycle", t, nullptr), out);
            return 0;
        }
    }
    return 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        const CliOutcome parsed = parse_cli(argc, argv);
        if (!parsed.run) {
            (parsed.exit_code == 0 ? out : err) << parsed.message;
            return parsed.exit_code;
        }
        return execute(*parsed.run, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace relqhe
