#include "support.hpp"

#include <filesystem>
#include <sstream>
#include <vector>

#include "relqhe/cli.hpp"
#include "relqhe/figures.hpp"
#include "relqhe/verify.hpp"

using namespace relqhe;
using support::kind_of;

namespace {

namespace fs = std::filesystem;

CliOutcome parse(std::vector<std::string> args) {
    args.insert(args.begin(), "relqhe");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    return parse_cli(static_cast<int>(argv.size()), argv.data());
}

int run(std::vector<std::string> args, std::string* out_text = nullptr) {
    args.insert(args.begin(), "relqhe");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str() + err.str();
    return rc;
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("relqhe_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("command line parsing") {
    const CliOutcome a = parse({"fig", "--id", "2", "--L", "0.4"});
    REQUIRE(a.run);
    CHECK(a.run->command == Command::Fig);
    CHECK(a.run->fig_id == 2);
    CHECK(a.run->L_angstrom == 0.4);

    const CliOutcome b = parse({"sweep", "--var", "T", "--from", "10", "--to", "1000", "--steps", "5", "--log"});
    REQUIRE(b.run);
    CHECK(b.run->sweep_var == "T");
    CHECK(b.run->grid.scale == GridScale::Log);
    CHECK(b.run->grid.steps == 5);

    CHECK(kind_of([] { parse({"sweep", "--log", "--linear"}); }) == ErrorKind::ConflictingFlags);
    CHECK(kind_of([] { parse({"cycle", "--T1", "-5"}); }) == ErrorKind::NonPositiveParameter);

    const CliOutcome bad = parse({"fig", "--id", "7"});
    CHECK_FALSE(bad.run);
    CHECK(bad.exit_code != 0);
    CHECK_FALSE(parse({}).run);
    const CliOutcome help = parse({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.message.find("verify") != std::string::npos);
}

TEST_CASE("flags override the config file") {
    const fs::path dir = scratch("config");
    const fs::path cfg = dir / "run.cfg";
    write_file(cfg.string(), "L_angstrom = 0.3\nT1_K = 150\nT2_K = 100\nmethod = paper\n");
    const CliOutcome a = parse({"cycle", "--config", cfg.string(), "--T1", "400"});
    REQUIRE(a.run);
    CHECK(a.run->T1_K == 400);
    CHECK(a.run->T2_K == 100);
    CHECK(a.run->L_angstrom == 0.3);
    CHECK(a.run->method == Method::PaperClosedForm);
    const fs::path empty = dir / "empty.cfg";
    write_file(empty.string(), "");
    const CliOutcome f = parse({"cycle", "--config", empty.string(), "--L", "0.3", "--T1", "150", "--T2", "100",
                                "--method", "paper"});
    const CliOutcome g = parse({"cycle", "--config", cfg.string()});
    REQUIRE(f.run);
    REQUIRE(g.run);
    CHECK(*f.run == *g.run);
    CHECK(kind_of([&] { parse({"cycle", "--config", (dir / "missing.cfg").string()}); }) == ErrorKind::BadParameter);
}

TEST_CASE("fig 2 matches the committed golden byte for byte") {
    const fs::path dir = scratch("fig2");
    REQUIRE(run({"fig", "--id", "2", "--out-dir", dir.string()}) == 0);
    const std::string now = read_text_file((dir / "fig2.csv").string());
    const std::string golden = read_text_file(std::string(RELQHE_GOLDEN_DIR) + "/fig2.csv");
    CHECK(now == golden);
    REQUIRE(run({"fig", "--id", "2", "--out-dir", dir.string()}) == 0);
    CHECK(read_text_file((dir / "fig2.csv").string()) == now);
    CHECK(now.find('\r') == std::string::npos);
    CHECK_FALSE(fs::exists(dir / "fig2.svg"));
}

TEST_CASE("every figure row carries method and validity") {
    RunConfig r;
    r.grid.steps = 6;
    for (int id = 1; id <= 4; ++id) {
        const Table t = fig_table(id, r);
        REQUIRE(t.rows.size() > 0);
        const std::size_t mc = t.column("method");
        const std::size_t vc = t.column("validity");
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            CHECK(t.rows[i].size() == t.header.size());
            CHECK_FALSE(t.text(i, "method").empty());
            const std::string v = t.text(i, "validity");
            for (std::size_t c = 0; c < t.header.size(); ++c) {
                if (c == mc || c == vc) continue;
                if (const double* d = std::get_if<double>(&t.rows[i][c]))
                    if (std::isnan(*d)) CHECK(v != "valid");
            }
        }
    }
    CHECK(kind_of([&] { fig_table(5, r); }) == ErrorKind::BadParameter);
}

TEST_CASE("csv and svg output") {
    Table t;
    t.header = {"a", "b", "c"};
    t.rows = {{1.0 / 3.0, 7L, std::string("x")}, {NAN, 2L, std::string("y")}};
    CHECK(to_csv(t) == "a,b,c\n0.33333333333333331,7,x\nnan,2,y\n");
    CHECK(t.number(0, "a") == 1.0 / 3.0);
    const std::string svg = to_svg(t, PlotSpec{"t", "b", "a", "", {}});
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("font-face") == std::string::npos);
    const fs::path dir = scratch("svg");
    REQUIRE(run({"fig", "--id", "1", "--steps", "4", "--svg", "--out-dir", dir.string()}) == 0);
    CHECK(fs::exists(dir / "fig1.svg"));
}

TEST_CASE("cycle and sweep commands write their tables") {
    const fs::path dir = scratch("cycle");
    std::string text;
    REQUIRE(run({"cycle", "--T1", "150", "--T2", "100", "--out-dir", dir.string()}, &text) == 0);
    CHECK(text.find("W_J,") != std::string::npos);
    CHECK(fs::exists(dir / "cycle.csv"));
    REQUIRE(run({"sweep", "--var", "L", "--steps", "3", "--out-dir", dir.string()}) == 0);
    const std::string s = read_text_file((dir / "sweep.csv").string());
    CHECK(std::count(s.begin(), s.end(), '\n') == 4);
    CHECK(run({"cycle", "--T1", "100", "--T2", "150", "--out-dir", dir.string()}, &text) == 2);
    CHECK(text.find("TemperatureOrder") != std::string::npos);
    CHECK(run({"fig", "--id", "1", "--out-dir", "/proc/relqhe_nope"}, &text) == 2);
}

TEST_CASE("verify report") {
    RunConfig r;
    const VerifyReport rep = run_verify(r);
    CHECK(rep.all_passed());
    CHECK(rep.checks.size() == verify_checks().size());
    CHECK(rep.text().find("FAIL") == std::string::npos);

    r.paper_literal = true;
    const CheckResult* dim = nullptr;
    const VerifyReport lit = run_verify(r);
    for (const auto& c : lit.checks)
        if (c.name == "dimensional_consistency") dim = &c;
    REQUIRE(dim);
    CHECK(dim->status == CheckStatus::Skipped);
    CHECK(lit.text().find("SKIPPED  dimensional_consistency") != std::string::npos);

    std::string text;
    CHECK(run({"verify", "--series-max-terms", "10000", "--L", "500000"}, &text) == 1);
    CHECK(text.find("SeriesNotConverged") != std::string::npos);
    CHECK(text.find("failing:") != std::string::npos);
}
