#include "goldens.hpp"
#include "support.hpp"

#include "relqhe/run_config.hpp"

using namespace relqhe;
using support::kind_of;
using support::rel;

TEST_CASE("alpha follows the level-constant definition") {
    const EngineConfig cfg = make_engine_config(9.10938e-31, 1e-10);
    const double hb = cfg.constants().hbar;
    const double expect = support::pi * support::pi * hb * hb / (2.0 * 9.10938e-31 * 2e-10 * 2e-10);
    CHECK(rel(cfg.alpha(), expect) < 1e-15);
    CHECK(cfg.rest_energy() == doctest::Approx(9.10938e-31 * 299792458.0 * 299792458.0).epsilon(1e-15));
}

TEST_CASE("engine config rejects bad inputs") {
    CHECK(kind_of([] { make_engine_config(-1, 1e-10); }) == ErrorKind::NonPositiveParameter);
    CHECK(kind_of([] { make_engine_config(1e-30, 0.0); }) == ErrorKind::NonPositiveParameter);
    CHECK(kind_of([] { make_engine_config(1e-30, NAN); }) == ErrorKind::NonPositiveParameter);
    ToleranceOverrides loose;
    loose.series_rel_tol = 1e-3;
    CHECK(kind_of([&] { make_engine_config(1e-30, 1e-10, loose); }) == ErrorKind::BadTolerance);
    ToleranceOverrides few;
    few.series_max_terms = 10;
    CHECK(kind_of([&] { make_engine_config(1e-30, 1e-10, few); }) == ErrorKind::BadTolerance);
    CHECK(kind_of([] { support::electron(1).beta(0.0); }) == ErrorKind::NonPositiveParameter);
}

TEST_CASE("dimensionless group goldens and scaling") {
    CHECK(rel(dimensionless_group(support::electron(0.15), 100.0), golden::alpha_beta_015A_100K) < 1e-13);
    CHECK(rel(dimensionless_group(support::electron(0.3), 100.0), golden::alpha_beta_03A_100K) < 1e-13);
    const double base = dimensionless_group(support::electron(0.4), 200.0);
    CHECK(rel(dimensionless_group(support::electron(0.8), 200.0), base / 4.0) < 1e-14);
    CHECK(rel(dimensionless_group(support::electron(0.4), 400.0), base / 2.0) < 1e-14);
    const ThermalPoint p = make_thermal_point(support::electron(0.4), 200.0, Well::Partitioned);
    CHECK(p.well == Well::Partitioned);
    CHECK(rel(p.alpha_beta, base) < 1e-15);
}

TEST_CASE("with_half_width keeps mass and tolerances") {
    ToleranceOverrides o;
    o.series_rel_tol = 1e-10;
    const EngineConfig a = make_engine_config(2e-30, 1e-10, o);
    const EngineConfig b = a.with_half_width(3e-10);
    CHECK(b.mass() == a.mass());
    CHECK(b.half_width() == 3e-10);
    CHECK(b.tolerances().series_rel_tol == 1e-10);
}

TEST_CASE("config file parsing") {
    const RunConfig r = parse_config("mass_kg = 9.10938e-31\nL_angstrom = 0.3\nT1_K = 150\nT2_K = 100");
    CHECK(r.mass_kg == 9.10938e-31);
    CHECK(r.L_angstrom == 0.3);
    CHECK(r.T1_K == 150);
    CHECK(r.T2_K == 100);

    const RunConfig full = parse_config(
        "# comment line\n"
        "grid_from = 0.1   # trailing comment\n"
        "grid_to = 2\n"
        "grid_steps = 7\n"
        "grid_scale = log\n"
        "method = paper\n"
        "paper_literal = true\n"
        "out_dir = /tmp/x\n");
    CHECK(full.grid.from == 0.1);
    CHECK(full.grid.to == 2);
    CHECK(full.grid.steps == 7);
    CHECK(full.grid.scale == GridScale::Log);
    CHECK(full.method == Method::PaperClosedForm);
    CHECK(full.paper_literal);
    CHECK(full.out_dir == "/tmp/x");
}

TEST_CASE("config errors carry kind and line") {
    try {
        parse_config("L_angstrom = -1");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find("NonPositiveParameter") != std::string::npos);
    }
    try {
        parse_config("T1_K = 150\nbogus = 3\n");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownKey);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK(kind_of([] { parse_config("T1_K 150"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_config("T1_K = abc"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_config("T1_K = 1\nT1_K = 2"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_config("method = fancy"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_config("grid_steps = 1"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_config("grid_from = 2\ngrid_to = 1"); }) == ErrorKind::BadParameter);
}

TEST_CASE("empty file plus flags equals the file-based config") {
    const std::string text = "mass_kg = 9.10938e-31\nL_angstrom = 0.3\nT1_K = 150\nT2_K = 100\ngrid_steps = 9\n";
    RunConfigOverrides flags;
    flags.mass_kg = 9.10938e-31;
    flags.L_angstrom = 0.3;
    flags.T1_K = 150;
    flags.T2_K = 100;
    flags.grid_steps = 9;
    CHECK(merge_config("", flags) == parse_config(text));
    RunConfigOverrides l;
    l.L_angstrom = 0.7;
    CHECK(merge_config(text, l).L_angstrom == 0.7);
    CHECK(merge_config(text, l).T1_K == 150);
}

TEST_CASE("grid values") {
    GridSpec g{1.0, 100.0, 3, GridScale::Log};
    const auto v = g.values();
    REQUIRE(v.size() == 3);
    CHECK(v[0] == 1.0);
    CHECK(rel(v[1], 10.0) < 1e-15);
    CHECK(v[2] == 100.0);
    GridSpec lin{0.05, 1.0, 40, GridScale::Linear};
    CHECK(lin.values().front() == 0.05);
    CHECK(lin.values().back() == 1.0);
}
