#include "relqhe/run_config.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "relqhe/errors.hpp"

namespace relqhe {

std::vector<double> GridSpec::values() const {
    std::vector<double> v(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
        if (scale == GridScale::Linear) {
            v[static_cast<std::size_t>(i)] = from + (to - from) * t;
        } else {
            v[static_cast<std::size_t>(i)] = std::exp(std::log(from) + (std::log(to) - std::log(from)) * t);
        }
    }
    v.back() = to;
    return v;
}

EngineConfig RunConfig::engine() const { return make_engine_config(mass_kg, L_angstrom * angstrom, tolerances); }

bool RunConfig::operator==(const RunConfig& o) const {
    return command == o.command && fig_id == o.fig_id && mass_kg == o.mass_kg && L_angstrom == o.L_angstrom &&
           T1_K == o.T1_K && T2_K == o.T2_K && grid == o.grid && sweep_var == o.sweep_var && method == o.method &&
           paper_literal == o.paper_literal && out_dir == o.out_dir && emit_svg == o.emit_svg &&
           tolerances.series_rel_tol == o.tolerances.series_rel_tol &&
           tolerances.series_max_terms == o.tolerances.series_max_terms &&
           tolerances.fd_step_scale == o.tolerances.fd_step_scale;
}

Method parse_method(const std::string& s) {
    if (s == "oracle") return Method::OracleSeries;
    if (s == "paper") return Method::PaperClosedForm;
    if (s == "corrected") return Method::CorrectedIntegral;
    throw Error(ErrorKind::BadParameter, "method must be oracle|paper|corrected, got '" + s + "'");
}

GridScale parse_grid_scale(const std::string& s) {
    if (s == "linear") return GridScale::Linear;
    if (s == "log") return GridScale::Log;
    throw Error(ErrorKind::BadParameter, "grid_scale must be log|linear, got '" + s + "'");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

double to_double(const std::string& v, int line) {
    errno = 0;
    char* end = nullptr;
    const double d = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || errno != 0 || !std::isfinite(d))
        parse_fail(line, "not a number: '" + v + "'");
    return d;
}

double to_positive(const std::string& key, const std::string& v, int line) {
    const double d = to_double(v, line);
    if (!(d > 0.0)) parse_fail(line, std::string(to_string(ErrorKind::NonPositiveParameter)) + ": " + key + " must be > 0");
    return d;
}

long long to_integer(const std::string& v, int line) {
    errno = 0;
    char* end = nullptr;
    const long long n = std::strtoll(v.c_str(), &end, 10);
    if (v.empty() || end != v.c_str() + v.size() || errno != 0) parse_fail(line, "not an integer: '" + v + "'");
    return n;
}

bool to_bool(const std::string& v, int line) {
    if (v == "true") return true;
    if (v == "false") return false;
    parse_fail(line, "expected true|false, got '" + v + "'");
}

}  // namespace

RunConfigOverrides parse_config_overrides(const std::string& text) {
    RunConfigOverrides o;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::vector<std::string> seen;
    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto hash = raw.find('#');
        const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) parse_fail(line, "expected 'key = value'");
        const std::string key = trim(body.substr(0, eq));
        const std::string val = trim(body.substr(eq + 1));
        if (key.empty()) parse_fail(line, "missing key");
        for (const auto& k : seen)
            if (k == key) parse_fail(line, "duplicate key '" + key + "'");
        seen.push_back(key);
        try {
            if (key == "mass_kg") o.mass_kg = to_positive(key, val, line);
            else if (key == "L_angstrom") o.L_angstrom = to_positive(key, val, line);
            else if (key == "T1_K") o.T1_K = to_positive(key, val, line);
            else if (key == "T2_K") o.T2_K = to_positive(key, val, line);
            else if (key == "grid_from") o.grid_from = to_double(val, line);
            else if (key == "grid_to") o.grid_to = to_double(val, line);
            else if (key == "grid_steps") {
                const long long n = to_integer(val, line);
                if (n < 2 || n > 1'000'000) parse_fail(line, "grid_steps must be in [2, 1e6]");
                o.grid_steps = static_cast<int>(n);
            } else if (key == "grid_scale") o.grid_scale = parse_grid_scale(val);
            else if (key == "method") o.method = parse_method(val);
            else if (key == "paper_literal") o.paper_literal = to_bool(val, line);
            else if (key == "out_dir") {
                if (val.empty()) parse_fail(line, "out_dir is empty");
                o.out_dir = val;
            } else if (key == "series_rel_tol") o.series_rel_tol = to_positive(key, val, line);
            else if (key == "series_max_terms") {
                const long long n = to_integer(val, line);
                if (n <= 0) parse_fail(line, "series_max_terms must be > 0");
                o.series_max_terms = static_cast<std::size_t>(n);
            } else if (key == "fd_step_scale") o.fd_step_scale = to_positive(key, val, line);
            else throw Error(ErrorKind::UnknownKey, "line " + std::to_string(line) + ": unknown key '" + key + "'");
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::UnknownKey) throw;
            parse_fail(line, e.what());
        }
    }
    return o;
}

void apply_overrides(RunConfig& r, const RunConfigOverrides& o) {
    if (o.mass_kg) r.mass_kg = *o.mass_kg;
    if (o.L_angstrom) r.L_angstrom = *o.L_angstrom;
    if (o.T1_K) r.T1_K = *o.T1_K;
    if (o.T2_K) r.T2_K = *o.T2_K;
    if (o.grid_from) r.grid.from = *o.grid_from;
    if (o.grid_to) r.grid.to = *o.grid_to;
    if (o.grid_steps) r.grid.steps = *o.grid_steps;
    if (o.grid_scale) r.grid.scale = *o.grid_scale;
    if (o.method) r.method = *o.method;
    if (o.paper_literal) r.paper_literal = *o.paper_literal;
    if (o.out_dir) r.out_dir = *o.out_dir;
    if (o.series_rel_tol) r.tolerances.series_rel_tol = *o.series_rel_tol;
    if (o.series_max_terms) r.tolerances.series_max_terms = *o.series_max_terms;
    if (o.fd_step_scale) r.tolerances.fd_step_scale = *o.fd_step_scale;
}

void validate(const RunConfig& r) {
    if (!(r.mass_kg > 0.0) || !(r.L_angstrom > 0.0) || !(r.T1_K > 0.0) || !(r.T2_K > 0.0))
        throw Error(ErrorKind::NonPositiveParameter, "mass, L and temperatures must be > 0");
    if (r.grid.steps < 2) throw Error(ErrorKind::BadParameter, "grid needs at least 2 steps");
    if (!(r.grid.from < r.grid.to)) throw Error(ErrorKind::BadParameter, "grid_from must be below grid_to");
    if (r.grid.scale == GridScale::Log && !(r.grid.from > 0.0))
        throw Error(ErrorKind::BadParameter, "log grid needs grid_from > 0");
    if (r.sweep_var != "L" && r.sweep_var != "T") throw Error(ErrorKind::BadParameter, "sweep variable must be L or T");
    (void)r.engine();
}

RunConfig parse_config(const std::string& text) {
    RunConfig r;
    apply_overrides(r, parse_config_overrides(text));
    validate(r);
    return r;
}

RunConfig merge_config(const std::string& file_text, const RunConfigOverrides& flags) {
    RunConfig r;
    apply_overrides(r, parse_config_overrides(file_text));
    apply_overrides(r, flags);
    validate(r);
    return r;
}

void check_output_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto probe = std::filesystem::path(dir) / ".relqhe_write_probe";
    {
        std::ofstream f(probe);
        if (!f) throw Error(ErrorKind::BadParameter, "output directory '" + dir + "' is not writable");
    }
    std::filesystem::remove(probe, ec);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::BadParameter, "cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace relqhe
