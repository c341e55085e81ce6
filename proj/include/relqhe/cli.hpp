#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "relqhe/run_config.hpp"

namespace relqhe {

struct CliOutcome {
    std::optional<RunConfig> run;  // empty when parsing stopped (help, usage error)
    std::string message;
    int exit_code = 0;
};

// Config-file problems throw Error; malformed command lines come back as a message and exit code.
CliOutcome parse_cli(int argc, const char* const* argv);

int execute(const RunConfig& run, std::ostream& out);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace relqhe
