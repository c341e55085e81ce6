#pragma once

#include <functional>
#include <string>
#include <vector>

#include "relqhe/run_config.hpp"

namespace relqhe {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus s);

// `measured` is compared against `threshold`; `detail` names the worst point or the failure.
struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    double measured = 0;
    double threshold = 0;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    double seconds = 0;

    bool all_passed() const;
    std::string text() const;
};

using Check = std::function<CheckResult(const RunConfig&)>;

struct NamedCheck {
    std::string name;
    Check run;
};

const std::vector<NamedCheck>& verify_checks();

// Errors thrown by a check become a FAIL line carrying the error kind.
CheckResult run_check(const NamedCheck& c, const RunConfig& run);
VerifyReport run_verify(const RunConfig& run);

}  // namespace relqhe
