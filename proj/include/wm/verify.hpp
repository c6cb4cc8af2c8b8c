// Identity checks over enumerated instances, run on a job pool with ordered results.
#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wm/partitions.hpp"
#include "wm/ratfield.hpp"
#include "wm/symfunc.hpp"

namespace wm {

enum class Status { pass, fail, skipped };
const char* status_name(Status s);

struct CheckResult {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    Status status = Status::pass;
    bool gated = true;  // false for experimental runs (r = 2)
    std::string lhs, rhs, note;
};

struct VerifyConfig {
    int r = 3;
    std::vector<CoreLabel> cores;  // empty: the empty core and the core (1,1)
    int max_quot = -1;             // -1: per-identity default
    int trunc = -1;                // -1: |quot| + 2
    int order = 4;                 // series order for constant-term checks
    int window = -1;               // z-window for constant-term checks; -1: automatic
    int k = -1;                    // keep only instances with this k parameter; -1: all
    int jobs = 1;
};

// One instance: its parameters are known before it runs.
struct Check {
    std::vector<std::pair<std::string, std::string>> params;
    std::function<CheckResult()> run;
};

struct Identity {
    std::string id;
    std::string description;
    int default_max_quot = 1;
    int min_r = 3;  // below this (and above 2) instances are reported as skipped
    std::function<std::vector<Check>(const VerifyConfig&, int max_quot)> instances;
};

// Cores used when the config leaves them empty.
std::vector<CoreLabel> default_cores(int r);

// Checks of the wreath module.
const std::vector<Identity>& wreath_identities();
// Checks of the vertex operator module.
const std::vector<Identity>& vertex_identities();
// Both lists, wreath first.
const std::vector<Identity>& all_identities();
// nullptr if unknown
const Identity* find_identity(const std::string& id);

// Runs the checks on `jobs` threads; results keep the order of `checks`.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, int jobs);
// Instances of one identity under the config, with r-dependent gating applied.
std::vector<CheckResult> run_identity(const Identity& id, const VerifyConfig& cfg);

// Helpers for building checks.
// Wraps a body so that exceptions become failures.
Check guarded(std::string id, std::vector<std::pair<std::string, std::string>> params,
              std::function<CheckResult()> body);
CheckResult boolean(std::string id, std::vector<std::pair<std::string, std::string>> params, bool ok, std::string lhs,
                    std::string rhs, std::string note = "");
CheckResult compare(std::string id, std::vector<std::pair<std::string, std::string>> params, const RatFunc& lhs,
                    const RatFunc& rhs);
CheckResult compare(std::string id, std::vector<std::pair<std::string, std::string>> params, const MultiSymFunc& lhs,
                    const MultiSymFunc& rhs);

}  // namespace wm
