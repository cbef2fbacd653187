#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "frogsim/replicate.hpp"

// The verification suite: every printed formula, bound and limit theorem is
// checked at desk scale against the simulator and the enumeration oracle,
// with all tolerances pinned here. Shared by the `verify` CLI subcommand
// and the acceptance test binary.

namespace frog::acceptance {

struct Options {
    ExecPolicy exec;
    std::string filter;        // run only criteria whose name contains this
    std::ostream* log = nullptr;  // per-criterion progress lines
};

struct CriterionResult {
    std::string name;
    bool pass;
    bool gating;  // false for report-only diagnostics
    std::string detail;
};

std::vector<CriterionResult> run(const Options& opt);

bool all_gating_passed(const std::vector<CriterionResult>& results);

}  // namespace frog::acceptance
