#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nonelem/series.hpp"

namespace nonelem {

// The verification fixture grid: every closed-form class this library emits,
// including the log case and both exp regimes.
const std::vector<IntegralSpec>& selftest_grid();

struct SelftestCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;
    int failures = 0;
};

// Runs the fixture grid (derivative identity, FTC vs quadrature, tail
// representation equivalence, beta-1 specialization consistency, duplication formula)
// plus the printed-form errata regressions. Prints one line per check.
SelftestReport run_selftest(std::ostream& out);

}  // namespace nonelem
