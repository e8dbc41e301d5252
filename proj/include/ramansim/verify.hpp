#pragma once

#include <string>
#include <vector>

#include "ramansim/scenario.hpp"

namespace ramansim {

// Analytic-vs-brute-force comparison of a quantum scenario on its time grid.
struct VerifyReport {
    struct Entry {
        std::string observable;
        double max_abs_deviation = 0.0;
    };
    std::vector<Entry> entries;
    int n1_max = 0;  // cutoffs actually used by the brute-force evolution
    int n2_max = 0;
    double tolerance = 1e-9;

    bool ok() const;
    double worst() const;
};

// Runs the closed-form pipeline and the truncated-space evolution on the same
// grid and reports the largest deviation per observable. Cutoff overrides of
// 0 pick defaults derived from the preparations. Propagates TruncationError
// when the requested cutoffs are too small.
VerifyReport verify_scenario(const Scenario& scenario, int n1_max_override = 0,
                             int n2_max_override = 0);

}  // namespace ramansim
