#pragma once

#include "stargenus/fast_tests.hpp"
#include "stargenus/star_graph.hpp"

#include <string>
#include <vector>

namespace stargenus {

struct CrossCheckReport {
    bool nonorientable = false;
    int partitions_checked = 0;
    /// One line per disagreement; empty when solver, fast tests and oracle agree.
    std::vector<std::string> mismatches;
};

/// Compares, coloring by coloring, the rank formula against traced atoms,
/// the surgery circle counts against coranks, and the fast tests against
/// the spectrum. Graphs must be within kMaxOracleVertices.
CrossCheckReport cross_check(const StarGraph& graph, const KleinOptions& klein = {});

} // namespace stargenus
