#pragma once

#include "dyckstat/catalog.hpp"
#include "dyckstat/polyomino.hpp"

#include <string>
#include <vector>

namespace dyck {

struct CheckResult {
    std::string name;
    bool ok;
    std::string detail; ///< short failure description, empty when ok
};

/// Exhaustive bijection sweeps over all semilengths <= max_n: roundtrips,
/// statistic transport, and surjectivity onto the characterized images,
/// plus the five polyomino correspondence cases.
std::vector<CheckResult> transform_sweeps(int max_n);

/// Continued-fraction expansions must agree between depths order+1 and
/// order+2 through z^order.
std::vector<CheckResult> cf_stability_checks(int order);

/// Integrality and nonnegativity of every exported entry, and the all-ones
/// total-mass collapse of distribution entries onto the Catalan series.
std::vector<CheckResult> mass_and_integrality_checks(int order);

/// The symmetric-peak share of all peaks approaches 1/3: the gap at
/// n = order must be strictly below the gap at n = baseline.
CheckResult ratio_trend_check(int order, int baseline);

// Enumerators backing the surjectivity sweeps.
std::vector<ColumnPolyomino> staircase_polyominoes_with_semiperimeter(int s);
std::vector<ColumnPolyomino> directed_cc_polyominoes_with_area(int n);

} // namespace dyck
