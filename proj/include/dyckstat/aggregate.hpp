#pragma once

#include "dyckstat/polynomial.hpp"
#include "dyckstat/stats.hpp"

#include <functional>
#include <map>
#include <string>

namespace dyck {

/// Contribution of one path to a distribution polynomial: a monomial for
/// distribution-type statistics, an integer for "total" statistics, zero
/// when the path is excluded by a class restriction.
using StatSpec =
    std::function<Polynomial(const DyckPath&, const StatProfile&, const ClassFlags&)>;

/// Named marking schemes, keyed by the catalog ids they back.
const std::map<std::string, StatSpec>& stat_specs();

inline constexpr int kDefaultOracleCeiling = 14;

/// Brute-force oracle: sum of per-path contributions over all of D_n,
/// computed purely by enumeration and direct path analysis.
Polynomial aggregate(int n, const std::string& spec, int ceiling = kDefaultOracleCeiling);
Polynomial aggregate(int n, const StatSpec& spec, int ceiling = kDefaultOracleCeiling);

} // namespace dyck
