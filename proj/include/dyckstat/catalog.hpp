#pragma once

#include "dyckstat/aggregate.hpp"
#include "dyckstat/series.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dyck {

/// One named generating function: a builder producing its truncated
/// expansion, and (when the statistic is a path statistic) the name of the
/// brute-force marking scheme that must reproduce it.
struct GfEntry {
    std::string id;
    std::string variables;   ///< human-readable marking variable list
    std::string description; ///< what the entry enumerates
    std::function<Series(int order)> builder;
    std::optional<std::string> oracle; ///< stat-spec name, absent for identity-only entries
    int default_verify_order;
};

struct VerifyReport {
    std::string id;
    int order;
    bool ok;
    int first_mismatch; ///< power of z, -1 when ok
};

struct IdentityReport {
    std::string name;
    bool ok;
    int first_mismatch;
};

struct RatioPoint {
    int n;
    Rational ratio; ///< total symmetric peaks over total peaks at semilength n
};

class Catalog {
public:
    static const Catalog& instance();

    bool contains(const std::string& id) const;
    const GfEntry& entry(const std::string& id) const;
    std::vector<std::string> ids() const;

    /// Exact expansion to the requested order.  Coefficients of the bare
    /// entry must be integral (IntegralityViolation otherwise); bindings are
    /// applied afterwards and may assign only variables the entry exposes.
    Series expand(const std::string& id, int order,
                  const std::map<VariableId, Polynomial>& bindings = {}) const;

    /// Coefficient-by-coefficient comparison against the entry's brute-force
    /// oracle through z^order.
    VerifyReport verify(const std::string& id, int order,
                        int ceiling = kDefaultOracleCeiling) const;

    /// Cross-entry identities; brute-force-backed checks enumerate up to
    /// min(order, ceiling).
    std::vector<IdentityReport> identity_checks(int order,
                                                int ceiling = kDefaultOracleCeiling) const;

    /// (n, sp_total_n / pea_total_n) for 1 <= n <= order, exact rationals.
    std::vector<RatioPoint> ratio_trend(int order) const;

private:
    Catalog();
    std::map<std::string, GfEntry> entries_;
};

/// First power where the series disagrees with the oracle, or -1.
int first_oracle_mismatch(const Series& series, const std::string& stat_spec, int ceiling);

/// Throws IdentityFailed on the first failed report.
void require_identities(const std::vector<IdentityReport>& reports);

/// Continued-fraction level specs of the CF-based entries, exposed so depth
/// stability can be probed at chosen depths.
CfLevelSpec peak_height_cf_levels(int order);
CfLevelSpec sval_cf_levels(int order);
CfLevelSpec sval_svw_cf_levels(int order);

} // namespace dyck
