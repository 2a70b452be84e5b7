#pragma once

#include "dyckstat/path.hpp"

#include <optional>
#include <vector>

namespace dyck {

/// One peak (an occurrence of UD) together with its maximal mountain
/// u^ascent d^descent.
struct PeakRecord {
    int index;   ///< position of the peak's Up step
    int height;  ///< y-coordinate of the apex
    int ascent;  ///< maximal run of Ups ending at the apex
    int descent; ///< maximal run of Downs starting at the apex
    bool symmetric; ///< ascent == descent
    int weight;  ///< min(ascent, descent)
};

/// One valley (an occurrence of DU) together with its maximal d^descent
/// u^ascent window.
struct ValleyRecord {
    int index;   ///< position of the valley's Down step
    int height;  ///< y-coordinate of the bottom
    int descent; ///< maximal run of Downs ending at the bottom
    int ascent;  ///< maximal run of Ups starting at the bottom
    bool symmetric; ///< descent == ascent
    std::optional<int> weight; ///< descent, defined for symmetric valleys only
};

/// Every per-path statistic computed in one scan over maximal runs.
struct StatProfile {
    std::vector<PeakRecord> peaks;
    std::vector<ValleyRecord> valleys;

    int pea = 0;
    int val = 0;
    int sp = 0;  ///< symmetric peaks
    int ap = 0;  ///< asymmetric peaks
    long long spw = 0; ///< sum of symmetric peak weights
    long long apw = 0; ///< sum of asymmetric peak weights
    int sp_prime = 0;  ///< adjacent valley pairs at equal height
    int sval = 0;      ///< symmetric valleys
    long long svw = 0; ///< sum of symmetric valley weights

    std::vector<int> sp_by_weight;   ///< count per weight, index = weight
    std::vector<int> ap_by_weight;
    std::vector<int> sval_by_weight;
    std::vector<int> peak_heights;   ///< left to right
    std::vector<int> valley_heights;
    std::vector<int> ph_by_height;   ///< peak count per height, index = height

    bool hill_free = false;   ///< no peak at height 1
    bool avoids_uudu = false; ///< no U,U,D,U at consecutive positions
    bool is_pyramid = false;  ///< u^n d^n with n >= 1
};

StatProfile analyze(const DyckPath& path);

/// Membership in the eight restricted families defined on valley-height
/// (W...) and peak-height (M...) sequences, plus the pyramid-or-empty class.
struct ClassFlags {
    bool w_strict = false;          ///< valley heights strictly increasing
    bool w_weak = false;            ///< weakly increasing
    bool w_strict_unimodal = false; ///< strictly unimodal
    bool w_weak_unimodal = false;   ///< weakly unimodal
    bool m_strict = false;
    bool m_weak = false;
    bool m_strict_unimodal = false;
    bool m_weak_unimodal = false;
    bool in_lambda = false; ///< pyramid or empty
};

ClassFlags class_flags(const DyckPath& path);
ClassFlags class_flags(const DyckPath& path, const StatProfile& profile);

// Sequence predicates used for the class flags.  Empty and one-element
// sequences count as strictly increasing and strictly unimodal.
bool strictly_increasing(const std::vector<int>& xs);
bool weakly_increasing(const std::vector<int>& xs);
bool strictly_unimodal(const std::vector<int>& xs);
bool weakly_unimodal(const std::vector<int>& xs);

} // namespace dyck
