#include "dyckstat/stats.hpp"

namespace dyck {

StatProfile analyze(const DyckPath& path) {
    StatProfile out;
    const auto steps = path.steps();
    const int n = path.semilength();

    out.sp_by_weight.assign(static_cast<std::size_t>(n) + 1, 0);
    out.ap_by_weight.assign(static_cast<std::size_t>(n) + 1, 0);
    out.sval_by_weight.assign(static_cast<std::size_t>(n) + 1, 0);
    out.ph_by_height.assign(static_cast<std::size_t>(n) + 1, 0);

    // Maximal runs; a nonempty path alternates U-run, D-run, ..., D-run.
    struct Run {
        Step dir;
        int len;
        int start;
    };
    std::vector<Run> runs;
    for (std::size_t i = 0; i < steps.size();) {
        std::size_t j = i;
        while (j < steps.size() && steps[j] == steps[i]) ++j;
        runs.push_back({steps[i], static_cast<int>(j - i), static_cast<int>(i)});
        i = j;
    }

    int y = 0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        const Run& cur = runs[r];
        y += (cur.dir == Step::Up) ? cur.len : -cur.len;
        if (r + 1 == runs.size()) break;
        const Run& next = runs[r + 1];
        if (cur.dir == Step::Up) {
            // peak at the junction; apex is the end of the Up run
            PeakRecord pk;
            pk.index = cur.start + cur.len - 1;
            pk.height = y;
            pk.ascent = cur.len;
            pk.descent = next.len;
            pk.symmetric = (pk.ascent == pk.descent);
            pk.weight = std::min(pk.ascent, pk.descent);
            out.peaks.push_back(pk);
        } else {
            ValleyRecord vl;
            vl.index = cur.start + cur.len - 1;
            vl.height = y;
            vl.descent = cur.len;
            vl.ascent = next.len;
            vl.symmetric = (vl.descent == vl.ascent);
            if (vl.symmetric) vl.weight = vl.descent;
            out.valleys.push_back(vl);
        }
    }

    out.pea = static_cast<int>(out.peaks.size());
    out.val = static_cast<int>(out.valleys.size());
    for (const PeakRecord& pk : out.peaks) {
        if (pk.symmetric) {
            ++out.sp;
            out.spw += pk.weight;
            ++out.sp_by_weight[static_cast<std::size_t>(pk.weight)];
        } else {
            ++out.ap;
            out.apw += pk.weight;
            ++out.ap_by_weight[static_cast<std::size_t>(pk.weight)];
        }
        out.peak_heights.push_back(pk.height);
        ++out.ph_by_height[static_cast<std::size_t>(pk.height)];
    }
    for (const ValleyRecord& vl : out.valleys) {
        if (vl.symmetric) {
            ++out.sval;
            out.svw += *vl.weight;
            ++out.sval_by_weight[static_cast<std::size_t>(*vl.weight)];
        }
        out.valley_heights.push_back(vl.height);
    }
    for (std::size_t i = 1; i < out.valley_heights.size(); ++i)
        if (out.valley_heights[i - 1] == out.valley_heights[i]) ++out.sp_prime;

    out.hill_free = out.ph_by_height.size() < 2 || out.ph_by_height[1] == 0;
    out.avoids_uudu = true;
    for (std::size_t i = 0; i + 3 < steps.size(); ++i)
        if (steps[i] == Step::Up && steps[i + 1] == Step::Up && steps[i + 2] == Step::Down &&
            steps[i + 3] == Step::Up) {
            out.avoids_uudu = false;
            break;
        }
    out.is_pyramid = dyck::is_pyramid(path);
    return out;
}

bool strictly_increasing(const std::vector<int>& xs) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i - 1] >= xs[i]) return false;
    return true;
}

bool weakly_increasing(const std::vector<int>& xs) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i - 1] > xs[i]) return false;
    return true;
}

bool strictly_unimodal(const std::vector<int>& xs) {
    bool falling = false;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (xs[i - 1] == xs[i]) return false;
        if (xs[i] < xs[i - 1]) falling = true;
        else if (falling) return false;
    }
    return true;
}

bool weakly_unimodal(const std::vector<int>& xs) {
    bool falling = false;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (xs[i] < xs[i - 1]) falling = true;
        else if (falling && xs[i] > xs[i - 1]) return false;
    }
    return true;
}

ClassFlags class_flags(const DyckPath& path, const StatProfile& profile) {
    ClassFlags f;
    f.w_strict = strictly_increasing(profile.valley_heights);
    f.w_weak = weakly_increasing(profile.valley_heights);
    f.w_strict_unimodal = strictly_unimodal(profile.valley_heights);
    f.w_weak_unimodal = weakly_unimodal(profile.valley_heights);
    f.m_strict = strictly_increasing(profile.peak_heights);
    f.m_weak = weakly_increasing(profile.peak_heights);
    f.m_strict_unimodal = strictly_unimodal(profile.peak_heights);
    f.m_weak_unimodal = weakly_unimodal(profile.peak_heights);
    f.in_lambda = path.empty() || profile.is_pyramid;
    return f;
}

ClassFlags class_flags(const DyckPath& path) { return class_flags(path, analyze(path)); }

} // namespace dyck
