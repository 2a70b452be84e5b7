#include "dyckstat/bijections.hpp"

#include "dyckstat/errors.hpp"
#include "dyckstat/stats.hpp"

#include <algorithm>

namespace dyck {

namespace {

void append_run(std::vector<Step>& steps, Step dir, int count) {
    for (int i = 0; i < count; ++i) steps.push_back(dir);
}

std::vector<Step> pyramid_steps(int size) {
    std::vector<Step> steps;
    append_run(steps, Step::Up, size);
    append_run(steps, Step::Down, size);
    return steps;
}

/// Last index i in (0, len) where the prefix balance returns to zero.
std::size_t last_ground_touch(std::span<const Step> steps) {
    std::size_t at = 0;
    long long balance = 0;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        balance += (steps[i] == Step::Up) ? 1 : -1;
        if (balance == 0) at = i + 1;
    }
    return at;
}

DyckPath path_from_peaks_valleys(const std::vector<int>& peaks, const std::vector<int>& valleys) {
    std::vector<Step> steps;
    if (peaks.empty()) return DyckPath{};
    append_run(steps, Step::Up, peaks[0]);
    for (std::size_t i = 0; i < valleys.size(); ++i) {
        int down = peaks[i] - valleys[i];
        int up = peaks[i + 1] - valleys[i];
        if (valleys[i] < 0 || down < 1 || up < 1)
            throw NotInClass("peak/valley heights do not describe a Dyck path");
        append_run(steps, Step::Down, down);
        append_run(steps, Step::Up, up);
    }
    append_run(steps, Step::Down, peaks.back());
    return DyckPath(std::move(steps));
}

} // namespace

// --- strictly increasing valley heights <-> compositions ---

Composition wlt_to_composition(const DyckPath& path) {
    if (path.empty()) return Composition{};
    StatProfile st = analyze(path);
    if (!strictly_increasing(st.valley_heights))
        throw NotInClass("valley heights are not strictly increasing");
    if (st.is_pyramid) return Composition({path.semilength()});

    std::vector<int> parts;
    std::vector<Step> cur(path.steps().begin(), path.steps().end());
    // Peel ground pyramids off the canonical decomposition until only the
    // two arches around the height-0 valley remain.
    while (true) {
        StatProfile cs = analyze(DyckPath::unchecked(std::vector<Step>(cur)));
        std::size_t split = last_ground_touch(cur);
        if (cs.valley_heights.back() == 0) {
            // exactly two arches, both pyramids
            parts.push_back(static_cast<int>(split) / 2);
            parts.push_back(static_cast<int>(cur.size() - split) / 2);
            break;
        }
        parts.push_back(static_cast<int>(split) / 2 + 1);
        cur = std::vector<Step>(cur.begin() + static_cast<std::ptrdiff_t>(split) + 1,
                                cur.end() - 1);
    }
    return Composition(std::move(parts));
}

DyckPath wlt_from_composition(const Composition& comp) {
    const auto& parts = comp.parts;
    if (parts.empty()) return DyckPath{};
    if (parts.size() == 1) return DyckPath(pyramid_steps(parts[0]));

    // Build from the innermost pair outward.
    std::size_t m = parts.size();
    std::vector<Step> steps;
    steps.push_back(Step::Up);
    auto inner1 = pyramid_steps(parts[m - 2] - 1);
    steps.insert(steps.end(), inner1.begin(), inner1.end());
    steps.push_back(Step::Down);
    steps.push_back(Step::Up);
    auto inner2 = pyramid_steps(parts[m - 1] - 1);
    steps.insert(steps.end(), inner2.begin(), inner2.end());
    steps.push_back(Step::Down);
    for (std::size_t idx = m - 2; idx-- > 0;) {
        std::vector<Step> wrapped = pyramid_steps(parts[idx] - 1);
        wrapped.push_back(Step::Up);
        wrapped.insert(wrapped.end(), steps.begin(), steps.end());
        wrapped.push_back(Step::Down);
        steps = std::move(wrapped);
    }
    return DyckPath(std::move(steps));
}

// --- strictly increasing peak heights <-> bounded compositions ---

Composition mlt_to_composition(const DyckPath& path) {
    if (path.empty()) return Composition{};
    StatProfile st = analyze(path);
    if (!strictly_increasing(st.peak_heights))
        throw NotInClass("peak heights are not strictly increasing");

    const auto steps = path.steps();
    std::vector<int> parts{1};
    std::size_t pos = 1; // first step is always Up here
    int level = 1;
    while (true) {
        std::size_t j = pos;
        while (j < steps.size() && steps[j] == Step::Down) ++j;
        std::size_t downs = j - pos;
        if (j == steps.size()) {
            if (static_cast<int>(downs) != level)
                throw NotInClass("final descent does not return to the axis");
            break;
        }
        if (downs > 0) {
            // a pit d^j u^j hangs below this level
            if (static_cast<int>(downs) > level - 1)
                throw NotInClass("pit too deep for its level");
            for (std::size_t k = 0; k < downs; ++k) {
                if (j + k >= steps.size() || steps[j + k] != Step::Up)
                    throw NotInClass("unbalanced pit");
            }
            pos = j + downs;
        }
        if (pos >= steps.size() || steps[pos] != Step::Up)
            throw NotInClass("expected an ascent between pits");
        parts.push_back(static_cast<int>(downs) + 1);
        ++pos;
        ++level;
    }
    return Composition(std::move(parts));
}

DyckPath mlt_from_composition(const Composition& comp) {
    const auto& parts = comp.parts;
    if (parts.empty()) return DyckPath{};
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] > static_cast<int>(i) + 1)
            throw PartBoundViolated("part " + std::to_string(i + 1) + " exceeds its bound " +
                                    std::to_string(i + 1));
    int a = static_cast<int>(parts.size());
    std::vector<Step> steps;
    steps.push_back(Step::Up);
    for (int i = 1; i < a; ++i) {
        int pit = parts[static_cast<std::size_t>(i)] - 1;
        append_run(steps, Step::Down, pit);
        append_run(steps, Step::Up, pit);
        steps.push_back(Step::Up);
    }
    append_run(steps, Step::Down, a);
    return DyckPath(std::move(steps));
}

// --- pyramid insertion at a distinguished symmetric peak ---

namespace {

PeakRecord checked_symmetric_peak(const MarkedPath& marked) {
    StatProfile st = analyze(marked.path);
    if (marked.peak_index < 0 || marked.peak_index >= static_cast<int>(st.peaks.size()))
        throw InvalidArgument("peak index out of range");
    const PeakRecord& pk = st.peaks[static_cast<std::size_t>(marked.peak_index)];
    if (!pk.symmetric) throw NotSymmetricPeak("the distinguished peak is not symmetric");
    return pk;
}

} // namespace

PyramidInsertion eq8_insert(const MarkedPath& marked, int target_semilength) {
    PeakRecord pk = checked_symmetric_peak(marked);
    int k = marked.path.semilength();
    if (target_semilength < k)
        throw InvalidArgument("target semilength is smaller than the path");
    int m = target_semilength - k;
    if (m == 0) return {marked, 0};
    std::vector<Step> steps(marked.path.steps().begin(), marked.path.steps().end());
    std::vector<Step> pyramid = pyramid_steps(m);
    steps.insert(steps.begin() + pk.index + 1, pyramid.begin(), pyramid.end());
    return {MarkedPath{DyckPath(std::move(steps)), marked.peak_index}, m};
}

MarkedPath eq8_delete(const MarkedPath& marked, int i) {
    PeakRecord pk = checked_symmetric_peak(marked);
    if (i < 1) throw InvalidArgument("deletion size must be >= 1");
    if (i > pk.weight)
        throw WeightTooSmall("peak weight " + std::to_string(pk.weight) +
                             " cannot shed " + std::to_string(i));
    if (i == pk.weight)
        throw WeightTooSmall("removing the full mountain erases the distinguished peak");
    std::vector<Step> steps(marked.path.steps().begin(), marked.path.steps().end());
    auto first = steps.begin() + (pk.index - i + 1);
    steps.erase(first, first + 2 * i);
    return MarkedPath{DyckPath(std::move(steps)), marked.peak_index};
}

// --- Delest-Viennot ---

ColumnPolyomino delest_viennot(const DyckPath& path) {
    if (path.empty()) throw EmptyPath("the empty path has no polyomino image");
    StatProfile st = analyze(path);
    std::vector<ColumnPolyomino::Column> cols;
    int bottom = 0;
    for (std::size_t i = 0; i < st.peak_heights.size(); ++i) {
        if (i > 0) bottom = cols.back().top - (st.valley_heights[i - 1] + 1);
        cols.push_back({bottom, bottom + st.peak_heights[i]});
    }
    return ColumnPolyomino(std::move(cols));
}

DyckPath delest_viennot_inverse(const ColumnPolyomino& p) {
    const auto& cols = p.columns();
    if (cols[0].bottom != 0) throw NotInClass("first column must be anchored at y = 0");
    std::vector<int> peaks, valleys;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i > 0) {
            if (cols[i].bottom < cols[i - 1].bottom || cols[i].top < cols[i - 1].top)
                throw NotInClass("not a parallelogram polyomino");
            valleys.push_back(cols[i - 1].top - cols[i].bottom - 1);
        }
        peaks.push_back(cols[i].top - cols[i].bottom);
    }
    return path_from_peaks_valleys(peaks, valleys);
}

// --- Deutsch-Prodinger ---

ColumnPolyomino deutsch_prodinger(const DyckPath& path) {
    if (path.empty()) throw EmptyPath("the empty path has no polyomino image");
    StatProfile st = analyze(path);
    if (!weakly_increasing(st.valley_heights))
        throw NotInClass("valley heights are not weakly increasing");
    std::vector<ColumnPolyomino::Column> cols;
    for (std::size_t i = 0; i < st.peak_heights.size(); ++i) {
        int bottom = (i == 0) ? 0 : st.valley_heights[i - 1];
        cols.push_back({bottom, st.peak_heights[i]});
    }
    return ColumnPolyomino(std::move(cols));
}

DyckPath deutsch_prodinger_inverse(const ColumnPolyomino& p) {
    const auto& cols = p.columns();
    if (cols[0].bottom != 0) throw NotInClass("first column must start at y = 0");
    std::vector<int> peaks, valleys;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i > 0) {
            if (cols[i].bottom < cols[i - 1].bottom)
                throw NotInClass("column bottoms must weakly increase");
            valleys.push_back(cols[i].bottom);
        }
        peaks.push_back(cols[i].top);
    }
    return path_from_peaks_valleys(peaks, valleys);
}

} // namespace dyck
