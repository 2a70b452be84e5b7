#include "dyckstat/checks.hpp"

#include "dyckstat/bijections.hpp"
#include "dyckstat/errors.hpp"
#include "dyckstat/stats.hpp"

#include <algorithm>
#include <set>

namespace dyck {

namespace {

CheckResult pass(const std::string& name) { return {name, true, ""}; }
CheckResult fail(const std::string& name, const std::string& detail) {
    return {name, false, detail};
}

template <typename T>
CheckResult match_sorted(const std::string& name, std::vector<T> got, std::vector<T> expected) {
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    if (got == expected) return pass(name);
    return fail(name, "image does not match the characterized set (got " +
                          std::to_string(got.size()) + ", expected " +
                          std::to_string(expected.size()) + ")");
}

int adjacent_equal_pairs(const std::vector<int>& xs) {
    int count = 0;
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i - 1] == xs[i]) ++count;
    return count;
}

bool rising_piece_steps_by_at_most_one(const std::vector<int>& parts) {
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] < parts[i - 1]) break;
        if (parts[i] - parts[i - 1] > 1) return false;
    }
    return true;
}

bool adjacent_parts_differ_by_at_most_one(const std::vector<int>& parts) {
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (std::abs(parts[i] - parts[i - 1]) > 1) return false;
    return true;
}

CheckResult sweep_wlt(int max_n) {
    for (int n = 0; n <= max_n; ++n) {
        std::vector<Composition> images;
        bool all_ok = true;
        std::string detail;
        for_each_path(n, [&](const DyckPath& p) {
            if (!all_ok) return;
            ClassFlags f = class_flags(p);
            if (!f.w_strict) {
                try {
                    wlt_to_composition(p);
                    all_ok = false;
                    detail = "accepted a path outside the class: " + p.to_string();
                } catch (const NotInClass&) {
                }
                return;
            }
            Composition c = wlt_to_composition(p);
            if (c.total() != n || wlt_from_composition(c) != p) {
                all_ok = false;
                detail = "roundtrip failed at " + p.to_string();
                return;
            }
            images.push_back(std::move(c));
        });
        if (!all_ok) return fail("wlt_bijection", detail);
        CheckResult m = match_sorted("wlt_bijection", images, enumerate_compositions(n));
        if (!m.ok) {
            m.detail += " at n=" + std::to_string(n);
            return m;
        }
    }
    return pass("wlt_bijection");
}

CheckResult sweep_mlt(int max_n) {
    for (int n = 0; n <= max_n; ++n) {
        std::vector<Composition> expected;
        for (Composition& c : enumerate_compositions(n)) {
            bool bounded = true;
            for (std::size_t i = 0; i < c.parts.size(); ++i)
                if (c.parts[i] > static_cast<int>(i) + 1) bounded = false;
            if (bounded) expected.push_back(std::move(c));
        }
        std::vector<Composition> images;
        bool all_ok = true;
        std::string detail;
        for_each_path(n, [&](const DyckPath& p) {
            if (!all_ok) return;
            ClassFlags f = class_flags(p);
            if (!f.m_strict) {
                try {
                    mlt_to_composition(p);
                    all_ok = false;
                    detail = "accepted a path outside the class: " + p.to_string();
                } catch (const NotInClass&) {
                }
                return;
            }
            Composition c = mlt_to_composition(p);
            if (c.total() != n || mlt_from_composition(c) != p) {
                all_ok = false;
                detail = "roundtrip failed at " + p.to_string();
                return;
            }
            images.push_back(std::move(c));
        });
        if (!all_ok) return fail("mlt_bijection", detail);
        CheckResult m = match_sorted("mlt_bijection", images, expected);
        if (!m.ok) {
            m.detail += " at n=" + std::to_string(n);
            return m;
        }
    }
    return pass("mlt_bijection");
}

CheckResult sweep_eq8(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        // Marked paths of semilength n with 1 <= i <= weight of the mark.
        std::vector<std::tuple<std::string, int, int>> expected;
        for_each_path(n, [&](const DyckPath& p) {
            StatProfile st = analyze(p);
            for (std::size_t j = 0; j < st.peaks.size(); ++j)
                if (st.peaks[j].symmetric)
                    for (int i = 1; i <= st.peaks[j].weight; ++i)
                        expected.emplace_back(p.to_string(), static_cast<int>(j), i);
        });
        // Marked paths of semilength <= n map onto those pairs: k < n by
        // pyramid insertion with i = n - k, and k = n pairs with i equal to
        // the full weight of the mark.
        std::vector<std::tuple<std::string, int, int>> built;
        bool all_ok = true;
        std::string detail;
        for (int k = 0; k <= n && all_ok; ++k) {
            for_each_path(k, [&](const DyckPath& p) {
                if (!all_ok) return;
                StatProfile st = analyze(p);
                for (std::size_t j = 0; j < st.peaks.size(); ++j) {
                    if (!st.peaks[j].symmetric) continue;
                    MarkedPath marked{p, static_cast<int>(j)};
                    if (k == n) {
                        built.emplace_back(p.to_string(), static_cast<int>(j),
                                           st.peaks[j].weight);
                        PyramidInsertion same = eq8_insert(marked, n);
                        if (same.weight_delta != 0 || !(same.marked == marked)) {
                            all_ok = false;
                            detail = "degenerate insertion changed the path";
                        }
                        continue;
                    }
                    PyramidInsertion ins = eq8_insert(marked, n);
                    if (ins.weight_delta != n - k ||
                        ins.marked.path.semilength() != n ||
                        !(eq8_delete(ins.marked, ins.weight_delta) == marked)) {
                        all_ok = false;
                        detail = "insertion roundtrip failed at " + p.to_string();
                        return;
                    }
                    StatProfile ist = analyze(ins.marked.path);
                    const PeakRecord& ipk =
                        ist.peaks[static_cast<std::size_t>(ins.marked.peak_index)];
                    if (!ipk.symmetric || ipk.weight != st.peaks[j].weight + (n - k)) {
                        all_ok = false;
                        detail = "inserted peak has the wrong weight";
                        return;
                    }
                    built.emplace_back(ins.marked.path.to_string(), ins.marked.peak_index,
                                       ins.weight_delta);
                }
            });
        }
        if (!all_ok) return fail("eq8_bijection", detail);
        CheckResult m = match_sorted("eq8_bijection", built, expected);
        if (!m.ok) {
            m.detail += " at n=" + std::to_string(n);
            return m;
        }
    }
    return pass("eq8_bijection");
}

CheckResult sweep_delest_viennot(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::string> images;
        bool all_ok = true;
        std::string detail;
        for_each_path(n, [&](const DyckPath& p) {
            if (!all_ok) return;
            StatProfile st = analyze(p);
            ColumnPolyomino poly = delest_viennot(p);
            PolyominoClass cls = classify_polyomino(poly);
            if (!cls.parallelogram || cls.semiperimeter != n + 1) {
                all_ok = false;
                detail = "image not a parallelogram of semiperimeter n+1 at " + p.to_string();
                return;
            }
            if (poly.column_heights() != st.peak_heights ||
                adjacent_equal_pairs(poly.column_heights()) != st.sval) {
                all_ok = false;
                detail = "statistic transport failed at " + p.to_string();
                return;
            }
            if (delest_viennot_inverse(poly) != p) {
                all_ok = false;
                detail = "roundtrip failed at " + p.to_string();
                return;
            }
            images.push_back(poly.to_compact());
        });
        if (!all_ok) return fail("delest_viennot_bijection", detail);
        std::vector<std::string> expected;
        for (const ColumnPolyomino& poly : staircase_polyominoes_with_semiperimeter(n + 1))
            expected.push_back(poly.to_compact());
        CheckResult m = match_sorted("delest_viennot_bijection", images, expected);
        if (!m.ok) {
            m.detail += " at n=" + std::to_string(n);
            return m;
        }
    }
    return pass("delest_viennot_bijection");
}

CheckResult sweep_deutsch_prodinger(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::string> images;
        bool all_ok = true;
        std::string detail;
        for_each_path(n, [&](const DyckPath& p) {
            if (!all_ok) return;
            ClassFlags f = class_flags(p);
            if (!f.w_weak) {
                try {
                    deutsch_prodinger(p);
                    all_ok = false;
                    detail = "accepted a path outside the class: " + p.to_string();
                } catch (const NotInClass&) {
                }
                return;
            }
            StatProfile st = analyze(p);
            ColumnPolyomino poly = deutsch_prodinger(p);
            PolyominoClass cls = classify_polyomino(poly);
            if (!cls.directed || cls.area != n) {
                all_ok = false;
                detail = "image not directed of area n at " + p.to_string();
                return;
            }
            std::vector<int> tops, bottoms;
            for (const auto& c : poly.columns()) {
                tops.push_back(c.top);
                bottoms.push_back(c.bottom);
            }
            std::vector<int> expected_bottoms{0};
            expected_bottoms.insert(expected_bottoms.end(), st.valley_heights.begin(),
                                    st.valley_heights.end());
            if (tops != st.peak_heights || bottoms != expected_bottoms) {
                all_ok = false;
                detail = "boundary transport failed at " + p.to_string();
                return;
            }
            if (deutsch_prodinger_inverse(poly) != p) {
                all_ok = false;
                detail = "roundtrip failed at " + p.to_string();
                return;
            }
            images.push_back(poly.to_compact());
        });
        if (!all_ok) return fail("deutsch_prodinger_bijection", detail);
        std::vector<std::string> expected;
        for (const ColumnPolyomino& poly : directed_cc_polyominoes_with_area(n))
            expected.push_back(poly.to_compact());
        CheckResult m = match_sorted("deutsch_prodinger_bijection", images, expected);
        if (!m.ok) {
            m.detail += " at n=" + std::to_string(n);
            return m;
        }
    }
    return pass("deutsch_prodinger_bijection");
}

CheckResult sweep_polyomino_cases(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::string> a_images, e_images;
        std::vector<Composition> b_images, c_images, d_images;
        bool all_ok = true;
        std::string detail;
        for_each_path(n, [&](const DyckPath& p) {
            if (!all_ok) return;
            StatProfile st = analyze(p);
            ClassFlags f = class_flags(p, st);
            if (!f.w_weak) return;
            ColumnPolyomino poly = deutsch_prodinger(p);
            PolyominoClass cls = classify_polyomino(poly);
            std::vector<int> rev_peaks(st.peak_heights.rbegin(), st.peak_heights.rend());
            bool peaks_weakly_dec = weakly_increasing(rev_peaks);
            bool peaks_strictly_dec = strictly_increasing(rev_peaks);

            if (f.m_weak) { // (a)
                if (!cls.parallelogram || cls.area != n) {
                    all_ok = false;
                    detail = "(a) fails at " + p.to_string();
                    return;
                }
                a_images.push_back(poly.to_compact());
            }
            if (peaks_weakly_dec) { // (b)
                Composition rows = cls.rows_top_to_bottom;
                if (!weakly_unimodal(rows.parts) || rows.total() != n) {
                    all_ok = false;
                    detail = "(b) fails at " + p.to_string();
                    return;
                }
                b_images.push_back(rows);
            }
            if (f.w_strict && peaks_strictly_dec) { // (c)
                std::vector<int> parts = cls.rows_top_to_bottom.parts;
                parts.push_back(1);
                Composition rows{std::move(parts)};
                if (!weakly_unimodal(rows.parts) || rows.total() != n + 1 ||
                    !adjacent_parts_differ_by_at_most_one(rows.parts) ||
                    rows.parts.front() != 1 || rows.parts.back() != 1) {
                    all_ok = false;
                    detail = "(c) fails at " + p.to_string();
                    return;
                }
                c_images.push_back(rows);
            }
            if (peaks_strictly_dec) { // (d)
                Composition rows = cls.rows_top_to_bottom;
                if (!weakly_unimodal(rows.parts) || rows.total() != n ||
                    rows.parts.front() != 1 ||
                    !rising_piece_steps_by_at_most_one(rows.parts)) {
                    all_ok = false;
                    detail = "(d) fails at " + p.to_string();
                    return;
                }
                d_images.push_back(rows);
            }
            if (f.m_weak_unimodal) { // (e)
                if (!cls.directed || !cls.convex || cls.area != n) {
                    all_ok = false;
                    detail = "(e) fails at " + p.to_string();
                    return;
                }
                e_images.push_back(poly.to_compact());
            }
        });
        if (!all_ok) return fail("polyomino_cases", detail);

        // surjectivity of each restriction onto its characterized class
        std::vector<std::string> a_expected, e_expected;
        for (const ColumnPolyomino& poly : directed_cc_polyominoes_with_area(n)) {
            PolyominoClass cls = classify_polyomino(poly);
            if (cls.parallelogram) a_expected.push_back(poly.to_compact());
            if (cls.convex) e_expected.push_back(poly.to_compact());
        }
        std::vector<Composition> b_expected, c_expected, d_expected;
        for (const Composition& c : enumerate_compositions(n)) {
            if (weakly_unimodal(c.parts)) {
                b_expected.push_back(c);
                if (c.parts.front() == 1 && rising_piece_steps_by_at_most_one(c.parts))
                    d_expected.push_back(c);
            }
        }
        for (const Composition& c : enumerate_compositions(n + 1))
            if (weakly_unimodal(c.parts) && adjacent_parts_differ_by_at_most_one(c.parts) &&
                c.parts.front() == 1 && c.parts.back() == 1)
                c_expected.push_back(c);

        for (CheckResult m :
             {match_sorted("polyomino_case_a", a_images, a_expected),
              match_sorted("polyomino_case_b", b_images, b_expected),
              match_sorted("polyomino_case_c", c_images, c_expected),
              match_sorted("polyomino_case_d", d_images, d_expected),
              match_sorted("polyomino_case_e", e_images, e_expected)}) {
            if (!m.ok) {
                m.detail += " at n=" + std::to_string(n);
                return m;
            }
        }
    }
    return pass("polyomino_cases");
}

} // namespace

std::vector<CheckResult> transform_sweeps(int max_n) {
    return {sweep_wlt(max_n),          sweep_mlt(max_n),
            sweep_eq8(max_n),          sweep_delest_viennot(max_n),
            sweep_deutsch_prodinger(max_n), sweep_polyomino_cases(max_n)};
}

std::vector<CheckResult> cf_stability_checks(int order) {
    std::vector<CheckResult> out;
    auto probe = [&](const std::string& name, const CfLevelSpec& levels) {
        Series lo = cf_eval_at_depth(levels, order + 1, order);
        Series hi = cf_eval_at_depth(levels, order + 2, order);
        out.push_back(lo == hi
                          ? pass(name)
                          : fail(name, "depths " + std::to_string(order + 1) + " and " +
                                           std::to_string(order + 2) + " disagree"));
    };
    probe("sval_depth_stable", sval_cf_levels(order));
    probe("sval_svw_depth_stable", sval_svw_cf_levels(order));
    probe("peak_height_cf_depth_stable", peak_height_cf_levels(order));
    return out;
}

std::vector<CheckResult> mass_and_integrality_checks(int order) {
    const Catalog& cat = Catalog::instance();
    std::vector<CheckResult> out;

    bool exports_ok = true;
    std::string export_detail;
    for (const std::string& id : cat.ids()) {
        try {
            Series s = cat.expand(id, order);
            for (int k = 0; k <= order && exports_ok; ++k)
                for (const auto& [m, c] : s.coeff(k).terms())
                    if (c < 0) {
                        exports_ok = false;
                        export_detail = id + " has a negative coefficient at z^" +
                                        std::to_string(k);
                    }
        } catch (const Error& e) {
            exports_ok = false;
            export_detail = id + ": " + e.what();
        }
        if (!exports_ok) break;
    }
    out.push_back(exports_ok ? pass("integrality_and_nonnegativity")
                             : fail("integrality_and_nonnegativity", export_detail));

    const Series catalan = cat.expand("catalan", order);
    bool mass_ok = true;
    std::string mass_detail;
    for (const std::string& id :
         {"sp_ap_by_weight", "sp_ap_spw_apw", "sp_ap", "sp_prime", "pyramid_weight",
          "peak_height_cf", "sval", "sval_svw"}) {
        Series s = cat.expand(id, order);
        std::map<VariableId, Series> ones;
        for (const VariableId& v : s.variables()) ones.emplace(v, Series::one(order));
        if (!(s.substitute(ones) == catalan)) {
            mass_ok = false;
            mass_detail = std::string(id) + " does not collapse to the Catalan series";
            break;
        }
    }
    out.push_back(mass_ok ? pass("all_ones_total_mass") : fail("all_ones_total_mass", mass_detail));
    return out;
}

CheckResult ratio_trend_check(int order, int baseline) {
    const Catalog& cat = Catalog::instance();
    Rational at_hi, at_lo;
    bool have_hi = false, have_lo = false;
    for (const RatioPoint& pt : cat.ratio_trend(order)) {
        if (pt.n == order) {
            at_hi = pt.ratio;
            have_hi = true;
        }
        if (pt.n == baseline) {
            at_lo = pt.ratio;
            have_lo = true;
        }
    }
    if (!have_hi || !have_lo) return fail("ratio_trend", "missing trend endpoints");
    const Rational third(1, 3);
    Rational gap_hi = at_hi > third ? at_hi - third : third - at_hi;
    Rational gap_lo = at_lo > third ? at_lo - third : third - at_lo;
    if (gap_hi < gap_lo) return pass("ratio_trend");
    return fail("ratio_trend", "share of symmetric peaks is not closer to 1/3 at n=" +
                                   std::to_string(order));
}

namespace {

void extend_staircase(std::vector<ColumnPolyomino::Column>& cols, int semiperimeter,
                      std::vector<ColumnPolyomino>& out) {
    int k = static_cast<int>(cols.size());
    int top = cols.back().top;
    if (k + top == semiperimeter) out.push_back(ColumnPolyomino(cols));
    for (int b = cols.back().bottom; b < top; ++b) {
        for (int t = top; k + 1 + t <= semiperimeter; ++t) {
            cols.push_back({b, t});
            extend_staircase(cols, semiperimeter, out);
            cols.pop_back();
        }
    }
}

void extend_directed(std::vector<ColumnPolyomino::Column>& cols, int area_left,
                     std::vector<ColumnPolyomino>& out) {
    if (area_left == 0) {
        out.push_back(ColumnPolyomino(cols));
        return;
    }
    int top = cols.back().top;
    for (int b = cols.back().bottom; b < top; ++b) {
        for (int h = 1; h <= area_left; ++h) {
            cols.push_back({b, b + h});
            extend_directed(cols, area_left - h, out);
            cols.pop_back();
        }
    }
}

} // namespace

std::vector<ColumnPolyomino> staircase_polyominoes_with_semiperimeter(int s) {
    std::vector<ColumnPolyomino> out;
    std::vector<ColumnPolyomino::Column> cols;
    for (int h = 1; 1 + h <= s; ++h) {
        cols.push_back({0, h});
        extend_staircase(cols, s, out);
        cols.pop_back();
    }
    return out;
}

std::vector<ColumnPolyomino> directed_cc_polyominoes_with_area(int n) {
    std::vector<ColumnPolyomino> out;
    std::vector<ColumnPolyomino::Column> cols;
    for (int h = 1; h <= n; ++h) {
        cols.push_back({0, h});
        extend_directed(cols, n - h, out);
        cols.pop_back();
    }
    return out;
}

} // namespace dyck
