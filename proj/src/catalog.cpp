#include "dyckstat/catalog.hpp"

#include "dyckstat/errors.hpp"

#include <algorithm>

namespace dyck {

namespace {

Polynomial zp(int k) { return Polynomial::term(Rational(1), Monomial::power(var::z(), k)); }

/// Sum of c_k z^k from a dense coefficient list.
Polynomial zpoly(const std::vector<Rational>& coeffs) {
    Polynomial p;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        p.add_term(Monomial::power(var::z(), static_cast<std::uint32_t>(k)), coeffs[k]);
    return p;
}

Series from_poly(const Polynomial& p, int order) { return Series::from_polynomial(p, order); }

Series sqrt_one_minus_4z(int order) {
    return from_poly(zpoly({1, -4}), order).sqrt();
}

/// C(z) = (1 - sqrt(1-4z)) / (2z).
Series catalan_series(int order) {
    int m = order + 1;
    Series num = Series::one(m) - sqrt_one_minus_4z(m);
    return num.div_z(1) * Rational(1, 2);
}

/// Shared skeleton of the symmetric/asymmetric peak formulas: given the
/// marking substitutions A and B for the symmetric and asymmetric weight
/// series, computes
///   (1 + z - (1+z) A + 2 z B - sqrt((1-z) [(1-A)^2 - z (1-A+2B)^2]))
///   / (2 z (1 - A + B)^2).
/// A and B must be given at order `order` + 1.
Series peak_radical_formula(const Series& a, const Series& b, int order) {
    int m = order + 1;
    Series one = Series::one(m);
    Series one_plus_z = from_poly(zpoly({1, 1}), m);
    Series one_minus_z = from_poly(zpoly({1, -1}), m);
    Series one_minus_a = one - a;
    Series mixed = one_minus_a + b * Rational(2);
    Series arg = one_minus_z * (one_minus_a * one_minus_a - (mixed * mixed).mul_z());
    Series num = one_plus_z - one_plus_z * a + b.mul_z() * Rational(2) - arg.sqrt();
    Series unit = one - a + b;
    Series den = (unit * unit).truncate(order);
    return num.div_z(1) * Rational(1, 2) * den.inverse();
}

/// P(x, z) = sum_{i=1..order} x_i z^i for an indexed variable family.
Series indexed_profile_series(char letter, int order) {
    Series s(order);
    for (int i = 1; i <= order; ++i)
        s.set_coeff(i, Polynomial::variable(VariableId(letter, static_cast<std::uint32_t>(i))));
    return s;
}

/// sum_{i=1..order} x b^i z^i (geometric profile x b z / (1 - b z)).
Series geometric_profile_series(VariableId x, VariableId b, int order) {
    Series s(order);
    for (int i = 1; i <= order; ++i)
        s.set_coeff(i, Polynomial::term(Rational(1), Monomial::power(x, 1) *
                                                         Monomial::power(b, static_cast<std::uint32_t>(i))));
    return s;
}

/// sum_{i=1..order} x z^i (the all-weights-alike profile x z / (1 - z)).
Series flat_profile_series(VariableId x, int order) {
    Series s(order);
    for (int i = 1; i <= order; ++i) s.set_coeff(i, Polynomial::variable(x));
    return s;
}

/// Indexed profile truncated at index `max_index` but carried at a higher
/// series order (indices above the target order never reach z^order).
Series indexed_profile_series(char letter, int max_index, int order) {
    Series s(order);
    for (int i = 1; i <= max_index && i <= order; ++i)
        s.set_coeff(i, Polynomial::variable(VariableId(letter, static_cast<std::uint32_t>(i))));
    return s;
}

} // namespace

// --- catalog construction ---

Catalog::Catalog() {
    auto add = [&](GfEntry e) { entries_.emplace(e.id, std::move(e)); };

    add({"catalan", "-", "all Dyck paths by semilength",
         [](int n) { return catalan_series(n); }, "catalan", 12});

    add({"sp_ap_by_weight", "t1..tN, r1..rN",
         "symmetric and asymmetric peak counts refined by weight",
         [](int n) {
             int m = n + 1;
             Series a = indexed_profile_series('t', n, m);
             Series b = indexed_profile_series('r', n, m);
             return peak_radical_formula(a, b, n);
         },
         "sp_ap_by_weight", 8});

    add({"pea_ins_by_weight", "p1..pN, q",
         "peak counts refined by weight, jointly with insertion points",
         [](int n) {
             int m = n + 1;
             Series p(m);
             for (int i = 1; i <= n; ++i)
                 p.set_coeff(i, Polynomial::variable(var::p(static_cast<std::uint32_t>(i))));
             Polynomial qv = Polynomial::variable(var::q());
             Series one = Series::one(m);
             Series one_minus_z = from_poly(zpoly({1, -1}), m);
             Series qp = p * qv;
             Series plus = one + qp;
             Series minus = one - qp;
             Series arg = one_minus_z * (minus * minus - (plus * plus).mul_z());
             Series num = from_poly(zpoly({1, 1}), m) - one_minus_z * qp - arg.sqrt();
             return num.div_z(1) * Rational(1, 2) * qv;
         },
         std::nullopt, 8});

    add({"sp_ap_spw_apw", "t, r, w, y",
         "symmetric/asymmetric peak counts with their weight sums",
         [](int n) {
             int m = n + 1;
             Series a = geometric_profile_series(var::t(), var::w(), m);
             Series b = geometric_profile_series(var::r(), var::y(), m);
             return peak_radical_formula(a, b, n);
         },
         "sp_ap_spw_apw", 10});

    add({"sp_ap", "t, r", "symmetric and asymmetric peak counts",
         [](int n) {
             int m = n + 1;
             return peak_radical_formula(flat_profile_series(var::t(), m),
                                         flat_profile_series(var::r(), m), n);
         },
         "sp_ap", 10});

    add({"sp_prime", "t", "pairs of consecutive valleys at the same height",
         [](int n) {
             int m = n + 1;
             Polynomial tv = Polynomial::variable(var::t());
             Series head = from_poly(zpoly({1, 1}) - tv * zp(1), m);
             Series tail =
                 from_poly(Polynomial(1) - tv * zp(1), m) * from_poly(zpoly({1, -1}), m).inverse();
             Series arg = head * head - tail.mul_z() * Rational(4);
             Series num = head - arg.sqrt();
             return num.div_z(1) * Rational(1, 2);
         },
         "sp_prime", 10});

    add({"sp_prime_zero", "-", "Dyck paths with no two consecutive valleys at the same height",
         [this](int n) {
             return entries_.at("sp_prime").builder(n).substitute(
                 std::map<VariableId, Polynomial>{{var::t(), Polynomial(0)}});
         },
         "sp_prime_zero", 12});

    add({"sp_total", "-", "total number of symmetric peaks",
         [](int n) {
             Series s = sqrt_one_minus_4z(n);
             Series one_minus_z = from_poly(zpoly({1, -1}), n);
             Series num = from_poly(zpoly({-1, 5}), n) + one_minus_z * s;
             return num * (one_minus_z * s * Rational(2)).inverse();
         },
         "sp_total", 12});

    add({"ap_total", "-", "total number of asymmetric peaks",
         [](int n) {
             Series s = sqrt_one_minus_4z(n);
             Series one_minus_z = from_poly(zpoly({1, -1}), n);
             Series num = from_poly(zpoly({1, -3}), n) - one_minus_z * s;
             return num * (one_minus_z * s).inverse();
         },
         "ap_total", 12});

    add({"pyramid_weight", "q", "sum of the weights of all peaks",
         [](int n) {
             int m = n + 1;
             Polynomial qv = Polynomial::variable(var::q());
             Series one_minus_qz = from_poly(Polynomial(1) - qv * zp(1), m);
             Series arg = from_poly(zpoly({1, -4}), m) * one_minus_qz * one_minus_qz +
                          from_poly((Polynomial(1) - qv) *
                                        (zpoly({2, 1}) - Polynomial(3) * qv * zp(1)),
                                    m)
                              .mul_z();
             Series num = from_poly(zpoly({1, 1}) - Rational(2) * qv * zp(1), m) - arg.sqrt();
             return num.div_z(1) * Rational(1, 2) * one_minus_qz.truncate(n).inverse();
         },
         "pyramid_weight", 10});

    add({"spw_total", "-", "total weight of symmetric peaks",
         [](int n) {
             Series s = sqrt_one_minus_4z(n);
             Series omz = from_poly(zpoly({1, -1}), n);
             Series num = from_poly(zpoly({-1, 5}), n) + omz * s;
             return num * (omz * omz * s * Rational(2)).inverse();
         },
         "spw_total", 12});

    add({"apw_total", "-", "total weight of asymmetric peaks",
         [](int n) {
             Series s = sqrt_one_minus_4z(n);
             Series omz = from_poly(zpoly({1, -1}), n);
             Series num = from_poly(zpoly({1, -3}), n) - omz * s;
             return num * (omz * omz * s).inverse();
         },
         "apw_total", 12});

    add({"peak_height_cf", "h1..hN", "peak counts refined by height",
         [](int n) { return cf_eval(peak_height_cf_levels(n), n + 1, n); },
         "peak_height_cf", 10});

    add({"sval", "s", "number of symmetric valleys",
         [](int n) { return cf_eval(sval_cf_levels(n), n + 1, n); }, "sval", 10});

    add({"sval_total", "-", "total number of symmetric valleys",
         [](int n) {
             Series s = sqrt_one_minus_4z(n);
             Series den = from_poly(zpoly({1, -3, -4}), n) + from_poly(zpoly({1, -1}), n) * s;
             return den.inverse().mul_z(2) * Rational(2);
         },
         "sval_total", 12});

    add({"sval_svw", "s, w", "symmetric valley count with total valley weight",
         [](int n) { return cf_eval(sval_svw_cf_levels(n), n + 1, n); }, "sval_svw", 10});

    add({"svw_total", "-", "total weight of symmetric valleys",
         [](int n) {
             Series s = sqrt_one_minus_4z(n);
             Series den = from_poly(zpoly({1, -3, -3, -4}), n) +
                          from_poly(zpoly({1, -1, -3}), n) * s;
             return den.inverse().mul_z(2) * Rational(2);
         },
         "svw_total", 12});

    // --- restricted families: valley heights ---

    add({"w_strict", "-", "valley heights strictly increasing",
         [](int n) {
             return from_poly(zpoly({1, -1}), n) * from_poly(zpoly({1, -2}), n).inverse();
         },
         "w_strict", 12});

    add({"w_weak", "-", "valley heights weakly increasing",
         [](int n) {
             return from_poly(zpoly({1, -2}), n) * from_poly(zpoly({1, -3, 1}), n).inverse();
         },
         "w_weak", 12});

    add({"w_weak_t", "t", "weakly increasing valley heights, refined by equal-height valley pairs",
         [](int n) {
             Polynomial tv = Polynomial::variable(var::t());
             Polynomial num = Polynomial(1) - (Polynomial(1) + tv) * zp(1);
             Polynomial den = Polynomial(1) - (Polynomial(2) + tv) * zp(1) + tv * zp(2);
             return from_poly(num, n) * from_poly(den, n).inverse();
         },
         "w_weak_t", 10});

    add({"w_strict_unimodal", "-", "valley heights strictly unimodal",
         [](int n) {
             Series num = from_poly(zpoly({1, -3, 2, -1}), n);
             Series den = from_poly(zpoly({1, -1}), n) * from_poly(zpoly({1, -3, 1}), n);
             return num * den.inverse();
         },
         "w_strict_unimodal", 12});

    add({"w_strict_unimodal_alt", "-",
         "weakly increasing valley heights with at most one valley at height 0",
         [this](int n) {
             Series wweak = entries_.at("w_weak").builder(n);
             return Series::one(n) +
                    from_poly(zpoly({1, -1}), n).inverse().mul_z() * wweak;
         },
         "w_strict_unimodal_alt", 12});

    add({"w_weak_unimodal", "-", "valley heights weakly unimodal",
         [](int n) {
             return from_poly(zpoly({1, -4, 3}), n) *
                    from_poly(zpoly({1, -5, 6, -1}), n).inverse();
         },
         "w_weak_unimodal", 12});

    add({"w_weak_unimodal_t", "t",
         "weakly unimodal valley heights, refined by equal-height valley pairs",
         [](int n) {
             Polynomial tv = Polynomial::variable(var::t());
             Polynomial t2 = tv * tv;
             Polynomial num = Polynomial(1) - (Polynomial(3) + Rational(2) * tv) * zp(1) +
                              (Polynomial(2) + Rational(4) * tv + t2) * zp(2) -
                              (Polynomial(1) + tv + t2) * zp(3);
             Polynomial den_inner = Polynomial(1) - (Rational(2) * tv + Polynomial(3)) * zp(1) +
                                    (Polynomial(1) + Rational(4) * tv + t2) * zp(2) - t2 * zp(3);
             Series den = from_poly(zpoly({1, -1}), n) * from_poly(den_inner, n);
             return from_poly(num, n) * den.inverse();
         },
         "w_weak_unimodal_t", 10});

    // --- restricted families: peak heights ---

    add({"m_strict", "-", "peak heights strictly increasing",
         [](int n) {
             Series sum = Series::zero(n);
             Polynomial fact(1);
             for (int a = 0; a <= n; ++a) {
                 if (a > 0) fact *= q_int(a);
                 sum += from_poly(fact, n).mul_z(a);
             }
             return sum;
         },
         "m_strict", 12});

    add({"m_weak", "-", "peak heights weakly increasing",
         [](int n) {
             Series sum = Series::zero(n);
             Series prod = Series::one(n);
             for (int a = 0; a <= n; ++a) {
                 if (a > 0)
                     prod = prod * (Series::one(n) - from_poly(zp(1) * q_int(a), n)).inverse();
                 sum += prod.mul_z(a);
             }
             return sum;
         },
         "m_weak", 12});

    add({"m_weak_s", "s", "weakly increasing peak heights, refined by symmetric valleys",
         [](int n) {
             Polynomial sv = Polynomial::variable(var::s());
             Series sum = Series::one(n);
             Series prod = Series::one(n); // product over i < a of (1+(1-s) z[i]) / (1-s z[i])
             for (int a = 1; a <= n; ++a) {
                 Series last =
                     (Series::one(n) - from_poly(sv * (zp(1) * q_int(a)), n)).inverse();
                 sum += (prod * last).mul_z(a);
                 Series grow_num =
                     Series::one(n) + from_poly((Polynomial(1) - sv) * (zp(1) * q_int(a)), n);
                 prod = prod * grow_num * last;
             }
             return sum;
         },
         "m_weak_s", 10});

    add({"m_strict_unimodal", "-", "peak heights strictly unimodal",
         [](int n) {
             Series sum = Series::zero(n);
             Polynomial fact(1);
             for (int a = 0; a <= n; ++a) {
                 if (a > 0) fact *= q_int(a);
                 sum += from_poly(fact * fact, n).mul_z(a);
             }
             return sum;
         },
         "m_strict_unimodal", 12});

    add({"m_weak_unimodal", "-", "peak heights weakly unimodal",
         [](int n) {
             Series sum = Series::one(n);
             Series prod = Series::one(n); // product over i < a of 1/(1-z[i])^2
             for (int a = 1; a <= n; ++a) {
                 Series last = (Series::one(n) - from_poly(zp(1) * q_int(a), n)).inverse();
                 sum += (prod * last).mul_z(a);
                 prod = prod * last * last;
             }
             return sum;
         },
         "m_weak_unimodal", 12});

    add({"m_weak_unimodal_s", "s", "weakly unimodal peak heights, refined by symmetric valleys",
         [](int n) {
             Polynomial sv = Polynomial::variable(var::s());
             Series sum = Series::one(n);
             Series prod = Series::one(n);
             for (int a = 1; a <= n; ++a) {
                 Series last =
                     (Series::one(n) - from_poly(sv * (zp(1) * q_int(a)), n)).inverse();
                 sum += (prod * prod * last).mul_z(a);
                 Series grow_num =
                     Series::one(n) + from_poly((Polynomial(1) - sv) * (zp(1) * q_int(a)), n);
                 prod = prod * grow_num * last;
             }
             return sum;
         },
         "m_weak_unimodal_s", 10});
}

const Catalog& Catalog::instance() {
    static const Catalog catalog;
    return catalog;
}

bool Catalog::contains(const std::string& id) const { return entries_.contains(id); }

const GfEntry& Catalog::entry(const std::string& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw UnknownGf("no generating function named '" + id + "'");
    return it->second;
}

std::vector<std::string> Catalog::ids() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [id, e] : entries_) out.push_back(id);
    return out;
}

namespace {

/// One letter must not appear both indexed and unindexed in one series.
void check_no_index_mixing(const Series& s, const std::string& id) {
    auto vs = s.variables();
    for (const auto& v : vs) {
        if (!v.indexed()) continue;
        if (vs.contains(VariableId(v.letter(), 0)))
            throw Error("catalog entry '" + id + "' mixes " + std::string(1, v.letter()) +
                        " and indexed " + v.name());
    }
}

} // namespace

Series Catalog::expand(const std::string& id, int order,
                       const std::map<VariableId, Polynomial>& bindings) const {
    const GfEntry& e = entry(id);
    Series s = e.builder(order);
    if (s.order() != order) s = s.truncate(order);
    if (!s.coefficients_integral())
        throw IntegralityViolation("entry '" + id + "' exported a non-integer coefficient");
    check_no_index_mixing(s, id);
    if (bindings.empty()) return s;
    auto present = s.variables();
    for (const auto& [v, value] : bindings)
        if (!present.contains(v))
            throw BadBinding("entry '" + id + "' has no variable " + v.name() +
                             " at order " + std::to_string(order));
    return s.substitute(bindings);
}

int first_oracle_mismatch(const Series& series, const std::string& stat_spec, int ceiling) {
    for (int n = 0; n <= series.order(); ++n) {
        Polynomial truth = aggregate(n, stat_spec, ceiling);
        if (!(series.coeff(n) == truth)) return n;
    }
    return -1;
}

VerifyReport Catalog::verify(const std::string& id, int order, int ceiling) const {
    const GfEntry& e = entry(id);
    if (!e.oracle)
        throw NoOracle("entry '" + id + "' has no brute-force oracle");
    Series s = expand(id, order);
    int bad = first_oracle_mismatch(s, *e.oracle, ceiling);
    return {id, order, bad < 0, bad};
}

std::vector<RatioPoint> Catalog::ratio_trend(int order) const {
    Series sp_ap = expand("sp_ap", order);
    Series pea_total = (sp_ap.derivative(var::t()) + sp_ap.derivative(var::r()))
                           .substitute(std::map<VariableId, Polynomial>{
                               {var::t(), Polynomial(1)}, {var::r(), Polynomial(1)}});
    Series sp_total = expand("sp_total", order);
    std::vector<RatioPoint> out;
    for (int n = 1; n <= order; ++n) {
        Rational peaks = pea_total.coeff(n).constant_value();
        if (peaks == 0) continue;
        out.push_back({n, sp_total.coeff(n).constant_value() / peaks});
    }
    return out;
}

namespace {

int first_series_mismatch(const Series& a, const Series& b) {
    int order = std::min(a.order(), b.order());
    for (int k = 0; k <= order; ++k)
        if (!(a.coeff(k) == b.coeff(k))) return k;
    return -1;
}

IdentityReport compare_series(const std::string& name, const Series& a, const Series& b) {
    int bad = first_series_mismatch(a, b);
    return {name, bad < 0, bad};
}

IdentityReport compare_with_counts(const std::string& name, const Series& s,
                                   const std::string& stat_spec, int order, int ceiling) {
    int upto = std::min(order, ceiling);
    for (int n = 0; n <= upto; ++n) {
        Polynomial truth = aggregate(n, stat_spec, ceiling);
        if (!(s.coeff(n) == truth)) return {name, false, n};
    }
    return {name, true, -1};
}

} // namespace

std::vector<IdentityReport> Catalog::identity_checks(int order, int ceiling) const {
    std::vector<IdentityReport> out;
    const Series one_minus_z_inv = from_poly(zpoly({1, -1}), order).inverse();

    // (a) weight totals accumulate the plain totals
    out.push_back(compare_series("spw_total_is_cumulative_sp", expand("spw_total", order),
                                 expand("sp_total", order) * one_minus_z_inv));
    out.push_back(compare_series("apw_total_is_cumulative_ap", expand("apw_total", order),
                                 expand("ap_total", order) * one_minus_z_inv));

    // (b) pyramid-weight specialization t=r=1, w=y=q
    {
        std::map<VariableId, Polynomial> b{{var::t(), Polynomial(1)},
                                           {var::r(), Polynomial(1)},
                                           {var::w(), Polynomial::variable(var::q())},
                                           {var::y(), Polynomial::variable(var::q())}};
        out.push_back(compare_series("pyramid_weight_specialization",
                                     expand("sp_ap_spw_apw", order, b),
                                     expand("pyramid_weight", order)));
    }

    // (c) forgetting the weight sums recovers the two-variable form
    {
        std::map<VariableId, Polynomial> b{{var::w(), Polynomial(1)}, {var::y(), Polynomial(1)}};
        out.push_back(compare_series("sp_ap_from_weight_refinement", expand("sp_ap", order),
                                     expand("sp_ap_spw_apw", order, b)));
    }

    // (d) insertion-point substitution reproduces the weight-refined form
    {
        Series pea_ins = expand("pea_ins_by_weight", order);
        Series pt = indexed_profile_series('t', order);
        Series pr = indexed_profile_series('r', order);
        Series qval = (Series::one(order) - pt + pr).inverse();
        std::map<VariableId, Series> b{{var::q(), qval}};
        for (int i = 1; i <= order; ++i)
            b.emplace(var::p(static_cast<std::uint32_t>(i)),
                      Series::constant(
                          Polynomial::variable(var::r(static_cast<std::uint32_t>(i))), order));
        out.push_back(compare_series("pea_ins_substitution", pea_ins.substitute(b),
                                     expand("sp_ap_by_weight", order)));
    }

    // (e) no equal-height valley pairs matches uudu-avoidance counts
    out.push_back(compare_with_counts("sp_prime_zero_vs_uudu", expand("sp_prime_zero", order),
                                      "uudu_avoiding", order, ceiling));

    // (f) symmetric valley weight total matches peaks over hill-free paths
    out.push_back(compare_with_counts("svw_total_vs_hill_free_peaks",
                                      expand("svw_total", order), "hill_free_peaks", order,
                                      ceiling));

    // (g) the two strict-unimodal-valley forms agree
    out.push_back(compare_series("w_strict_unimodal_alt_form",
                                 expand("w_strict_unimodal", order),
                                 expand("w_strict_unimodal_alt", order)));

    // (h) weakly unimodal valley heights match height <= 5 counts
    out.push_back(compare_with_counts("w_weak_unimodal_vs_height_le_5",
                                      expand("w_weak_unimodal", order), "height_le_5", order,
                                      ceiling));

    // (i) the closed-form totals agree with symbolic derivatives at 1
    auto derivative_total = [&](const std::string& name, const std::string& total_id,
                                const std::string& dist_id, VariableId dvar,
                                const std::map<VariableId, Polynomial>& pre) {
        Series dist = expand(dist_id, order, pre);
        Series deriv = dist.derivative(dvar).substitute(
            std::map<VariableId, Polynomial>{{dvar, Polynomial(1)}});
        out.push_back(compare_series(name, expand(total_id, order), deriv));
    };
    derivative_total("sp_total_is_derivative", "sp_total", "sp_ap", var::t(),
                     {{var::r(), Polynomial(1)}});
    derivative_total("ap_total_is_derivative", "ap_total", "sp_ap", var::r(),
                     {{var::t(), Polynomial(1)}});
    derivative_total("spw_total_is_derivative", "spw_total", "sp_ap_spw_apw", var::w(),
                     {{var::t(), Polynomial(1)}, {var::r(), Polynomial(1)}, {var::y(), Polynomial(1)}});
    derivative_total("apw_total_is_derivative", "apw_total", "sp_ap_spw_apw", var::y(),
                     {{var::t(), Polynomial(1)}, {var::r(), Polynomial(1)}, {var::w(), Polynomial(1)}});
    derivative_total("sval_total_is_derivative", "sval_total", "sval", var::s(), {});
    derivative_total("svw_total_is_derivative", "svw_total", "sval_svw", var::w(),
                     {{var::s(), Polynomial(1)}});

    // (j) the refinements collapse to their base entries at 1
    auto refinement_at_one = [&](const std::string& name, const std::string& refined,
                                 VariableId v, const std::string& base) {
        std::map<VariableId, Polynomial> b{{v, Polynomial(1)}};
        out.push_back(
            compare_series(name, expand(refined, order, b), expand(base, order)));
    };
    refinement_at_one("w_weak_t_at_one", "w_weak_t", var::t(), "w_weak");
    refinement_at_one("w_weak_unimodal_t_at_one", "w_weak_unimodal_t", var::t(),
                      "w_weak_unimodal");
    refinement_at_one("m_weak_s_at_one", "m_weak_s", var::s(), "m_weak");
    refinement_at_one("m_weak_unimodal_s_at_one", "m_weak_unimodal_s", var::s(),
                      "m_weak_unimodal");

    return out;
}

void require_identities(const std::vector<IdentityReport>& reports) {
    for (const auto& r : reports)
        if (!r.ok) throw IdentityFailed(r.name, r.first_mismatch);
}

// A peak at height i needs semilength >= i, so levels beyond the truncation
// order may use any value consistent with it; indices are capped to keep the
// variable family finite.

CfLevelSpec peak_height_cf_levels(int order) {
    return [order](int k) {
        if (k > order) return Series::one(order);
        return Series::constant(Polynomial::variable(var::h(static_cast<std::uint32_t>(k))),
                                order);
    };
}

CfLevelSpec sval_cf_levels(int order) {
    Polynomial s_minus_1 = Polynomial::variable(var::s()) - Polynomial(1);
    return [order, s_minus_1](int k) {
        Polynomial block = s_minus_1 * (zp(1) * q_int(std::min(k, order + 1)));
        return (Series::one(order) - from_poly(block, order)).inverse();
    };
}

CfLevelSpec sval_svw_cf_levels(int order) {
    Polynomial sv = Polynomial::variable(var::s());
    return [order, sv](int k) {
        int cap = std::min(k, order + 1);
        Polynomial plain = zp(1) * q_int(cap); // z [k]_z
        Polynomial weighted;                   // sum_{j=1..k} w^j z^j, so s*w z [k]_{wz}
        for (int j = 1; j <= cap; ++j)
            weighted.add_term(Monomial::power(var::w(), static_cast<std::uint32_t>(j)) *
                                  Monomial::power(var::z(), static_cast<std::uint32_t>(j)),
                              Rational(1));
        Polynomial den = Polynomial(1) + plain - sv * weighted;
        return from_poly(den, order).inverse();
    };
}

} // namespace dyck
