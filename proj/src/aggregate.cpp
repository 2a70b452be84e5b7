#include "dyckstat/aggregate.hpp"

#include "dyckstat/errors.hpp"

namespace dyck {

namespace {

Monomial weight_profile(char letter, const std::vector<int>& counts) {
    Monomial m;
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i] > 0)
            m = m * Monomial::power(VariableId(letter, static_cast<std::uint32_t>(i)),
                                    static_cast<std::uint32_t>(counts[i]));
    return m;
}

Polynomial mono(Monomial m) { return Polynomial::term(Rational(1), std::move(m)); }

std::map<std::string, StatSpec> build_specs() {
    using P = const DyckPath&;
    using S = const StatProfile&;
    using F = const ClassFlags&;
    std::map<std::string, StatSpec> specs;

    specs["catalan"] = [](P, S, F) { return Polynomial(1); };

    specs["sp_ap_by_weight"] = [](P, S st, F) {
        return mono(weight_profile('t', st.sp_by_weight) * weight_profile('r', st.ap_by_weight));
    };
    specs["sp_ap_spw_apw"] = [](P, S st, F) {
        Monomial m = Monomial::power(var::t(), st.sp) * Monomial::power(var::r(), st.ap) *
                     Monomial::power(var::w(), static_cast<std::uint32_t>(st.spw)) *
                     Monomial::power(var::y(), static_cast<std::uint32_t>(st.apw));
        return mono(m);
    };
    specs["sp_ap"] = [](P, S st, F) {
        return mono(Monomial::power(var::t(), st.sp) * Monomial::power(var::r(), st.ap));
    };
    specs["sp_prime"] = [](P, S st, F) { return mono(Monomial::power(var::t(), st.sp_prime)); };
    specs["sp_prime_zero"] = [](P, S st, F) { return Polynomial(st.sp_prime == 0 ? 1 : 0); };
    specs["sp_total"] = [](P, S st, F) { return Polynomial(st.sp); };
    specs["ap_total"] = [](P, S st, F) { return Polynomial(st.ap); };
    specs["pyramid_weight"] = [](P, S st, F) {
        return mono(Monomial::power(var::q(), static_cast<std::uint32_t>(st.spw + st.apw)));
    };
    specs["spw_total"] = [](P, S st, F) { return Polynomial(Rational(st.spw)); };
    specs["apw_total"] = [](P, S st, F) { return Polynomial(Rational(st.apw)); };
    specs["peak_height_cf"] = [](P, S st, F) {
        return mono(weight_profile('h', st.ph_by_height));
    };
    specs["sval"] = [](P, S st, F) { return mono(Monomial::power(var::s(), st.sval)); };
    specs["sval_total"] = [](P, S st, F) { return Polynomial(st.sval); };
    specs["sval_svw"] = [](P, S st, F) {
        return mono(Monomial::power(var::s(), st.sval) *
                    Monomial::power(var::w(), static_cast<std::uint32_t>(st.svw)));
    };
    specs["svw_total"] = [](P, S st, F) { return Polynomial(Rational(st.svw)); };

    specs["w_strict"] = [](P, S, F f) { return Polynomial(f.w_strict ? 1 : 0); };
    specs["w_weak"] = [](P, S, F f) { return Polynomial(f.w_weak ? 1 : 0); };
    specs["w_weak_t"] = [](P, S st, F f) {
        return f.w_weak ? mono(Monomial::power(var::t(), st.sp_prime)) : Polynomial();
    };
    specs["w_strict_unimodal"] = [](P, S, F f) { return Polynomial(f.w_strict_unimodal ? 1 : 0); };
    specs["w_strict_unimodal_alt"] = [](P, S, F f) {
        return Polynomial(f.w_strict_unimodal ? 1 : 0);
    };
    specs["w_weak_unimodal"] = [](P, S, F f) { return Polynomial(f.w_weak_unimodal ? 1 : 0); };
    specs["w_weak_unimodal_t"] = [](P, S st, F f) {
        return f.w_weak_unimodal ? mono(Monomial::power(var::t(), st.sp_prime)) : Polynomial();
    };
    specs["m_strict"] = [](P, S, F f) { return Polynomial(f.m_strict ? 1 : 0); };
    specs["m_weak"] = [](P, S, F f) { return Polynomial(f.m_weak ? 1 : 0); };
    specs["m_weak_s"] = [](P, S st, F f) {
        return f.m_weak ? mono(Monomial::power(var::s(), st.sval)) : Polynomial();
    };
    specs["m_strict_unimodal"] = [](P, S, F f) { return Polynomial(f.m_strict_unimodal ? 1 : 0); };
    specs["m_weak_unimodal"] = [](P, S, F f) { return Polynomial(f.m_weak_unimodal ? 1 : 0); };
    specs["m_weak_unimodal_s"] = [](P, S st, F f) {
        return f.m_weak_unimodal ? mono(Monomial::power(var::s(), st.sval)) : Polynomial();
    };

    // Auxiliary counts used by the cross-identity checks.
    specs["uudu_avoiding"] = [](P, S st, F) { return Polynomial(st.avoids_uudu ? 1 : 0); };
    specs["hill_free_peaks"] = [](P, S st, F) {
        return Polynomial(st.hill_free ? st.pea : 0);
    };
    specs["height_le_5"] = [](P p, S, F) { return Polynomial(path_height(p) <= 5 ? 1 : 0); };
    specs["pea_total"] = [](P, S st, F) { return Polynomial(st.pea); };

    return specs;
}

} // namespace

const std::map<std::string, StatSpec>& stat_specs() {
    static const std::map<std::string, StatSpec> specs = build_specs();
    return specs;
}

Polynomial aggregate(int n, const StatSpec& spec, int ceiling) {
    if (n < 0) throw InvalidArgument("semilength must be >= 0");
    if (n > ceiling)
        throw ResourceBound("semilength " + std::to_string(n) +
                            " exceeds the brute-force ceiling " + std::to_string(ceiling));
    Polynomial sum;
    for_each_path(n, [&](const DyckPath& p) {
        StatProfile st = analyze(p);
        ClassFlags f = class_flags(p, st);
        sum += spec(p, st, f);
    });
    return sum;
}

Polynomial aggregate(int n, const std::string& spec, int ceiling) {
    const auto& specs = stat_specs();
    auto it = specs.find(spec);
    if (it == specs.end()) throw UnknownStatSpec("no statistic family named '" + spec + "'");
    return aggregate(n, it->second, ceiling);
}

} // namespace dyck
