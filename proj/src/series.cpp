#include "dyckstat/series.hpp"

#include "dyckstat/errors.hpp"

#include <algorithm>

namespace dyck {

Series::Series(int order) : order_(order) {
    if (order < 0) throw InvalidArgument("series order must be >= 0");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series Series::one(int order) { return constant(Rational(1), order); }

Series Series::z(int order) {
    Series s(order);
    if (order >= 1) s.coeffs_[1] = Polynomial(1);
    return s;
}

Series Series::constant(const Rational& c, int order) {
    Series s(order);
    s.coeffs_[0] = Polynomial(c);
    return s;
}

Series Series::constant(const Polynomial& p, int order) {
    Series s(order);
    s.coeffs_[0] = p;
    return s;
}

Series Series::from_polynomial(const Polynomial& p, int order) {
    Series s(order);
    const VariableId zvar = var::z();
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t ze = m.degree_in(zvar);
        if (static_cast<int>(ze) > order) continue;
        Monomial rest;
        for (const auto& f : m.factors())
            if (f.var != zvar) rest = rest * Monomial::power(f.var, f.exp);
        s.coeffs_[ze].add_term(rest, c);
    }
    return s;
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Polynomial& p) { return p.is_zero(); });
}

bool Series::coefficients_constant() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Polynomial& p) { return p.is_constant(); });
}

bool Series::coefficients_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Polynomial& p) { return p.is_integral(); });
}

void Series::check_same_order(const Series& other) const {
    if (order_ != other.order_)
        throw OrderMismatch("series orders differ: " + std::to_string(order_) + " vs " +
                            std::to_string(other.order_));
}

Series Series::operator-() const {
    Series out(order_);
    for (int k = 0; k <= order_; ++k) out.coeffs_[k] = -coeffs_[k];
    return out;
}

Series Series::operator+(const Series& other) const {
    check_same_order(other);
    Series out(order_);
    for (int k = 0; k <= order_; ++k) out.coeffs_[k] = coeffs_[k] + other.coeffs_[k];
    return out;
}

Series Series::operator-(const Series& other) const {
    check_same_order(other);
    Series out(order_);
    for (int k = 0; k <= order_; ++k) out.coeffs_[k] = coeffs_[k] - other.coeffs_[k];
    return out;
}

Series& Series::operator+=(const Series& other) {
    check_same_order(other);
    for (int k = 0; k <= order_; ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

Series& Series::operator-=(const Series& other) {
    check_same_order(other);
    for (int k = 0; k <= order_; ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

Series Series::operator*(const Series& other) const {
    check_same_order(other);
    Series out(order_);
    for (int i = 0; i <= order_; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= order_; ++j) {
            if (other.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return out;
}

Series Series::operator*(const Rational& c) const {
    Series out(order_);
    for (int k = 0; k <= order_; ++k) out.coeffs_[k] = coeffs_[k] * c;
    return out;
}

Series Series::operator*(const Polynomial& p) const {
    Series out(order_);
    for (int k = 0; k <= order_; ++k) out.coeffs_[k] = coeffs_[k] * p;
    return out;
}

Series Series::inverse() const {
    const Polynomial& c0 = coeffs_[0];
    if (!c0.is_constant() || c0.constant_value() == 0)
        throw NonUnitConstantTerm("series inverse requires a nonzero numeric constant term");
    Rational inv0 = Rational(1) / c0.constant_value();
    Series out(order_);
    out.coeffs_[0] = Polynomial(inv0);
    // f*g = 1:  g_k = -1/f_0 * sum_{j=1}^{k} f_j g_{k-j}
    for (int k = 1; k <= order_; ++k) {
        Polynomial acc;
        for (int j = 1; j <= k; ++j) {
            if (coeffs_[j].is_zero()) continue;
            acc += coeffs_[j] * out.coeffs_[k - j];
        }
        out.coeffs_[k] = acc * (-inv0);
    }
    return out;
}

Series Series::sqrt() const {
    const Polynomial& c0 = coeffs_[0];
    if (!c0.is_constant() || c0.constant_value() != 1)
        throw BadConstantTerm("series sqrt requires constant term 1");
    Series out(order_);
    out.coeffs_[0] = Polynomial(1);
    // g^2 = f with g_0 = 1:  g_k = (f_k - sum_{j=1}^{k-1} g_j g_{k-j}) / 2
    const Rational half(1, 2);
    for (int k = 1; k <= order_; ++k) {
        Polynomial acc = coeffs_[k];
        for (int j = 1; j < k; ++j) {
            if (out.coeffs_[j].is_zero()) continue;
            acc -= out.coeffs_[j] * out.coeffs_[k - j];
        }
        out.coeffs_[k] = acc * half;
    }
    return out;
}

Series Series::mul_z(int k) const {
    if (k < 0) throw InvalidArgument("mul_z needs k >= 0");
    Series out(order_);
    for (int j = order_; j >= k; --j) out.coeffs_[j] = coeffs_[j - k];
    return out;
}

Series Series::div_z(int k) const {
    if (k < 0 || k > order_) throw InvalidArgument("div_z needs 0 <= k <= order");
    for (int j = 0; j < k; ++j)
        if (!coeffs_[j].is_zero())
            throw NonDivisibleByZ("division by z^" + std::to_string(k) +
                                  ": nonzero coefficient at z^" + std::to_string(j));
    Series out(order_ - k);
    for (int j = k; j <= order_; ++j) out.coeffs_[j - k] = coeffs_[j];
    return out;
}

Series Series::truncate(int order) const {
    if (order > order_)
        throw TruncationUnsound("cannot extend a truncated series from order " +
                                std::to_string(order_) + " to " + std::to_string(order));
    Series out(order);
    for (int k = 0; k <= order; ++k) out.coeffs_[k] = coeffs_[k];
    return out;
}

Series Series::derivative(VariableId v) const {
    Series out(order_);
    for (int k = 0; k <= order_; ++k) out.coeffs_[k] = coeffs_[k].derivative(v);
    return out;
}

Series Series::substitute(const std::map<VariableId, Series>& bindings) const {
    for (const auto& [v, val] : bindings) {
        if (v.is_z())
            throw TruncationUnsound("cannot rebind the series variable z");
        if (val.order() != order_)
            throw OrderMismatch("binding for " + v.name() + " has mismatched order");
    }
    Series out(order_);
    // Cache powers of each bound value as they are needed.
    std::map<VariableId, std::vector<Series>> powers;
    auto power_of = [&](VariableId v, std::uint32_t e) -> const Series& {
        auto& tower = powers[v];
        if (tower.empty()) tower.push_back(Series::one(order_));
        while (tower.size() <= e) tower.push_back(tower.back() * bindings.at(v));
        return tower[e];
    };
    for (int k = 0; k <= order_; ++k) {
        for (const auto& [m, c] : coeffs_[k].terms()) {
            Series term = Series::constant(c, order_);
            Monomial unbound;
            for (const auto& f : m.factors()) {
                if (bindings.contains(f.var))
                    term = term * power_of(f.var, f.exp);
                else
                    unbound = unbound * Monomial::power(f.var, f.exp);
            }
            if (!unbound.is_one()) term = term * Polynomial::term(Rational(1), unbound);
            out += term.mul_z(k);
        }
    }
    return out;
}

Series Series::substitute(const std::map<VariableId, Polynomial>& bindings) const {
    std::map<VariableId, Series> lifted;
    for (const auto& [v, p] : bindings) lifted.emplace(v, Series::from_polynomial(p, order_));
    return substitute(lifted);
}

std::set<VariableId> Series::variables() const {
    std::set<VariableId> vs;
    for (int k = 0; k <= order_; ++k) {
        auto cv = coeffs_[k].variables();
        vs.insert(cv.begin(), cv.end());
    }
    return vs;
}

Polynomial q_int(int i) {
    if (i < 1) throw InvalidArgument("q_int needs i >= 1");
    return geometric_sum(Monomial::power(var::z(), 1), i);
}

Polynomial q_fact(int a) {
    if (a < 0) throw InvalidArgument("q_fact needs a >= 0");
    Polynomial out(1);
    for (int i = 1; i <= a; ++i) out *= q_int(i);
    return out;
}

Polynomial geometric_sum(const Monomial& m, int i) {
    Polynomial out;
    Monomial pw;
    for (int j = 0; j < i; ++j) {
        out.add_term(pw, Rational(1));
        pw = pw * m;
    }
    return out;
}

Series cf_eval_at_depth(const CfLevelSpec& levels, int depth, int order) {
    if (depth < 1) throw InvalidArgument("continued fraction depth must be >= 1");
    Series value = Series::one(order);
    for (int k = depth; k >= 1; --k) {
        Series h = levels(k);
        if (h.order() != order)
            throw OrderMismatch("continued fraction level has mismatched order");
        Series den = Series::one(order) - (h - Series::one(order)).mul_z() - value.mul_z();
        try {
            value = den.inverse();
        } catch (const NonUnitConstantTerm&) {
            throw NonUnitDenominator("continued fraction level " + std::to_string(k) +
                                     " has a non-invertible denominator");
        }
    }
    return value;
}

Series cf_eval(const CfLevelSpec& levels, int depth, int order) {
    Series a = cf_eval_at_depth(levels, depth, order);
    Series b = cf_eval_at_depth(levels, depth + 1, order);
    if (!(a == b))
        throw DepthTooShallow("continued fraction depth " + std::to_string(depth) +
                              " is not stable through z^" + std::to_string(order));
    return a;
}

} // namespace dyck
