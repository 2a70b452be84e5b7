#pragma once

#include "dyckstat/polynomial.hpp"

#include <functional>
#include <map>
#include <vector>

namespace dyck {

/// Power series in z truncated at a fixed order N: coefficients of
/// z^0 .. z^N are exact multivariate polynomials in the marking variables
/// (never containing z itself).  Every operation is exact through z^N;
/// the order is preserved or explicitly reduced, never silently extended.
class Series {
public:
    explicit Series(int order);

    static Series zero(int order) { return Series(order); }
    static Series one(int order);
    static Series z(int order);
    static Series constant(const Rational& c, int order);
    static Series constant(const Polynomial& p, int order);
    /// Distribute a polynomial's z-powers into coefficient slots.  Powers of
    /// z beyond the order are dropped (exact under truncation semantics).
    static Series from_polynomial(const Polynomial& p, int order);

    int order() const { return order_; }
    const Polynomial& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    void set_coeff(int k, Polynomial p) { coeffs_.at(static_cast<std::size_t>(k)) = std::move(p); }

    bool is_zero() const;
    /// True when every coefficient is a plain number.
    bool coefficients_constant() const;
    bool coefficients_integral() const;

    Series operator-() const;
    Series operator+(const Series& other) const;
    Series operator-(const Series& other) const;
    Series operator*(const Series& other) const;
    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    Series operator*(const Rational& c) const;
    Series operator*(const Polynomial& p) const;
    friend bool operator==(const Series&, const Series&) = default;

    /// Multiplicative inverse; requires a nonzero *numeric* constant term.
    Series inverse() const;
    /// Square root with constant term +1; requires constant term exactly 1.
    Series sqrt() const;
    /// Multiply by z^k (order unchanged, top coefficients shift out).
    Series mul_z(int k = 1) const;
    /// Divide by z^k.  The k lowest coefficients must vanish; the order
    /// drops by k.  A nonzero low coefficient is a hard error.
    Series div_z(int k = 1) const;
    /// Truncate to a lower order.
    Series truncate(int order) const;

    Series derivative(VariableId v) const;

    /// Simultaneous substitution of series values for marking variables.
    /// Binding z itself is unsound under truncation and is rejected.
    Series substitute(const std::map<VariableId, Series>& bindings) const;
    /// Convenience: bind variables to polynomial values.
    Series substitute(const std::map<VariableId, Polynomial>& bindings) const;

    std::set<VariableId> variables() const;

private:
    int order_;
    std::vector<Polynomial> coeffs_;

    void check_same_order(const Series& other) const;
};

inline Series operator+(const Series& a, const Polynomial& p) {
    Series out = a;
    out.set_coeff(0, out.coeff(0) + p);
    return out;
}

/// q-integer [i] = 1 + z + ... + z^{i-1} as a polynomial in z.
Polynomial q_int(int i);
/// q-factorial [a]! = [a][a-1]...[1]; [0]! = 1.
Polynomial q_fact(int a);
/// Geometric block 1 + m + m^2 + ... + m^{i-1} over an arbitrary monomial.
Polynomial geometric_sum(const Monomial& m, int i);

/// Produces the local term h_k of a continued fraction level.
using CfLevelSpec = std::function<Series(int level)>;

/// Bottom-up evaluation of the continued fraction
///   1 / (1 - z (h_1 - 1) - z / (1 - z (h_2 - 1) - z / ...))
/// cut at `depth` levels with the tail replaced by 1.  Coefficients through
/// z^order are independent of depth once depth >= order + 1 because each
/// level carries a factor of z.
Series cf_eval_at_depth(const CfLevelSpec& levels, int depth, int order);

/// Evaluates at `depth` and `depth + 1` and demands agreement through
/// z^order (DepthTooShallow otherwise).
Series cf_eval(const CfLevelSpec& levels, int depth, int order);

} // namespace dyck
