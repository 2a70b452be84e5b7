#pragma once

#include "dyckstat/rational.hpp"
#include "dyckstat/variable.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dyck {

/// Product of variable powers, kept sorted by variable.  The empty monomial
/// is the constant 1.
class Monomial {
public:
    struct Factor {
        VariableId var;
        std::uint32_t exp;
        friend auto operator<=>(const Factor&, const Factor&) = default;
    };

    Monomial() = default;
    Monomial(std::initializer_list<Factor> factors);
    static Monomial one() { return {}; }
    static Monomial power(VariableId v, std::uint32_t e);

    bool is_one() const { return factors_.empty(); }
    std::uint64_t total_degree() const;
    std::uint32_t degree_in(VariableId v) const;
    const auto& factors() const { return factors_; }

    Monomial operator*(const Monomial& other) const;

    /// Canonical term order: higher total degree first, ties broken
    /// lexicographically (smaller variable first, then larger exponent).
    /// "Less" means "prints first".
    bool operator<(const Monomial& other) const;
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string() const;

private:
    boost::container::small_vector<Factor, 6> factors_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are stored in canonical order; zero coefficients are never kept.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int c);
    Polynomial(const Rational& c);
    static Polynomial variable(VariableId v, std::uint32_t exp = 1);
    static Polynomial term(const Rational& c, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    Rational constant_value() const;
    bool is_integral() const;
    std::uint64_t total_degree() const;
    std::size_t term_count() const { return terms_.size(); }

    const Rational* coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator*=(const Polynomial& other);
    Polynomial operator*(const Rational& c) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial derivative(VariableId v) const;

    /// Substitute polynomials for variables (simultaneously).
    Polynomial substitute(const std::map<VariableId, Polynomial>& bindings) const;
    /// Set every variable present to 1 and return the resulting constant.
    Rational evaluate_all_ones() const;

    std::set<VariableId> variables() const;
    /// Ordered (monomial, coefficient) view, canonical order.
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    std::string to_string() const;

private:
    std::map<Monomial, Rational> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

} // namespace dyck
