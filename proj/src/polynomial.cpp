#include "dyckstat/polynomial.hpp"

#include "dyckstat/errors.hpp"

#include <algorithm>
#include <sstream>

namespace dyck {

Monomial::Monomial(std::initializer_list<Factor> factors) {
    for (const auto& f : factors) {
        if (f.exp == 0) continue;
        factors_.push_back(f);
    }
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return a.var < b.var; });
    for (std::size_t i = 1; i < factors_.size(); ++i)
        if (factors_[i - 1].var == factors_[i].var)
            throw InvalidArgument("repeated variable in monomial");
}

Monomial Monomial::power(VariableId v, std::uint32_t e) {
    Monomial m;
    if (e > 0) m.factors_.push_back({v, e});
    return m;
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& f : factors_) d += f.exp;
    return d;
}

std::uint32_t Monomial::degree_in(VariableId v) const {
    for (const auto& f : factors_)
        if (f.var == v) return f.exp;
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    auto a = factors_.begin(), ae = factors_.end();
    auto b = other.factors_.begin(), be = other.factors_.end();
    while (a != ae && b != be) {
        if (a->var < b->var)
            out.factors_.push_back(*a++);
        else if (b->var < a->var)
            out.factors_.push_back(*b++);
        else {
            out.factors_.push_back({a->var, a->exp + b->exp});
            ++a, ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, ae);
    out.factors_.insert(out.factors_.end(), b, be);
    return out;
}

bool Monomial::operator<(const Monomial& other) const {
    std::uint64_t da = total_degree(), db = other.total_degree();
    if (da != db) return da > db;
    auto a = factors_.begin(), ae = factors_.end();
    auto b = other.factors_.begin(), be = other.factors_.end();
    while (a != ae && b != be) {
        if (a->var != b->var) return a->var < b->var;
        if (a->exp != b->exp) return a->exp > b->exp;
        ++a, ++b;
    }
    // Equal total degree and one factor list a prefix of the other forces
    // equality, so reaching here means the monomials are identical.
    return false;
}

std::string Monomial::to_string() const {
    if (is_one()) return "1";
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty()) out += "*";
        out += f.var.name();
        if (f.exp > 1) out += "^" + std::to_string(f.exp);
    }
    return out;
}

Polynomial::Polynomial(int c) {
    if (c != 0) terms_.emplace(Monomial::one(), Rational(c));
}

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial::one(), c);
}

Polynomial Polynomial::variable(VariableId v, std::uint32_t exp) {
    Polynomial p;
    p.terms_.emplace(Monomial::power(v, exp), Rational(1));
    return p;
}

Polynomial Polynomial::term(const Rational& c, Monomial m) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_integral() const {
    for (const auto& [m, c] : terms_)
        if (!dyck::is_integral(c)) return false;
    return true;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

const Rational* Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    out += other;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out = *this;
    out -= other;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return {};
    // Collect raw products, sort, then merge runs of equal monomials; this
    // beats repeated map insertion when both factors are large.
    std::vector<std::pair<Monomial, Rational>> prods;
    prods.reserve(terms_.size() * other.terms_.size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            prods.emplace_back(ma * mb, ca * cb);
    std::sort(prods.begin(), prods.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Polynomial out;
    std::size_t i = 0;
    while (i < prods.size()) {
        Rational sum = std::move(prods[i].second);
        std::size_t j = i + 1;
        while (j < prods.size() && prods[j].first == prods[i].first)
            sum += prods[j++].second;
        if (sum != 0)
            out.terms_.emplace_hint(out.terms_.end(), std::move(prods[i].first),
                                    std::move(sum));
        i = j;
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return {};
    Polynomial out;
    for (const auto& [m, coeff] : terms_)
        out.terms_.emplace(m, coeff * c);
    return out;
}

Polynomial Polynomial::derivative(VariableId v) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m.degree_in(v);
        if (e == 0) continue;
        Monomial reduced;
        for (const auto& f : m.factors()) {
            if (f.var == v) {
                if (f.exp > 1) reduced = reduced * Monomial::power(v, f.exp - 1);
            } else {
                reduced = reduced * Monomial::power(f.var, f.exp);
            }
        }
        out.add_term(reduced, c * e);
    }
    return out;
}

Polynomial Polynomial::substitute(const std::map<VariableId, Polynomial>& bindings) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Polynomial term(c);
        for (const auto& f : m.factors()) {
            auto it = bindings.find(f.var);
            if (it == bindings.end()) {
                term *= Polynomial::variable(f.var, f.exp);
            } else {
                Polynomial pw(1);
                for (std::uint32_t k = 0; k < f.exp; ++k) pw *= it->second;
                term *= pw;
            }
        }
        out += term;
    }
    return out;
}

Rational Polynomial::evaluate_all_ones() const {
    Rational sum = 0;
    for (const auto& [m, c] : terms_) sum += c;
    return sum;
}

std::set<VariableId> Polynomial::variables() const {
    std::set<VariableId> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& f : m.factors()) vs.insert(f.var);
    return vs;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (m.is_one()) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << m.to_string();
        }
        first = false;
    }
    return os.str();
}

} // namespace dyck
