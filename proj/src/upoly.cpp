#include "realhiggs/upoly.hpp"

#include <stdexcept>

#include "realhiggs/errors.hpp"

namespace realhiggs {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<std::int64_t> coeffs) {
    for (auto c : coeffs) c_.emplace_back(c);
    trim();
}

UPoly UPoly::monomial(const Rational& c, int k) {
    if (k < 0) throw std::invalid_argument("UPoly: negative exponent");
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return UPoly(std::move(v));
}

UPoly UPoly::from_u_poly(const LaurentPoly& p) {
    const std::size_t u = VarId::u().index();
    std::vector<Rational> c;
    for (const auto& t : p.terms()) {
        for (std::size_t v = 0; v < p.arity(); ++v)
            if (v != u && t.mono[v] != 0)
                throw InternalAssertion("UPoly::from_u_poly: variable " + var_name(v) + " still present");
        int e = t.mono[u];
        if (e % 2 != 0) throw OddUPower("odd power u^" + std::to_string(e) + " in a specialized result");
        if (e < 0) throw InternalAssertion("negative power of t in a specialized result");
        std::size_t k = static_cast<std::size_t>(e / 2);
        if (c.size() <= k) c.resize(k + 1);
        c[k] += t.coef;
    }
    return UPoly(std::move(c));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int UPoly::low_degree() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return static_cast<int>(k);
    return -1;
}

Rational UPoly::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(k)];
}

bool UPoly::has_integer_coefficients() const {
    for (const auto& c : c_)
        if (!c.is_integer()) return false;
    return true;
}

Rational UPoly::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly UPoly::reversed(int n) const {
    if (n < degree()) throw std::invalid_argument("UPoly::reversed: n below degree");
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) v[static_cast<std::size_t>(n) - k] = c_[k];
    return UPoly(std::move(v));
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& c) {
    for (auto& x : c_) x *= c;
    trim();
    return *this;
}

std::vector<std::pair<int, Rational>> UPoly::terms() const {
    std::vector<std::pair<int, Rational>> out;
    for (int k = degree(); k >= 0; --k)
        if (!c_[static_cast<std::size_t>(k)].is_zero()) out.emplace_back(k, c_[static_cast<std::size_t>(k)]);
    return out;
}

std::string UPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms()) {
        Rational a = c.sign() < 0 ? -c : c;
        if (first)
            s += c.sign() < 0 ? "-" : "";
        else
            s += c.sign() < 0 ? " - " : " + ";
        first = false;
        std::string mag = a.to_short_string();
        if (k == 0) {
            s += mag;
            continue;
        }
        if (!a.is_one()) s += mag + "*";
        s += "t";
        if (k != 1) s += "^" + std::to_string(k);
    }
    return s;
}

UPoly pow(const UPoly& p, unsigned n) {
    UPoly r = UPoly::constant(1);
    for (unsigned i = 0; i < n; ++i) r *= p;
    return r;
}

UPoly exact_divide(const UPoly& p, const UPoly& d) {
    if (d.is_zero()) throw std::domain_error("exact_divide: zero divisor");
    if (p.is_zero()) return p;
    std::vector<Rational> rem = p.coefficients();
    const auto& dc = d.coefficients();
    int dd = d.degree();
    if (p.degree() < dd) throw NotDivisible("exact_divide: degree of divisor exceeds dividend", p.to_string());
    std::vector<Rational> quo(static_cast<std::size_t>(p.degree() - dd + 1));
    const Rational inv = Rational(1) / dc.back();
    for (int k = p.degree() - dd; k >= 0; --k) {
        Rational c = rem[static_cast<std::size_t>(k + dd)] * inv;
        if (c.is_zero()) continue;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * dc[static_cast<std::size_t>(j)];
        quo[static_cast<std::size_t>(k)] = std::move(c);
    }
    for (const auto& r : rem)
        if (!r.is_zero())
            throw NotDivisible("exact_divide: " + d.to_string() + " does not divide", "dividend " + p.to_string());
    return UPoly(std::move(quo));
}

}  // namespace realhiggs
