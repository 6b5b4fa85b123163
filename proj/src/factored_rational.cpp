#include "realhiggs/factored_rational.hpp"

#include <algorithm>
#include <map>

#include "realhiggs/errors.hpp"

namespace realhiggs {

std::pair<BinomialFactor, Rational> BinomialFactor::normalize(const LaurentPoly& p) {
    if (p.size() != 2)
        throw std::invalid_argument("BinomialFactor: expected exactly two terms, got " + p.to_string());
    Rational lead = p.leading().coef;
    LaurentPoly f = p * (Rational(1) / lead);
    return {BinomialFactor(std::move(f)), lead};
}

std::strong_ordering operator<=>(const BinomialFactor& a, const BinomialFactor& b) {
    if (auto c = a.poly_.arity() <=> b.poly_.arity(); c != 0) return c;
    const auto& ta = a.poly_.terms();
    const auto& tb = b.poly_.terms();
    for (std::size_t i = 0; i < 2; ++i) {
        if (auto c = ta[i].mono <=> tb[i].mono; c != 0) return c;
        if (auto c = ta[i].coef <=> tb[i].coef; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

namespace {

void insert_factor(std::vector<DenFactor>& den, const BinomialFactor& f, int mult) {
    auto it = std::lower_bound(den.begin(), den.end(), f,
                               [](const DenFactor& d, const BinomialFactor& key) { return d.factor < key; });
    if (it != den.end() && it->factor == f)
        it->mult += mult;
    else
        den.insert(it, DenFactor{f, mult});
}

}  // namespace

int FactoredRational::den_factor_count() const {
    int n = 0;
    for (const auto& d : den_) n += d.mult;
    return n;
}

void FactoredRational::divide_by(const LaurentPoly& binomial, int mult) {
    if (binomial.arity() != arity()) throw ArityMismatch("FactoredRational: factor arity mismatch");
    auto [f, s] = BinomialFactor::normalize(binomial);
    insert_factor(den_, f, mult);
    for (int i = 0; i < mult; ++i) num_ *= Rational(1) / s;
}

void FactoredRational::multiply_by(const LaurentPoly& p) {
    if (p.size() == 2) {
        auto [f, s] = BinomialFactor::normalize(p);
        auto it = std::find_if(den_.begin(), den_.end(), [&](const DenFactor& d) { return d.factor == f; });
        if (it != den_.end()) {
            if (--it->mult == 0) den_.erase(it);
            num_ *= s;
            return;
        }
    }
    num_ *= p;
}

int FactoredRational::cancel_factors() {
    int cancelled = 0;
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->mult > 0) {
            auto q = try_exact_divide(num_, it->factor.poly());
            if (!q) break;
            num_ = std::move(*q);
            --it->mult;
            ++cancelled;
        }
        if (it->mult == 0)
            it = den_.erase(it);
        else
            ++it;
    }
    return cancelled;
}

FactoredRational operator*(const FactoredRational& a, const FactoredRational& b) {
    FactoredRational r(a.num_ * b.num_);
    r.den_ = a.den_;
    for (const auto& d : b.den_) insert_factor(r.den_, d.factor, d.mult);
    return r;
}

FactoredRational sum(std::span<const FactoredRational> parts, std::size_t arity) {
    FactoredRational r(arity);
    std::vector<DenFactor> lcm;
    for (const auto& p : parts) {
        if (p.is_zero()) continue;
        for (const auto& d : p.den_) {
            auto it = std::lower_bound(lcm.begin(), lcm.end(), d.factor,
                                       [](const DenFactor& x, const BinomialFactor& key) { return x.factor < key; });
            if (it != lcm.end() && it->factor == d.factor)
                it->mult = std::max(it->mult, d.mult);
            else
                lcm.insert(it, d);
        }
    }
    LaurentPoly total(arity);
    for (const auto& p : parts) {
        if (p.is_zero()) continue;
        LaurentPoly n = p.num_;
        // Both lists are sorted: walk them together to find missing factors.
        auto j = p.den_.begin();
        for (const auto& d : lcm) {
            int have = 0;
            if (j != p.den_.end() && j->factor == d.factor) have = (j++)->mult;
            for (int k = have; k < d.mult; ++k) n *= d.factor.poly();
        }
        total += n;
    }
    r.num_ = std::move(total);
    if (!r.num_.is_zero()) r.den_ = std::move(lcm);
    return r;
}

FactoredRational operator+(const FactoredRational& a, const FactoredRational& b) {
    const FactoredRational parts[] = {a, b};
    return sum(parts, a.arity());
}

FactoredRational FactoredRational::operator-() const {
    FactoredRational r = *this;
    r.num_ = -r.num_;
    return r;
}

FactoredRational operator-(const FactoredRational& a, const FactoredRational& b) { return a + (-b); }

FactoredRational substitute_powers(const FactoredRational& f, int k) {
    FactoredRational r(substitute_powers(f.num_, k));
    for (const auto& d : f.den_) {
        // psi_k keeps the leading term leading and the coefficients fixed,
        // so the image is still normalized.
        auto [bf, s] = BinomialFactor::normalize(substitute_powers(d.factor.poly(), k));
        insert_factor(r.den_, bf, d.mult);
    }
    return r;
}

std::string FactoredRational::to_string() const {
    std::string s = "(" + num_.to_string() + ")";
    for (const auto& d : den_) {
        s += " / (" + d.factor.poly().to_string() + ")";
        if (d.mult != 1) s += "^" + std::to_string(d.mult);
    }
    return s;
}

LaurentPoly rational_normalize(const FactoredRational& f) {
    LaurentPoly n = f.num();
    for (const auto& d : f.den()) {
        for (int k = 0; k < d.mult; ++k) {
            try {
                n = exact_divide(n, d.factor.poly());
            } catch (const NotDivisible& e) {
                throw NotPolynomial("rational_normalize: denominator factor " + d.factor.poly().to_string() +
                                    " does not cancel (" + e.context + ")");
            }
        }
    }
    return n;
}

}  // namespace realhiggs
