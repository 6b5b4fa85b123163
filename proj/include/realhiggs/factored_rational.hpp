#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "realhiggs/laurent_poly.hpp"

namespace realhiggs {

/// Two-term polynomial scaled so its leading coefficient is 1.
class BinomialFactor {
public:
    /// Splits a two-term polynomial p into (f, s) with p = s * f.
    static std::pair<BinomialFactor, Rational> normalize(const LaurentPoly& p);

    const LaurentPoly& poly() const { return poly_; }
    std::size_t arity() const { return poly_.arity(); }

    friend bool operator==(const BinomialFactor& a, const BinomialFactor& b) { return a.poly_ == b.poly_; }
    friend std::strong_ordering operator<=>(const BinomialFactor& a, const BinomialFactor& b);

private:
    explicit BinomialFactor(LaurentPoly p) : poly_(std::move(p)) {}
    LaurentPoly poly_;
};

struct DenFactor {
    BinomialFactor factor;
    int mult = 1;
    friend bool operator==(const DenFactor&, const DenFactor&) = default;
};

/// num / prod(den), with the denominator a multiset of binomials kept in
/// sorted order. Not a canonical form: equal values may have different
/// representations, and nothing here computes a GCD. Sums use the multiset
/// least common multiple of the two denominators.
class FactoredRational {
public:
    explicit FactoredRational(std::size_t arity = 3) : num_(arity) {}
    explicit FactoredRational(LaurentPoly num) : num_(std::move(num)) {}

    static FactoredRational one(std::size_t arity) { return FactoredRational(LaurentPoly::constant(1, arity)); }

    const LaurentPoly& num() const { return num_; }
    const std::vector<DenFactor>& den() const { return den_; }
    std::size_t arity() const { return num_.arity(); }
    bool is_zero() const { return num_.is_zero(); }
    int den_factor_count() const;

    /// Appends a two-term polynomial to the denominator.
    void divide_by(const LaurentPoly& binomial, int mult = 1);
    /// Multiplies by p. A two-term p already present in the denominator
    /// cancels against it instead of growing the numerator.
    void multiply_by(const LaurentPoly& p);
    /// Tries exact division of the numerator by each denominator factor and
    /// drops those that divide. Returns the number of cancelled factors.
    int cancel_factors();

    FactoredRational& operator*=(const Rational& c) {
        num_ *= c;
        return *this;
    }
    friend FactoredRational operator*(const FactoredRational& a, const FactoredRational& b);
    friend FactoredRational operator+(const FactoredRational& a, const FactoredRational& b);
    friend FactoredRational operator-(const FactoredRational& a, const FactoredRational& b);
    FactoredRational operator-() const;

    std::string to_string() const;

    friend FactoredRational substitute_powers(const FactoredRational& f, int k);
    friend FactoredRational sum(std::span<const FactoredRational> parts, std::size_t arity);

private:
    LaurentPoly num_;
    std::vector<DenFactor> den_;
};

/// Sum over the multiset LCM of all denominators.
FactoredRational sum(std::span<const FactoredRational> parts, std::size_t arity);

/// Adams operation on numerator and on each denominator factor separately.
FactoredRational substitute_powers(const FactoredRational& f, int k);

/// Cancels every denominator factor into the numerator by exact division.
/// Throws NotPolynomial if some factor does not divide.
LaurentPoly rational_normalize(const FactoredRational& f);

}  // namespace realhiggs
