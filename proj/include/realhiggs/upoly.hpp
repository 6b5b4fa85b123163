#pragma once

#include <string>
#include <utility>
#include <vector>

#include "realhiggs/laurent_poly.hpp"
#include "realhiggs/rational.hpp"

namespace realhiggs {

/// Dense polynomial in a single variable t with rational coefficients and
/// non-negative exponents. Used for Betti polynomials and symmetric-product
/// series coefficients.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);  // coeffs[k] multiplies t^k
    UPoly(std::initializer_list<std::int64_t> coeffs);
    static UPoly constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }
    static UPoly monomial(const Rational& c, int k);
    static UPoly t() { return monomial(Rational(1), 1); }

    /// Reads a polynomial in u (= t^{1/2}) of arity >= 3 that uses only u and
    /// has only even non-negative u-exponents. Throws OddUPower otherwise.
    static UPoly from_u_poly(const LaurentPoly& p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    int low_degree() const;
    bool is_zero() const { return c_.empty(); }
    Rational coefficient(int k) const;
    const std::vector<Rational>& coefficients() const { return c_; }
    bool has_integer_coefficients() const;
    Rational evaluate(const Rational& x) const;

    /// t^n p(1/t); requires n >= degree().
    UPoly reversed(int n) const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const Rational& c);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
    friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
    friend UPoly operator*(const Rational& c, UPoly a) { return a *= c; }
    UPoly operator-() const { return *this * Rational(-1); }

    friend bool operator==(const UPoly&, const UPoly&) = default;

    /// Nonzero (exponent, coefficient) pairs, highest exponent first.
    std::vector<std::pair<int, Rational>> terms() const;
    /// "4*t^10 - 56*t^9 + ... - 4*t^5"; "0" for zero.
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

using SignedPoincare = UPoly;

UPoly pow(const UPoly& p, unsigned n);
/// Exact quotient; throws NotDivisible on a nonzero remainder.
UPoly exact_divide(const UPoly& p, const UPoly& d);

}  // namespace realhiggs
