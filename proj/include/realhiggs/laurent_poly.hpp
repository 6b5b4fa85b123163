#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "realhiggs/monomial.hpp"
#include "realhiggs/rational.hpp"

namespace realhiggs {

/// Sparse multivariate Laurent polynomial over the rationals.
///
/// Terms are kept sorted by descending lexicographic monomial order with no
/// zero coefficients, so two polynomials are equal exactly when their term
/// vectors are. The arity (number of live variables) is fixed per object and
/// mixing arities is an error.
class LaurentPoly {
public:
    struct Term {
        Monomial mono;
        Rational coef;
        friend bool operator==(const Term&, const Term&) = default;
    };

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t arity) : arity_(arity) {}

    static LaurentPoly constant(const Rational& c, std::size_t arity);
    static LaurentPoly var(VarId v, std::size_t arity);
    static LaurentPoly monomial(const Rational& c, const Monomial& m, std::size_t arity);
    /// Sorts, merges duplicates and drops zeros.
    static LaurentPoly from_terms(std::size_t arity, std::vector<Term> terms);

    std::size_t arity() const { return arity_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }
    /// Coefficient of the given monomial (zero when absent).
    Rational coefficient(const Monomial& m) const;

    /// (min, max) exponent of variable `var` over all terms; (0, 0) for zero.
    std::pair<int, int> degree_range(std::size_t var) const;
    /// True when every term has exponent 0 in `var`.
    bool free_of(std::size_t var) const;

    /// Same polynomial in a different arity; throws ArityMismatch if a dropped
    /// variable is in use.
    LaurentPoly with_arity(std::size_t arity) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    LaurentPoly operator-() const;

    /// Multiplies by c * m; keeps term order.
    LaurentPoly shifted(const Monomial& m, const Rational& c = Rational(1)) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    /// Canonical text: terms in descending monomial order joined by " + ",
    /// each "num/den" followed by "*var" or "*var^e" factors; "0" for zero.
    std::string to_string() const;
    static LaurentPoly parse(std::string_view text, std::size_t arity);

private:
    friend LaurentPoly merge_combine(const LaurentPoly&, const LaurentPoly&, bool);
    std::size_t arity_ = 3;
    std::vector<Term> terms_;
};

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly pow(const LaurentPoly& p, unsigned n);

/// Exact quotient p / d in the Laurent ring; throws NotDivisible when d does
/// not divide p and std::domain_error when d is zero.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d);
/// As exact_divide, but returns nullopt instead of throwing NotDivisible.
std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& p, const LaurentPoly& d);

/// Adams operation: every variable v replaced by v^k.
LaurentPoly substitute_powers(const LaurentPoly& p, int k);

/// Image of one source variable under a monomial substitution: coef * mono.
struct MonomialImage {
    Rational coef{1};
    Monomial mono;
};

/// Ring map sending source variable i to images[i] (one image per source
/// variable), landing in `target_arity` variables.
LaurentPoly substitute_monomials(const LaurentPoly& p, std::span<const MonomialImage> images,
                                 std::size_t target_arity);

/// Identity images for `arity` variables; callers overwrite the slots they map.
std::vector<MonomialImage> identity_images(std::size_t arity);

}  // namespace realhiggs
