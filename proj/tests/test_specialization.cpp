#include <doctest.h>

#include "realhiggs/errors.hpp"
#include "realhiggs/specialization.hpp"

using namespace realhiggs;

namespace {

const UPoly t = UPoly::t();
const UPoly one_minus_t{1, -1};
const UPoly t_minus_one{-1, 1};

UPoly tpow(int k) { return UPoly::monomial(1, k); }

}  // namespace

TEST_CASE("rank one real and complex closed forms") {
    for (int g = 1; g <= 4; ++g) {
        for (int b = 0; b <= g; ++b) {
            UPoly expected = pow(-t, g) * UPoly::constant(1 << b) * pow(one_minus_t, g);
            CHECK(real_betti(g, b, 1).poly == expected);
        }
        CHECK(complex_betti(g, 1).poly == tpow(2 * g) * pow(one_minus_t, 2 * g));
    }
}

TEST_CASE("rank two values from an independent symbolic computation") {
    CHECK(real_betti(1, 0, 2).poly == t * t_minus_one);
    CHECK(real_betti(1, 1, 2).poly == UPoly::constant(2) * t * t_minus_one);
    CHECK(real_betti(2, 0, 2).poly == tpow(5) * pow(t_minus_one, 3) * UPoly{2, 0, 1});
    CHECK(real_betti(2, 1, 2).poly == UPoly::constant(2) * tpow(5) * pow(t_minus_one, 3) * UPoly{3, -1, 1});
    CHECK(real_betti(2, 2, 2).poly == UPoly::constant(4) * tpow(5) * pow(one_minus_t, 2) * UPoly{-4, 6, -3, 1});
    CHECK(real_betti(3, 1, 2).poly ==
          UPoly::constant(2) * tpow(9) * pow(t_minus_one, 5) * UPoly{5, -2, 3, 0, 1});
}

TEST_CASE("genus 2 two-circle value is dual to the reference value") {
    // The reference value 4t^5(1-t)^2(4t^3-6t^2+3t-1) equals
    // -t^15 P(1/t) for the computed P.
    UPoly reference = UPoly::constant(4) * tpow(5) * pow(one_minus_t, 2) * UPoly{-1, 3, -6, 4};
    UPoly computed = real_betti(2, 2, 2).poly;
    CHECK(computed != reference);
    CHECK(-reference.reversed(15) == computed);
}

TEST_CASE("degree law") {
    for (int g = 1; g <= 3; ++g)
        for (int r = 1; r <= 3; ++r) CHECK(real_betti(g, g, r).poly.degree() == moduli_dimension(g, r));
    CHECK(moduli_dimension(1, 2) == 2);
    CHECK(moduli_dimension(2, 2) == 10);
}

TEST_CASE("fast pipeline agrees with generic") {
    for (int g = 1; g <= 3; ++g)
        for (int b = 0; b <= g; ++b)
            for (int r = 1; r <= 2 + (g < 3); ++r)
                CHECK(real_betti(g, b, r, Pipeline::FastSpecialized).poly == real_betti(g, b, r).poly);
}

TEST_CASE("early alpha specialization is the collapsed H") {
    const int g = 2, b = 1;
    AlphaLayout layout = AlphaLayout::collapsed(g, b);
    TSeries log_s = specialize_alpha_early(g, b, 2);
    for (int r = 1; r <= 2; ++r) {
        FactoredRational f = log_s[r];
        LaurentPoly one = LaurentPoly::constant(1, layout.arity);
        f.multiply_by(LaurentPoly::var(VarId::z(), layout.arity) - one);
        f.multiply_by(one - LaurentPoly::var(VarId::q(), layout.arity));
        CHECK(rational_normalize(f) == h_coefficient(layout, r));
    }
}

TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(real_betti(2, 3, 2), InvalidTopology);
    CHECK_THROWS_AS(real_betti(2, -1, 2), InvalidTopology);
    CHECK_THROWS_AS(real_betti(0, 0, 1), InvalidTopology);
    CHECK_THROWS_AS(validate_real_topology(CurveTopology::empty(2)), InvalidTopology);
    CHECK_THROWS_AS(check_coprime(2, 2), NonCoprime);
    CHECK_THROWS_AS(check_coprime(4, 6), NonCoprime);
    CHECK_NOTHROW(check_coprime(1, 0));
    CHECK_NOTHROW(check_coprime(3, -1));
    CHECK(parse_pipeline("fast") == Pipeline::FastSpecialized);
    CHECK_THROWS_AS(parse_field_case("quaternionic"), InvalidInput);
}

TEST_CASE("u to t conversion") {
    LaurentPoly u = LaurentPoly::var(VarId::u(), 3);
    CHECK(UPoly::from_u_poly(u * u * u * u - u * u) == UPoly{0, -1, 1});
    CHECK_THROWS_AS(UPoly::from_u_poly(u * u * u), OddUPower);
    CHECK_THROWS_AS(UPoly::from_u_poly(LaurentPoly::var(VarId::q(), 3)), InternalAssertion);
}

TEST_CASE("univariate helpers") {
    UPoly p{-1, 3, -6, 4};
    CHECK(p.to_string() == "4*t^3 - 6*t^2 + 3*t - 1");
    CHECK(p.reversed(3) == UPoly{4, -6, 3, -1});
    CHECK(p.evaluate(Rational(1)).is_zero());
    CHECK(exact_divide(p * one_minus_t, one_minus_t) == p);
    CHECK_THROWS_AS(exact_divide(p, UPoly{1, 1}), NotDivisible);
    CHECK(UPoly().to_string() == "0");
    CHECK(UPoly().degree() == -1);
    CHECK(divisibility_factor(2, 2) == UPoly::constant(4) * pow(one_minus_t, 2));
}
