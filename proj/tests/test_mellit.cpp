#include <doctest.h>

#include "realhiggs/mellit.hpp"
#include "realhiggs/specialization.hpp"

using namespace realhiggs;

namespace {

LaurentPoly var(VarId v, std::size_t arity) { return LaurentPoly::var(v, arity); }

// prod_i (z - alpha_i)(1 - q/alpha_i): the T^1 part of the log is the single
// box diagram, and (z-1)(1-q) cancels its denominator.
LaurentPoly rank_one_oracle(int g) {
    std::size_t n = arity_for_genus(g);
    LaurentPoly one = LaurentPoly::constant(1, n), out = one;
    for (int i = 1; i <= g; ++i) {
        LaurentPoly a = var(VarId::a(i), n);
        LaurentPoly a_inv = LaurentPoly::monomial(1, Monomial::of(VarId::a(i), -1), n);
        out = out * (var(VarId::z(), n) - a) * (one - var(VarId::q(), n) * a_inv);
    }
    return out;
}

}  // namespace

TEST_CASE("single box hook term") {
    HookTerm h = hook_term(Partition({1}), 1);
    FactoredRational f = h.value;
    std::size_t n = arity_for_genus(1);
    LaurentPoly one = LaurentPoly::constant(1, n);
    f.multiply_by(var(VarId::z(), n) - one);
    f.multiply_by(one - var(VarId::q(), n));
    CHECK(rational_normalize(f) == rank_one_oracle(1));
}

TEST_CASE("empty diagram contributes one") {
    HookTerm h = hook_term(Partition(), 2);
    CHECK(rational_normalize(h.value) == LaurentPoly::constant(1, arity_for_genus(2)));
}

TEST_CASE("rank one H polynomial") {
    for (int g = 1; g <= 4; ++g) {
        CHECK(h_poly(g, 1).value == rank_one_oracle(g));
        CHECK(rank_one_h(g) == rank_one_oracle(g));
    }
}

TEST_CASE("H polynomials have non-negative q and z exponents") {
    for (int g = 1; g <= 2; ++g)
        for (const auto& h : h_polys(g, 3)) {
            auto [qlo, qhi] = h.value.degree_range(VarId::q().index());
            auto [zlo, zhi] = h.value.degree_range(VarId::z().index());
            CHECK(qlo >= 0);
            CHECK(zlo >= 0);
            (void)qhi;
            (void)zhi;
        }
}

TEST_CASE("parallel and sequential H agree") {
    CHECK(h_poly(2, 3, 1).value.to_string() == h_poly(2, 3, 3).value.to_string());
}

TEST_CASE("A is H at z = 1") {
    HPoly h = h_poly(2, 2);
    APoly a = a_poly_from(h);
    CHECK(a.value.free_of(VarId::z().index()));
    CHECK(a.value == a_poly(2, 2).value);
    CHECK(a_poly(1, 1).value == a_poly_from(HPoly{rank_one_oracle(1), 1, 1}).value);
}

TEST_CASE("complex rank 2 genus 2 matches the known Poincare polynomial") {
    // Dividing out t^10 (1-t)^4 (the Jacobian part) and reversing leaves the
    // invariant part 1 + t^2 + 4t^3 + 2t^4 + 4t^5 + 2t^6, with odd degrees
    // negated since the polynomial is signed.
    UPoly p = complex_betti(2, 2).poly;
    UPoly rest = exact_divide(p, UPoly::monomial(1, 10) * pow(UPoly{1, -1}, 4));
    CHECK(rest.reversed(rest.degree()) == (UPoly{1, 0, 1, -4, 2, -4, 2}));
}
