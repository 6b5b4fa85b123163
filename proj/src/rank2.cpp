#include "realhiggs/rank2.hpp"

#include "realhiggs/errors.hpp"
#include "realhiggs/factored_rational.hpp"

namespace realhiggs {

namespace {

constexpr std::size_t kArity = 3;

LaurentPoly c(std::int64_t v) { return LaurentPoly::constant(v, kArity); }
LaurentPoly z(int k = 1) { return LaurentPoly::monomial(1, Monomial::of(VarId::z(), k), kArity); }
LaurentPoly u(int k = 1) { return LaurentPoly::monomial(1, Monomial::of(VarId::u(), k), kArity); }
LaurentPoly p(const LaurentPoly& x, int n) { return pow(x, static_cast<unsigned>(n)); }

}  // namespace

RankTwoForm f_rank2(int g, int b) {
    validate_real_topology(CurveTopology::circles(g, b));
    const int m = g - b;
    const LaurentPoly t = u(2);
    RankTwoForm f;
    f.g = g;
    f.b = b;
    f.terms[0] = {Rational(1), p(z(2) + u(), m) * p(z() - u(), m) * p(z(2) + c(1), b) * p(z() - t, b),
                  {z(2) - c(1), z() + t}};
    f.terms[1] = {Rational(1), p(z() - u(3), m) * p(c(1) + u(3), m) * p(z() - t, b) * p(c(1) + u(4), b),
                  {z() + t, c(1) - u(4)}};
    f.terms[2] = {Rational(-1, 2), p(z() + u(), m) * p(c(1) - u(), m) * p(z() + c(1), b) * p(c(1) - t, b),
                  {z() - c(1), c(1) + t}};
    f.terms[3] = {Rational(-1, 2), p(z() - u(), m) * p(c(1) + u(), m) * p(z() - c(1), b) * p(c(1) + t, b),
                  {z() + c(1), c(1) - t}};
    return f;
}

BettiResult p_rank2(int g, int b) {
    const RankTwoForm f = f_rank2(g, b);
    std::vector<FactoredRational> parts;
    for (const auto& term : f.terms) {
        FactoredRational fr(term.numerator * term.scalar);
        for (const auto& d : term.denominator) fr.divide_by(d);
        parts.push_back(std::move(fr));
    }
    FactoredRational total = sum(parts, kArity);

    auto at_one = identity_images(kArity);
    at_one[VarId::z().index()].mono = Monomial{};
    auto eval_z1 = [&](const LaurentPoly& x) { return substitute_monomials(x, at_one, kArity); };

    // Cancel the factors vanishing at z = 1, then evaluate.
    LaurentPoly num = total.num();
    std::vector<LaurentPoly> rest;
    for (const auto& d : total.den()) {
        for (int k = 0; k < d.mult; ++k) {
            if (eval_z1(d.factor.poly()).is_zero()) {
                auto q = try_exact_divide(num, d.factor.poly());
                if (!q)
                    throw PoleAtOne("rank-2 closed form: factor " + d.factor.poly().to_string() +
                                    " does not cancel at z = 1");
                num = std::move(*q);
            } else {
                rest.push_back(eval_z1(d.factor.poly()));
            }
        }
    }

    // Prefactor 2^b (-t)^{4g-3} (1-t)^g.
    LaurentPoly value = eval_z1(num) * p(c(1) - u(2), g) * c(std::int64_t(1) << b);
    value = value.shifted(Monomial::of(VarId::u(), 2 * (4 * g - 3)), Rational(-1));
    for (const auto& d : rest) {
        auto q = try_exact_divide(value, d);
        if (!q) throw NotPolynomial("rank-2 closed form: " + d.to_string() + " does not divide the z = 1 value");
        value = std::move(*q);
    }

    BettiResult res;
    res.curve = CurveTopology::circles(g, b);
    res.r = 2;
    res.field = FieldCase::Real;
    res.pipeline = Pipeline::ClosedFormR2;
    res.poly = UPoly::from_u_poly(value);
    return res;
}

}  // namespace realhiggs
