#include "realhiggs/specialization.hpp"

#include <numeric>

#include "realhiggs/errors.hpp"

namespace realhiggs {

std::string to_string(FieldCase f) { return f == FieldCase::Real ? "real" : "complex"; }

std::string to_string(Pipeline p) {
    switch (p) {
        case Pipeline::Generic: return "generic";
        case Pipeline::FastSpecialized: return "fast";
        case Pipeline::ClosedFormR2: return "rank2";
    }
    return "generic";
}

FieldCase parse_field_case(const std::string& s) {
    if (s == "real") return FieldCase::Real;
    if (s == "complex") return FieldCase::Complex;
    throw InvalidInput("unknown field '" + s + "' (expected real or complex)");
}

Pipeline parse_pipeline(const std::string& s) {
    if (s == "generic") return Pipeline::Generic;
    if (s == "fast") return Pipeline::FastSpecialized;
    if (s == "rank2") return Pipeline::ClosedFormR2;
    throw InvalidInput("unknown pipeline '" + s + "' (expected generic, fast or rank2)");
}

void validate_real_topology(const CurveTopology& c) {
    if (c.g < 1) throw InvalidTopology("genus must be at least 1, got " + std::to_string(c.g));
    if (c.g > kMaxGenus) throw InvalidTopology("genus above the supported maximum " + std::to_string(kMaxGenus));
    if (c.real_locus_empty())
        throw InvalidTopology("the real-locus formula needs at least one real circle (empty real locus is unsupported)");
    if (*c.b < 0) throw InvalidTopology("b must be non-negative, got " + std::to_string(*c.b));
    if (*c.b > c.g)
        throw InvalidTopology("b = " + std::to_string(*c.b) + " exceeds g = " + std::to_string(c.g) +
                              ": a genus-g real curve has at most g+1 real circles");
}

void check_coprime(int r, int d) {
    if (std::gcd(r, d) != 1)
        throw NonCoprime("rank " + std::to_string(r) + " and degree " + std::to_string(d) +
                         " must be coprime; try d = 1");
}

int moduli_dimension(int g, int r) { return (2 * g - 2) * r * r + 2; }

UPoly divisibility_factor(int g, int b) {
    return pow(UPoly{1, -1}, static_cast<unsigned>(g)) * Rational(std::int64_t(1) << b);
}

namespace {

void validate_rank(int r) {
    if (r < 1) throw InvalidInput("rank must be at least 1, got " + std::to_string(r));
}

}  // namespace

SignedPoincare specialize_real(const LaurentPoly& a, const AlphaLayout& layout, int b, int r) {
    const int g = layout.genus;
    auto images = identity_images(a.arity());
    images[VarId::q().index()] = {Rational(-1), Monomial::of(VarId::u(), 2)};
    images[VarId::z().index()] = {Rational(1), Monomial{}};
    for (int i = 0; i < g; ++i) {
        std::size_t slot = VarId::a(layout.slot[static_cast<std::size_t>(i)]).index();
        images[slot] = i < g - b ? MonomialImage{Rational(-1), Monomial::of(VarId::u())}
                                 : MonomialImage{Rational(-1), Monomial{}};
    }
    LaurentPoly spec = substitute_monomials(a, images, 3);
    const int n = (g - 1) * r * r + 1;
    spec = spec.shifted(Monomial::of(VarId::u(), 2 * n), Rational(n % 2 == 0 ? 1 : -1));
    SignedPoincare p = UPoly::from_u_poly(spec);
    try {
        (void)exact_divide(p, divisibility_factor(g, b));
    } catch (const NotDivisible&) {
        throw InternalAssertion("real Betti polynomial " + p.to_string() + " is not divisible by 2^b(1-t)^g");
    }
    return p;
}

SignedPoincare specialize_complex(const APoly& a) {
    auto images = identity_images(a.value.arity());
    images[VarId::q().index()] = {Rational(1), Monomial::of(VarId::u(), 4)};
    images[VarId::z().index()] = {Rational(1), Monomial{}};
    for (int i = 1; i <= a.g; ++i) images[VarId::a(i).index()] = {Rational(1), Monomial::of(VarId::u(), 2)};
    LaurentPoly spec = substitute_monomials(a.value, images, 3);
    spec = spec.shifted(Monomial::of(VarId::u(), 2 * (2 * (a.g - 1) * a.r * a.r + 2)));
    return UPoly::from_u_poly(spec);
}

BettiResult real_betti(const APoly& a, int b) {
    CurveTopology c = CurveTopology::circles(a.g, b);
    validate_real_topology(c);
    BettiResult res;
    res.curve = c;
    res.r = a.r;
    res.field = FieldCase::Real;
    res.pipeline = Pipeline::Generic;
    res.poly = specialize_real(a.value, AlphaLayout::generic(a.g), b, a.r);
    return res;
}

BettiResult real_betti(int g, int b, int r, Pipeline pipeline, int jobs) {
    validate_real_topology(CurveTopology::circles(g, b));
    validate_rank(r);
    switch (pipeline) {
        case Pipeline::Generic: return real_betti(a_poly(g, r, jobs), b);
        case Pipeline::FastSpecialized: {
            AlphaLayout layout = AlphaLayout::collapsed(g, b);
            APoly a = a_poly_from(HPoly{h_coefficient(layout, r, jobs), g, r});
            BettiResult res;
            res.curve = CurveTopology::circles(g, b);
            res.r = r;
            res.pipeline = Pipeline::FastSpecialized;
            res.poly = specialize_real(a.value, layout, b, r);
            return res;
        }
        case Pipeline::ClosedFormR2: break;
    }
    throw InvalidInput("the closed-form pipeline is provided by p_rank2");
}

BettiResult complex_betti(const APoly& a) {
    BettiResult res;
    res.curve = CurveTopology::empty(a.g);
    res.r = a.r;
    res.field = FieldCase::Complex;
    res.pipeline = Pipeline::Generic;
    res.poly = specialize_complex(a);
    return res;
}

BettiResult complex_betti(int g, int r, int jobs) {
    if (g < 1 || g > kMaxGenus) throw InvalidTopology("genus must lie in 1.." + std::to_string(kMaxGenus));
    validate_rank(r);
    return complex_betti(a_poly(g, r, jobs));
}

TSeries specialize_alpha_early(int g, int b, int R, int jobs) {
    validate_real_topology(CurveTopology::circles(g, b));
    return pleth_log(omega_series(AlphaLayout::collapsed(g, b), R, jobs));
}

}  // namespace realhiggs
