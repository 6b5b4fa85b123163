#include "realhiggs/zeta.hpp"

#include "realhiggs/errors.hpp"
#include "realhiggs/laurent_poly.hpp"

namespace realhiggs {

namespace {

ZSeries truncated_mul(const ZSeries& a, const ZSeries& b) {
    std::size_t order = std::min(a.order(), b.order());
    ZSeries r(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= order; ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return r;
}

// Polynomial in z given by its coefficients, truncated.
ZSeries zpoly(std::size_t order, std::vector<UPoly> coeffs) {
    ZSeries s(order);
    for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) s.coeffs[i] = std::move(coeffs[i]);
    return s;
}

ZSeries zpow(const ZSeries& a, int n) {
    ZSeries r = zpoly(a.order(), {UPoly{1}});
    for (int i = 0; i < n; ++i) r = truncated_mul(r, a);
    return r;
}

// Inverse of a series with constant term 1.
ZSeries inverse(const ZSeries& a) {
    ZSeries inv(a.order());
    inv.coeffs[0] = UPoly{1};
    for (std::size_t n = 1; n <= a.order(); ++n) {
        UPoly acc;
        for (std::size_t j = 1; j <= n; ++j) acc -= a.coeffs[j] * inv.coeffs[n - j];
        inv.coeffs[n] = std::move(acc);
    }
    return inv;
}

void check_order(int R) {
    if (R < 0) throw InvalidInput("series order must be non-negative");
}

void check_topology(int g, int b) {
    if (g < 0 || b < 0 || b > g) throw InvalidTopology("need 0 <= b <= g, got g = " + std::to_string(g) + ", b = " + std::to_string(b));
}

const UPoly kOne{1};
const UPoly kT = UPoly::t();

}  // namespace

ZSeries sym_nonorientable_series(int g_prime, int R) {
    check_order(R);
    if (g_prime < -1) throw InvalidInput("sym_nonorientable_series: g' must be >= -1");
    const auto n = static_cast<std::size_t>(R);
    ZSeries num = zpow(zpoly(n, {kOne, -kT}), g_prime + 1);
    ZSeries den = truncated_mul(zpoly(n, {kOne, -kOne}), zpoly(n, {kOne, -(kT * kT)}));
    return truncated_mul(num, inverse(den));
}

ZSeries real_sym_series(int g, int b, int R) {
    check_order(R);
    check_topology(g, b);
    const auto n = static_cast<std::size_t>(R);
    ZSeries num = zpow(zpoly(n, {kOne, UPoly{}, -kT}), g - b);
    num = truncated_mul(num, zpow(zpoly(n, {kOne, kOne}), b));
    num = truncated_mul(num, zpow(zpoly(n, {kOne, -kT}), b));
    ZSeries den = truncated_mul(zpoly(n, {kOne, -kOne}), zpoly(n, {kOne, kT}));
    return truncated_mul(num, inverse(den));
}

namespace {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

ZSeries component_sum_series(int g, int b, int R) {
    check_order(R);
    check_topology(g, b);
    const int a = b + 1;
    ZSeries out(static_cast<std::size_t>(R));
    for (int k = 0; k <= a && k <= R; ++k) {
        ZSeries sym = sym_nonorientable_series(g - k, (R - k) / 2);
        UPoly weight = pow(UPoly{1, -1}, static_cast<unsigned>(k)) * Rational(binomial(a, k));
        for (int s = 0; k + 2 * s <= R; ++s)
            out.coeffs[static_cast<std::size_t>(k + 2 * s)] += weight * sym.coeffs[static_cast<std::size_t>(s)];
    }
    return out;
}

ZSeries empty_locus_series(int g, int R) {
    check_order(R);
    if (g < 0) throw InvalidTopology("genus must be non-negative");
    const auto n = static_cast<std::size_t>(R);
    ZSeries num = zpow(zpoly(n, {kOne, UPoly{}, -kT}), g + 1);
    ZSeries den = truncated_mul(zpoly(n, {kOne, UPoly{}, -kOne}), zpoly(n, {kOne, UPoly{}, -(kT * kT)}));
    return truncated_mul(num, inverse(den));
}

long component_count(int b, int n) {
    long total = 0;
    for (int k = n % 2; k <= n; k += 2) total += binomial(b + 1, k);
    return total;
}

ZetaReport zeta_substitution_check(int g, int b) {
    check_topology(g, b);
    if (g < 1) throw InvalidTopology("genus must be at least 1");
    const std::size_t n = arity_for_genus(g);
    const auto one = LaurentPoly::constant(1, n);
    const auto z = LaurentPoly::var(VarId::z(), n);
    const auto q = LaurentPoly::var(VarId::q(), n);

    // Formal zeta function of the curve, numerator and denominator.
    LaurentPoly num_formal = one;
    for (int i = 1; i <= g; ++i) {
        const Monomial a = Monomial::of(VarId::a(i));
        num_formal *= one - LaurentPoly::monomial(1, a, n) * z;
        num_formal *= one - LaurentPoly::monomial(1, -a, n) * q * z;
    }
    LaurentPoly den_formal = (one - z) * (one - q * z);

    auto images = identity_images(n);
    images[VarId::q().index()] = {Rational(-1), Monomial::of(VarId::u(), 2)};
    for (int i = 1; i <= g; ++i)
        images[VarId::a(i).index()] = i <= g - b ? MonomialImage{Rational(-1), Monomial::of(VarId::u())}
                                                 : MonomialImage{Rational(-1), Monomial{}};
    LaurentPoly nf = substitute_monomials(num_formal, images, 3);
    LaurentPoly df = substitute_monomials(den_formal, images, 3);

    const auto one3 = LaurentPoly::constant(1, 3);
    const auto z3 = LaurentPoly::var(VarId::z(), 3);
    const auto t3 = LaurentPoly::monomial(1, Monomial::of(VarId::u(), 2), 3);
    LaurentPoly nc = pow(one3 - t3 * z3 * z3, static_cast<unsigned>(g - b)) *
                     pow(one3 + z3, static_cast<unsigned>(b)) * pow(one3 - t3 * z3, static_cast<unsigned>(b));
    LaurentPoly dc = (one3 - z3) * (one3 + t3 * z3);

    LaurentPoly lhs = nf * dc;
    LaurentPoly rhs = nc * df;
    return ZetaReport{g, b, lhs == rhs, lhs.to_string(), rhs.to_string()};
}

}  // namespace realhiggs
