#include "realhiggs/mellit.hpp"

#include <stdexcept>
#include <string>

#include "realhiggs/errors.hpp"
#include "realhiggs/parallel.hpp"

namespace realhiggs {

AlphaLayout AlphaLayout::generic(int g) {
    if (g < 1 || g > kMaxGenus) throw InvalidInput("genus must lie in 1.." + std::to_string(kMaxGenus));
    AlphaLayout l;
    l.genus = g;
    l.arity = arity_for_genus(g);
    for (int i = 1; i <= g; ++i) l.slot.push_back(i);
    return l;
}

AlphaLayout AlphaLayout::collapsed(int g, int b) {
    if (g < 1 || b < 0 || b > g) throw InvalidTopology("collapsed layout needs 0 <= b <= g and g >= 1");
    AlphaLayout l;
    l.genus = g;
    l.arity = arity_for_genus(2);
    for (int i = 1; i <= g; ++i) l.slot.push_back(i <= g - b ? 1 : 2);
    return l;
}

namespace {

LaurentPoly binomial(std::size_t arity, const Monomial& lead, const Monomial& tail) {
    return LaurentPoly::from_terms(arity, {{lead, Rational(1)}, {tail, Rational(-1)}});
}

}  // namespace

HookTerm hook_term(const Partition& mu, int g) { return hook_term(mu, AlphaLayout::generic(g)); }

HookTerm hook_term(const Partition& mu, const AlphaLayout& layout) {
    const std::size_t n = layout.arity;
    LaurentPoly num = LaurentPoly::constant(1, n);
    std::vector<LaurentPoly> den;
    for (const Box& b : mu.boxes()) {
        auto [a, l] = arm_leg(mu, b);
        const Monomial za1 = Monomial::of(VarId::z(), a + 1);
        const Monomial za = Monomial::of(VarId::z(), a);
        const Monomial ql = Monomial::of(VarId::q(), l);
        const Monomial ql1 = Monomial::of(VarId::q(), l + 1);
        for (int s : layout.slot) {
            const Monomial alpha = Monomial::of(VarId::a(s));
            num *= binomial(n, za1, alpha + ql);
            num *= binomial(n, za, ql1 - alpha);
        }
        den.push_back(binomial(n, za1, ql));
        den.push_back(binomial(n, za, ql1));
    }
    FactoredRational f(std::move(num));
    for (const auto& d : den) f.divide_by(d);
    return HookTerm{std::move(f)};
}

TSeries omega_series(int g, int R, int jobs) { return omega_series(AlphaLayout::generic(g), R, jobs); }

TSeries omega_series(const AlphaLayout& layout, int R, int jobs) {
    if (R < 1) throw std::invalid_argument("omega_series: order must be >= 1");
    struct Job {
        int degree;
        Partition mu;
    };
    std::vector<Job> work;
    for (int n = 1; n <= R; ++n)
        for (auto& mu : enumerate_partitions(n)) work.push_back({n, std::move(mu)});
    std::vector<FactoredRational> terms(work.size(), FactoredRational(layout.arity));
    parallel_for(work.size(), jobs, [&](std::size_t i) { terms[i] = hook_term(work[i].mu, layout).value; });

    TSeries s(static_cast<std::size_t>(R), layout.arity);
    s[0] = FactoredRational::one(layout.arity);
    parallel_for(static_cast<std::size_t>(R), jobs, [&](std::size_t idx) {
        int n = static_cast<int>(idx) + 1;
        std::vector<FactoredRational> parts;
        for (std::size_t i = 0; i < work.size(); ++i)
            if (work[i].degree == n) parts.push_back(terms[i]);
        s[static_cast<std::size_t>(n)] = sum(parts, layout.arity);
    });
    return s;
}

int mobius(int n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be positive");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

FactoredRational pleth_log_coefficient(const TSeries& log_s, int n) {
    std::vector<FactoredRational> parts;
    for (int k = 1; k <= n; ++k) {
        if (n % k != 0) continue;
        int mu = mobius(k);
        if (mu == 0) continue;
        const FactoredRational& c = log_s[static_cast<std::size_t>(n / k)];
        if (c.is_zero()) continue;
        FactoredRational term = substitute_powers(c, k);
        term *= Rational(mu, k);
        parts.push_back(std::move(term));
    }
    return sum(parts, log_s.arity());
}

TSeries pleth_log(const TSeries& s) {
    TSeries L = series_log(s);
    TSeries out(s.order(), s.arity());
    for (std::size_t n = 1; n <= s.order(); ++n) out[n] = pleth_log_coefficient(L, static_cast<int>(n));
    return out;
}

TSeries pleth_exp(const TSeries& f) {
    if (!f[0].is_zero()) throw std::domain_error("pleth_exp: constant term must be 0");
    TSeries acc(f.order(), f.arity());
    for (std::size_t k = 1; k <= f.order(); ++k) {
        TSeries psi = substitute_powers(f, static_cast<int>(k));
        for (std::size_t n = 1; n <= f.order(); ++n) {
            if (psi[n].is_zero()) continue;
            FactoredRational term = psi[n];
            term *= Rational(1, static_cast<std::int64_t>(k));
            acc[n] = acc[n] + term;
        }
    }
    return series_exp(acc);
}

namespace {

LaurentPoly normalize_h(FactoredRational c, std::size_t arity, int r) {
    c.multiply_by(LaurentPoly::var(VarId::z(), arity) - LaurentPoly::constant(1, arity));
    c.multiply_by(LaurentPoly::constant(1, arity) - LaurentPoly::var(VarId::q(), arity));
    LaurentPoly h;
    try {
        h = rational_normalize(c);
    } catch (const NotPolynomial& e) {
        throw NotPolynomial("H coefficient of rank " + std::to_string(r) + " is not a Laurent polynomial: " + e.what());
    }
    for (VarId v : {VarId::q(), VarId::z()})
        if (h.degree_range(v.index()).first < 0)
            throw InternalAssertion("H coefficient of rank " + std::to_string(r) + " has a negative power of " +
                                    var_name(v.index()));
    return h;
}

}  // namespace

LaurentPoly h_coefficient(const AlphaLayout& layout, int r, int jobs) {
    if (r < 1) throw InvalidInput("rank must be >= 1");
    TSeries omega = omega_series(layout, r, jobs);
    TSeries L = series_log(omega);
    return normalize_h(pleth_log_coefficient(L, r), layout.arity, r);
}

std::vector<HPoly> h_polys(int g, int R, int jobs) {
    if (R < 1) throw InvalidInput("rank must be >= 1");
    AlphaLayout layout = AlphaLayout::generic(g);
    TSeries L = series_log(omega_series(layout, R, jobs));
    std::vector<HPoly> out(static_cast<std::size_t>(R));
    parallel_for(out.size(), jobs, [&](std::size_t i) {
        int r = static_cast<int>(i) + 1;
        out[i] = HPoly{normalize_h(pleth_log_coefficient(L, r), layout.arity, r), g, r};
    });
    return out;
}

HPoly h_poly(int g, int r, int jobs) { return HPoly{h_coefficient(AlphaLayout::generic(g), r, jobs), g, r}; }

APoly a_poly_from(const HPoly& h) {
    auto images = identity_images(h.value.arity());
    images[VarId::z().index()].mono = Monomial{};
    return APoly{substitute_monomials(h.value, images, h.value.arity()), h.g, h.r};
}

APoly a_poly(int g, int r, int jobs) { return a_poly_from(h_poly(g, r, jobs)); }

LaurentPoly rank_one_h(int g) {
    std::size_t n = arity_for_genus(g);
    LaurentPoly p = LaurentPoly::constant(1, n);
    for (int i = 1; i <= g; ++i) {
        const Monomial a = Monomial::of(VarId::a(i));
        p *= binomial(n, Monomial::of(VarId::z()), a);
        p *= binomial(n, Monomial{}, Monomial::of(VarId::q()) - a);
    }
    return p;
}

}  // namespace realhiggs
