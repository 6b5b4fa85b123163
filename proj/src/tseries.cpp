#include "realhiggs/tseries.hpp"

#include <stdexcept>

#include "realhiggs/errors.hpp"

namespace realhiggs {

bool is_zero_value(const FactoredRational& f) { return f.is_zero(); }

bool is_one(const FactoredRational& f) {
    if (f.den().empty()) return f.num() == LaurentPoly::constant(1, f.arity());
    auto q = f;
    q.cancel_factors();
    return q.den().empty() && q.num() == LaurentPoly::constant(1, f.arity());
}

TSeries series_mul(const TSeries& a, const TSeries& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("series_mul: arity mismatch");
    std::size_t order = std::min(a.order(), b.order());
    TSeries r(order, a.arity());
    for (std::size_t n = 0; n <= order; ++n) {
        std::vector<FactoredRational> parts;
        for (std::size_t j = 0; j <= n; ++j)
            if (!a[j].is_zero() && !b[n - j].is_zero()) parts.push_back(a[j] * b[n - j]);
        r[n] = sum(parts, a.arity());
    }
    return r;
}

TSeries series_log(const TSeries& s) {
    if (!is_one(s[0])) throw ConstantTermNotOne("series_log: constant term must be 1");
    TSeries L(s.order(), s.arity());
    for (std::size_t n = 1; n <= s.order(); ++n) {
        std::vector<FactoredRational> parts;
        parts.push_back(s[n]);
        for (std::size_t j = 1; j < n; ++j) {
            if (L[j].is_zero() || s[n - j].is_zero()) continue;
            FactoredRational term = L[j] * s[n - j];
            term *= Rational(-static_cast<std::int64_t>(j), static_cast<std::int64_t>(n));
            parts.push_back(std::move(term));
        }
        L[n] = sum(parts, s.arity());
    }
    return L;
}

TSeries series_exp(const TSeries& s) {
    if (!s[0].is_zero()) throw std::domain_error("series_exp: constant term must be 0");
    TSeries E(s.order(), s.arity());
    E[0] = FactoredRational::one(s.arity());
    for (std::size_t n = 1; n <= s.order(); ++n) {
        std::vector<FactoredRational> parts;
        for (std::size_t j = 1; j <= n; ++j) {
            if (s[j].is_zero() || E[n - j].is_zero()) continue;
            FactoredRational term = s[j] * E[n - j];
            term *= Rational(static_cast<std::int64_t>(j), static_cast<std::int64_t>(n));
            parts.push_back(std::move(term));
        }
        E[n] = sum(parts, s.arity());
    }
    return E;
}

TSeries substitute_powers(const TSeries& s, int k) {
    if (k < 1) throw std::invalid_argument("substitute_powers: k must be positive");
    TSeries r(s.order(), s.arity());
    for (std::size_t n = 0; n * k <= s.order(); ++n) r[n * k] = substitute_powers(s[n], k);
    return r;
}

}  // namespace realhiggs
