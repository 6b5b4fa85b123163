#pragma once

#include <string>
#include <vector>

#include "realhiggs/upoly.hpp"

namespace realhiggs {

/// Power series in z truncated after z^order, coefficients polynomials in t.
/// For the Betti series, coefficient n is P_t of the n-th symmetric product.
struct ZSeries {
    std::vector<UPoly> coeffs;

    explicit ZSeries(std::size_t order = 0) : coeffs(order + 1) {}
    std::size_t order() const { return coeffs.size() - 1; }
    friend bool operator==(const ZSeries&, const ZSeries&) = default;
};

/// P_t(Sym^m(N)) for the non-orientable surface N double covered by a genus
/// g' surface: (1-tz)^{g'+1} / ((1-z)(1-t^2 z)). g' = -1 is accepted and
/// gives the sphere's symmetric products (complex projective spaces).
ZSeries sym_nonorientable_series(int g_prime, int R);

/// (1-tz^2)^{g-b} (1+z)^b (1-tz)^b / ((1-z)(1+tz)): b+1 real circles.
ZSeries real_sym_series(int g, int b, int R);

/// Same series assembled from connected components: sum over k + 2s = n of
/// C(b+1, k) (1-t)^k P_t(Sym^s(N_{g-k})).
ZSeries component_sum_series(int g, int b, int R);

/// (1-tz^2)^{g+1} / ((1-z^2)(1-t^2 z^2)): no real points.
ZSeries empty_locus_series(int g, int R);

/// Number of connected components of the real n-th symmetric product,
/// sum over k + 2s = n of C(b+1, k).
long component_count(int b, int n);

struct ZetaReport {
    int g = 0;
    int b = 0;
    bool holds = false;
    std::string lhs;  // N_formal * D_closed, canonical
    std::string rhs;  // N_closed * D_formal, canonical
};

/// Substitutes q = -t, alpha = -t^{1/2} (g-b times) and -1 (b times) into
/// prod (1 - alpha_i z)(1 - alpha_i^{-1} q z) / ((1-z)(1-qz)) and compares
/// with the closed form of real_sym_series by cross-multiplication in u, z.
/// Throws InvalidTopology unless 0 <= b <= g.
ZetaReport zeta_substitution_check(int g, int b);

}  // namespace realhiggs
