#pragma once

#include <cstddef>
#include <vector>

#include "realhiggs/factored_rational.hpp"
#include "realhiggs/partitions.hpp"
#include "realhiggs/tseries.hpp"

namespace realhiggs {

/// Placement of alpha_1..alpha_g in the working ring. The generic layout gives
/// each alpha_i its own variable; a collapsed layout identifies several of
/// them with one variable. Identifying variables is a monomial substitution,
/// so it commutes with the Adams operations inside the plethystic Log.
struct AlphaLayout {
    int genus = 1;
    std::size_t arity = 4;
    std::vector<int> slot;  // slot[i] = alpha variable (1-based) receiving alpha_{i+1}

    static AlphaLayout generic(int g);
    /// alpha_1..alpha_{g-b} -> a1, alpha_{g-b+1}..alpha_g -> a2 (arity 5).
    static AlphaLayout collapsed(int g, int b);
};

/// The per-diagram rational function: product over boxes of
///   prod_i (z^{a+1} - alpha_i q^l)(z^a - alpha_i^{-1} q^{l+1})
///   / ((z^{a+1} - q^l)(z^a - q^{l+1})).
struct HookTerm {
    FactoredRational value;
};

HookTerm hook_term(const Partition& mu, int g);
HookTerm hook_term(const Partition& mu, const AlphaLayout& layout);

/// sum_{|mu| <= R} T^{|mu|} H_mu, each degree over a common denominator.
TSeries omega_series(int g, int R, int jobs = 1);
TSeries omega_series(const AlphaLayout& layout, int R, int jobs = 1);

int mobius(int n);

/// Plethystic logarithm sum_k mobius(k)/k psi_k(log s). Throws ConstantTermNotOne.
TSeries pleth_log(const TSeries& s);
/// Degree-n coefficient of the plethystic Log, given the ordinary log of s.
FactoredRational pleth_log_coefficient(const TSeries& log_s, int n);
/// Plethystic exponential exp(sum_k psi_k(f)/k); f must have constant term 0.
TSeries pleth_exp(const TSeries& f);

/// H_{g,r} in q, z, a1^{+-1}..ag^{+-1}.
struct HPoly {
    LaurentPoly value;
    int g = 0;
    int r = 0;
};

/// A_{g,r} = H_{g,r} at z = 1 (the variable z stays in the arity, unused).
struct APoly {
    LaurentPoly value;
    int g = 0;
    int r = 0;
};

/// Throws NotPolynomial if the T^r coefficient fails to normalize.
HPoly h_poly(int g, int r, int jobs = 1);
/// H_{g,1}..H_{g,R} from one shared series computation.
std::vector<HPoly> h_polys(int g, int R, int jobs = 1);
APoly a_poly(int g, int r, int jobs = 1);
APoly a_poly_from(const HPoly& h);

/// The normalized T^r coefficient of (z-1)(1-q) Log(omega) for any layout.
LaurentPoly h_coefficient(const AlphaLayout& layout, int r, int jobs = 1);

/// prod_i (z - alpha_i)(1 - alpha_i^{-1} q) in the generic layout.
LaurentPoly rank_one_h(int g);

}  // namespace realhiggs
