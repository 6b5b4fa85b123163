#pragma once

#include <cstddef>
#include <vector>

#include "realhiggs/factored_rational.hpp"

namespace realhiggs {

/// Power series in an auxiliary variable T, truncated after T^order, with
/// FactoredRational coefficients.
class TSeries {
public:
    TSeries(std::size_t order, std::size_t arity) : arity_(arity), coeffs_(order + 1, FactoredRational(arity)) {}

    std::size_t order() const { return coeffs_.size() - 1; }
    std::size_t arity() const { return arity_; }
    FactoredRational& operator[](std::size_t n) { return coeffs_.at(n); }
    const FactoredRational& operator[](std::size_t n) const { return coeffs_.at(n); }

private:
    std::size_t arity_;
    std::vector<FactoredRational> coeffs_;
};

/// True when the coefficient is exactly the constant 1 as a rational function.
bool is_one(const FactoredRational& f);
bool is_zero_value(const FactoredRational& f);

/// Truncated product.
TSeries series_mul(const TSeries& a, const TSeries& b);

/// Ordinary logarithm of a series with constant term 1, via the recurrence
/// n L_n = n c_n - sum_{j<n} j L_j c_{n-j}. Throws ConstantTermNotOne.
TSeries series_log(const TSeries& s);

/// Ordinary exponential of a series with constant term 0.
TSeries series_exp(const TSeries& s);

/// psi_k on every coefficient together with T -> T^k, truncated at the same order.
TSeries substitute_powers(const TSeries& s, int k);

}  // namespace realhiggs
