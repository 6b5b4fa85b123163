#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realhiggs/mellit.hpp"
#include "realhiggs/upoly.hpp"

namespace realhiggs {

/// Genus and real locus of a real curve: b+1 circles, or no real points.
struct CurveTopology {
    int g = 1;
    std::optional<int> b;  // nullopt: empty real locus

    static CurveTopology circles(int g, int b) { return {g, b}; }
    static CurveTopology empty(int g) { return {g, std::nullopt}; }
    bool real_locus_empty() const { return !b.has_value(); }
};

enum class FieldCase { Real, Complex };
enum class Pipeline { Generic, FastSpecialized, ClosedFormR2 };

std::string to_string(FieldCase f);
std::string to_string(Pipeline p);
FieldCase parse_field_case(const std::string& s);
Pipeline parse_pipeline(const std::string& s);

struct BettiResult {
    CurveTopology curve;
    int r = 1;
    int d = 1;
    SignedPoincare poly;
    FieldCase field = FieldCase::Real;
    Pipeline pipeline = Pipeline::Generic;
};

/// Throws InvalidTopology unless g >= 1, the real locus is non-empty and
/// 0 <= b <= g (a genus-g real curve has at most g+1 real circles).
void validate_real_topology(const CurveTopology& c);
/// Throws NonCoprime unless gcd(r, d) = 1.
void check_coprime(int r, int d);

/// Complex dimension of the moduli space, (2g-2)r^2 + 2.
int moduli_dimension(int g, int r);

/// 2^b (1-t)^g.
UPoly divisibility_factor(int g, int b);

/// (-t)^{(g-1)r^2+1} A(-t, -t^{1/2} x (g-b), -1 x b) for an A_{g,r} whose
/// alpha variables are placed by `layout`, with t^{1/2} carried by u. Checks
/// evenness in u and divisibility by 2^b(1-t)^g.
SignedPoincare specialize_real(const LaurentPoly& a, const AlphaLayout& layout, int b, int r);

/// t^{2(g-1)r^2+2} A(t^2, t, ..., t).
SignedPoincare specialize_complex(const APoly& a);

BettiResult real_betti(int g, int b, int r, Pipeline pipeline = Pipeline::Generic, int jobs = 1);
BettiResult real_betti(const APoly& a, int b);
BettiResult complex_betti(int g, int r, int jobs = 1);
BettiResult complex_betti(const APoly& a);

/// Plethystic Log of the generating series with the alpha variables already
/// identified into the two classes of the real substitution (see
/// AlphaLayout::collapsed). Its T^r coefficient times (z-1)(1-q) normalizes
/// to the collapsed H_{g,r}.
TSeries specialize_alpha_early(int g, int b, int R, int jobs = 1);

}  // namespace realhiggs
