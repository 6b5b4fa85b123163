#pragma once

#include <array>
#include <vector>

#include "realhiggs/laurent_poly.hpp"
#include "realhiggs/specialization.hpp"

namespace realhiggs {

/// scalar * numerator / prod(denominator), in the variables z and u = t^{1/2}
/// (arity 3, q unused).
struct RankTwoTerm {
    Rational scalar;
    LaurentPoly numerator;
    std::vector<LaurentPoly> denominator;
};

/// The four-term rational function f(t^{1/2}, z) of the explicit rank-2 formula.
struct RankTwoForm {
    int g = 0;
    int b = 0;
    std::array<RankTwoTerm, 4> terms;
};

RankTwoForm f_rank2(int g, int b);

/// 2^b (-t)^{4(g-1)+1} (1-t)^g f(t^{1/2}, 1). The z = 1 poles of the
/// individual terms are cancelled by exact division of the combined
/// numerator; PoleAtOne is thrown if they do not cancel.
BettiResult p_rank2(int g, int b);

}  // namespace realhiggs
