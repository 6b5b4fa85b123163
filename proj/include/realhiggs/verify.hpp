#pragma once

#include <string>
#include <vector>

#include "realhiggs/store.hpp"

namespace realhiggs {

/// Outcome of one identity check. A failing report carries both sides in
/// canonical form so the failure can be reproduced and diffed.
struct CheckReport {
    std::string name;
    int g = 0;
    int b = -1;  // -1 when the check does not depend on b
    int r = 0;   // 0 when the check does not depend on r
    bool pass = false;
    std::string expected;
    std::string actual;
    std::string detail;
};

/// real_betti / 2^b(1-t)^g is exact with integer coefficients; the quotient
/// goes to `detail`.
CheckReport check_divisibility(int g, int b, int r, APolyStore& store);
/// A_{g,r} is fixed by adjacent transpositions of the alphas and by each
/// alpha_i -> q alpha_i^{-1}.
CheckReport check_symmetry(int g, int r, APolyStore& store);
/// deg_t real_betti = (2g-2)r^2 + 2.
CheckReport check_degree(int g, int b, int r, APolyStore& store);
/// Explicit rank-2 formula against the generic pipeline.
CheckReport check_rank2(int g, int b, APolyStore& store);
/// Generic against alpha-collapsed pipeline.
CheckReport check_pipeline_agreement(int g, int b, int r, APolyStore& store);
/// H_{g,r} normalizes to a Laurent polynomial (exercised through the store).
CheckReport check_polynomiality(int g, int r, APolyStore& store);
CheckReport check_rank_one(int g, int b, APolyStore& store);
CheckReport check_zeta(int g, int b);
CheckReport check_component_sum(int g, int b, int R = 10);

/// Every check over 1 <= g <= max_g, 0 <= b <= g, 1 <= r <= max_r, in a fixed
/// order regardless of `jobs`. Empty when either bound is below 1.
std::vector<CheckReport> run_suite(int max_g, int max_r, APolyStore& store, int jobs = 1);

bool all_pass(const std::vector<CheckReport>& reports);
std::string render_text(const std::vector<CheckReport>& reports);
std::string render_json(const std::vector<CheckReport>& reports);

}  // namespace realhiggs
