#include "realhiggs/verify.hpp"

#include <functional>
#include <sstream>

#include <json.hpp>

#include "realhiggs/errors.hpp"
#include "realhiggs/parallel.hpp"
#include "realhiggs/rank2.hpp"
#include "realhiggs/specialization.hpp"
#include "realhiggs/zeta.hpp"

namespace realhiggs {

namespace {

CheckReport make(std::string name, int g, int b, int r) {
    CheckReport c;
    c.name = std::move(name);
    c.g = g;
    c.b = b;
    c.r = r;
    return c;
}

// Failures are data: any exception becomes a failing report.
CheckReport guarded(CheckReport base, const std::function<void(CheckReport&)>& body) {
    try {
        body(base);
    } catch (const std::exception& e) {
        base.pass = false;
        base.detail = std::string("exception: ") + e.what();
    }
    return base;
}

void compare(CheckReport& c, const std::string& expected, const std::string& actual) {
    c.pass = expected == actual;
    if (!c.pass) {
        c.expected = expected;
        c.actual = actual;
    }
}

}  // namespace

CheckReport check_divisibility(int g, int b, int r, APolyStore& store) {
    return guarded(make("divisibility", g, b, r), [&](CheckReport& c) {
        UPoly p = real_betti(store.get(g, r), b).poly;
        UPoly quotient = exact_divide(p, divisibility_factor(g, b));
        c.detail = quotient.to_string();
        c.pass = quotient.has_integer_coefficients();
        if (!c.pass) c.actual = quotient.to_string();
    });
}

CheckReport check_symmetry(int g, int r, APolyStore& store) {
    return guarded(make("symmetry", g, -1, r), [&](CheckReport& c) {
        const LaurentPoly a = store.get(g, r).value;
        const std::size_t n = a.arity();
        c.pass = true;
        auto check = [&](const std::vector<MonomialImage>& images, const std::string& what) {
            if (!c.pass) return;
            LaurentPoly image = substitute_monomials(a, images, n);
            if (image != a) {
                c.pass = false;
                c.detail = what;
                c.expected = a.to_string();
                c.actual = image.to_string();
            }
        };
        for (int i = 1; i < g; ++i) {
            auto images = identity_images(n);
            std::swap(images[VarId::a(i).index()], images[VarId::a(i + 1).index()]);
            check(images, "transposition a" + std::to_string(i) + " <-> a" + std::to_string(i + 1));
        }
        for (int i = 1; i <= g; ++i) {
            auto images = identity_images(n);
            images[VarId::a(i).index()].mono = Monomial::of(VarId::q()) - Monomial::of(VarId::a(i));
            check(images, "a" + std::to_string(i) + " -> q/a" + std::to_string(i));
        }
    });
}

CheckReport check_degree(int g, int b, int r, APolyStore& store) {
    return guarded(make("degree", g, b, r), [&](CheckReport& c) {
        UPoly p = real_betti(store.get(g, r), b).poly;
        compare(c, std::to_string(moduli_dimension(g, r)), std::to_string(p.degree()));
    });
}

CheckReport check_rank2(int g, int b, APolyStore& store) {
    return guarded(make("rank2_closed_form", g, b, 2), [&](CheckReport& c) {
        compare(c, real_betti(store.get(g, 2), b).poly.to_string(), p_rank2(g, b).poly.to_string());
    });
}

CheckReport check_pipeline_agreement(int g, int b, int r, APolyStore& store) {
    return guarded(make("pipeline_agreement", g, b, r), [&](CheckReport& c) {
        compare(c, real_betti(store.get(g, r), b).poly.to_string(),
                real_betti(g, b, r, Pipeline::FastSpecialized).poly.to_string());
    });
}

CheckReport check_polynomiality(int g, int r, APolyStore& store) {
    return guarded(make("polynomiality", g, -1, r), [&](CheckReport& c) {
        c.detail = std::to_string(store.get(g, r).value.size()) + " terms";
        c.pass = true;
    });
}

CheckReport check_rank_one(int g, int b, APolyStore& store) {
    return guarded(make("rank_one", g, b, 1), [&](CheckReport& c) {
        UPoly expected = divisibility_factor(g, b) * UPoly::monomial(g % 2 == 0 ? 1 : -1, g);
        compare(c, expected.to_string(), real_betti(store.get(g, 1), b).poly.to_string());
    });
}

CheckReport check_zeta(int g, int b) {
    return guarded(make("zeta_substitution", g, b, 0), [&](CheckReport& c) {
        ZetaReport z = zeta_substitution_check(g, b);
        c.pass = z.holds;
        if (!z.holds) {
            c.expected = z.rhs;
            c.actual = z.lhs;
        }
    });
}

CheckReport check_component_sum(int g, int b, int R) {
    return guarded(make("component_sum", g, b, 0), [&](CheckReport& c) {
        ZSeries closed = real_sym_series(g, b, R);
        ZSeries parts = component_sum_series(g, b, R);
        c.pass = true;
        for (std::size_t n = 0; n < closed.coeffs.size() && c.pass; ++n) {
            if (closed.coeffs[n] != parts.coeffs[n]) {
                c.pass = false;
                c.detail = "z^" + std::to_string(n);
                c.expected = closed.coeffs[n].to_string();
                c.actual = parts.coeffs[n].to_string();
            }
        }
    });
}

std::vector<CheckReport> run_suite(int max_g, int max_r, APolyStore& store, int jobs) {
    std::vector<std::function<CheckReport()>> tasks;
    if (max_g >= 1 && max_r >= 1) {
        for (int g = 1; g <= max_g; ++g) {
            for (int r = 1; r <= max_r; ++r) {
                tasks.push_back([=, &store] { return check_polynomiality(g, r, store); });
                tasks.push_back([=, &store] { return check_symmetry(g, r, store); });
            }
            for (int b = 0; b <= g; ++b) {
                for (int r = 1; r <= max_r; ++r) {
                    tasks.push_back([=, &store] { return check_divisibility(g, b, r, store); });
                    tasks.push_back([=, &store] { return check_degree(g, b, r, store); });
                    tasks.push_back([=, &store] { return check_pipeline_agreement(g, b, r, store); });
                }
                tasks.push_back([=, &store] { return check_rank_one(g, b, store); });
                if (max_r >= 2) tasks.push_back([=, &store] { return check_rank2(g, b, store); });
                tasks.push_back([=] { return check_zeta(g, b); });
                tasks.push_back([=] { return check_component_sum(g, b); });
            }
        }
    }
    std::vector<CheckReport> out(tasks.size());
    parallel_for(tasks.size(), jobs, [&](std::size_t i) { out[i] = tasks[i](); });
    return out;
}

bool all_pass(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

std::string render_text(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    int failed = 0;
    for (const auto& c : reports) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << " g=" << c.g;
        if (c.b >= 0) os << " b=" << c.b;
        if (c.r > 0) os << " r=" << c.r;
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << '\n';
        if (!c.pass) {
            ++failed;
            if (!c.expected.empty()) os << "    expected: " << c.expected << '\n';
            if (!c.actual.empty()) os << "    actual:   " << c.actual << '\n';
        }
    }
    os << reports.size() - static_cast<std::size_t>(failed) << "/" << reports.size() << " checks passed\n";
    return os.str();
}

std::string render_json(const std::vector<CheckReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : reports) {
        nlohmann::json params = {{"g", c.g}};
        params["b"] = c.b >= 0 ? nlohmann::json(c.b) : nlohmann::json(nullptr);
        params["r"] = c.r > 0 ? nlohmann::json(c.r) : nlohmann::json(nullptr);
        arr.push_back({{"check", c.name},
                       {"params", params},
                       {"status", c.pass ? "pass" : "fail"},
                       {"expected", c.expected},
                       {"actual", c.actual},
                       {"detail", c.detail}});
    }
    return arr.dump(2) + "\n";
}

}  // namespace realhiggs
