#include "realhiggs/laurent_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "realhiggs/errors.hpp"

namespace realhiggs {

std::string var_name(std::size_t index) {
    switch (index) {
        case 0: return "q";
        case 1: return "z";
        case 2: return "u";
        default: return "a" + std::to_string(index - 2);
    }
}

Monomial::Monomial(std::initializer_list<int> exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("Monomial: too many exponents");
    std::size_t i = 0;
    for (int x : exps) e[i++] = static_cast<Exponent>(x);
}

Monomial Monomial::scaled(int k) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        int v = e[i] * k;
        if (v > INT16_MAX || v < INT16_MIN) throw std::overflow_error("Monomial: exponent overflow");
        r.e[i] = static_cast<Exponent>(v);
    }
    return r;
}

namespace {

using Term = LaurentPoly::Term;

void check_arity(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.arity() != b.arity())
        throw ArityMismatch("LaurentPoly: arity " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
}

bool descending(const Term& a, const Term& b) { return a.mono > b.mono; }

// Open-addressing accumulator for products; insertion order is irrelevant
// because the result is sorted afterwards.
class TermAccumulator {
public:
    explicit TermAccumulator(std::size_t expected) {
        std::size_t cap = 16;
        while (cap < expected * 2) cap <<= 1;
        slots_.assign(cap, kEmpty);
        terms_.reserve(expected);
    }

    void add(const Monomial& m, Rational&& c) {
        std::size_t mask = slots_.size() - 1;
        std::size_t i = m.hash() & mask;
        while (true) {
            std::uint32_t s = slots_[i];
            if (s == kEmpty) {
                slots_[i] = static_cast<std::uint32_t>(terms_.size());
                terms_.push_back(Term{m, std::move(c)});
                if (terms_.size() * 2 > slots_.size()) grow();
                return;
            }
            if (terms_[s].mono == m) {
                terms_[s].coef += c;
                return;
            }
            i = (i + 1) & mask;
        }
    }

    std::vector<Term> take() {
        std::erase_if(terms_, [](const Term& t) { return t.coef.is_zero(); });
        std::sort(terms_.begin(), terms_.end(), descending);
        return std::move(terms_);
    }

private:
    static constexpr std::uint32_t kEmpty = UINT32_MAX;

    void grow() {
        std::vector<std::uint32_t> fresh(slots_.size() * 2, kEmpty);
        std::size_t mask = fresh.size() - 1;
        for (std::uint32_t idx = 0; idx < terms_.size(); ++idx) {
            std::size_t i = terms_[idx].mono.hash() & mask;
            while (fresh[i] != kEmpty) i = (i + 1) & mask;
            fresh[i] = idx;
        }
        slots_.swap(fresh);
    }

    std::vector<std::uint32_t> slots_;
    std::vector<Term> terms_;
};

std::string term_context(const LaurentPoly& p, const LaurentPoly& d, const Monomial& m, const Rational& c) {
    LaurentPoly t = LaurentPoly::monomial(c, m, p.arity());
    std::ostringstream os;
    os << "dividend has " << p.size() << " terms, divisor " << d.to_string() << ", offending quotient term "
       << t.to_string();
    return os.str();
}

struct Box {
    std::vector<int> lo, hi;
    bool contains(const Monomial& m) const {
        for (std::size_t v = 0; v < lo.size(); ++v)
            if (m[v] < lo[v] || m[v] > hi[v]) return false;
        return true;
    }
};

// Per-variable bounds any exact quotient must satisfy: in a Laurent domain the
// min and max degree in each variable add under multiplication.
Box quotient_box(const LaurentPoly& p, const LaurentPoly& d) {
    Box b;
    for (std::size_t v = 0; v < p.arity(); ++v) {
        auto [pl, ph] = p.degree_range(v);
        auto [dl, dh] = d.degree_range(v);
        b.lo.push_back(pl - dl);
        b.hi.push_back(ph - dh);
    }
    return b;
}

// Division by c1*x^A + c2*x^B (A > B). Quotient coefficients obey
// Q[m] = (P[m+A] - c2*Q[m+A-B]) / c1, so walking m downward merges the
// shifted dividend with a FIFO of pending corrections: linear time.
std::optional<std::vector<Term>> divide_binomial(const LaurentPoly& p, const LaurentPoly& d, std::string* why) {
    const Term& hi = d.terms()[0];
    const Term& lo = d.terms()[1];
    const Monomial delta = hi.mono - lo.mono;
    const Rational inv_c1 = Rational(1) / hi.coef;
    const Rational carry = -(lo.coef * inv_c1);
    const Box box = quotient_box(p, d);

    std::vector<Term> out;
    out.reserve(p.size());
    std::deque<Term> pending;
    const auto& pt = p.terms();
    std::size_t i = 0;
    while (i < pt.size() || !pending.empty()) {
        Monomial m;
        bool from_p = false, from_q = false;
        if (i < pt.size()) {
            m = pt[i].mono - hi.mono;
            from_p = true;
        }
        if (!pending.empty()) {
            if (!from_p || pending.front().mono > m) {
                m = pending.front().mono;
                from_p = false;
                from_q = true;
            } else if (pending.front().mono == m) {
                from_q = true;
            }
        }
        Rational val;
        if (from_p) {
            val = pt[i].coef * inv_c1;
            ++i;
        }
        if (from_q) {
            val += pending.front().coef;
            pending.pop_front();
        }
        if (val.is_zero()) continue;
        if (!box.contains(m)) {
            if (why) *why = term_context(p, d, m, val);
            return std::nullopt;
        }
        pending.push_back(Term{m - delta, val * carry});
        out.push_back(Term{m, std::move(val)});
    }
    return out;
}

// General long division by the lexicographic leading term.
std::optional<std::vector<Term>> divide_general(const LaurentPoly& p, const LaurentPoly& d, std::string* why) {
    const Term& lead = d.leading();
    const Rational inv = Rational(1) / lead.coef;
    const Box box = quotient_box(p, d);
    std::map<Monomial, Rational, std::greater<>> rem;
    for (const auto& t : p.terms()) rem.emplace(t.mono, t.coef);
    std::vector<Term> out;
    while (!rem.empty()) {
        auto it = rem.begin();
        Monomial m = it->first - lead.mono;
        Rational c = it->second * inv;
        rem.erase(it);
        if (!box.contains(m)) {
            if (why) *why = term_context(p, d, m, c);
            return std::nullopt;
        }
        for (std::size_t k = 1; k < d.size(); ++k) {
            const Term& dt = d.terms()[k];
            Monomial key = m + dt.mono;
            Rational sub = c * dt.coef;
            auto [pos, inserted] = rem.try_emplace(key, -sub);
            if (!inserted) {
                pos->second -= sub;
                if (pos->second.is_zero()) rem.erase(pos);
            }
        }
        out.push_back(Term{m, std::move(c)});
    }
    return out;
}

}  // namespace

LaurentPoly LaurentPoly::constant(const Rational& c, std::size_t arity) {
    return monomial(c, Monomial{}, arity);
}

LaurentPoly LaurentPoly::var(VarId v, std::size_t arity) {
    if (v.index() >= arity) throw ArityMismatch("LaurentPoly: variable " + var_name(v.index()) + " outside arity");
    return monomial(Rational(1), Monomial::of(v), arity);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, const Monomial& m, std::size_t arity) {
    LaurentPoly p(arity);
    if (!c.is_zero()) p.terms_.push_back(Term{m, c});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::size_t arity, std::vector<Term> terms) {
    LaurentPoly p(arity);
    std::sort(terms.begin(), terms.end(), descending);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coef += t.coef;
            if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
        } else if (!t.coef.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Rational LaurentPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.mono > key; });
    if (it != terms_.end() && it->mono == m) return it->coef;
    return Rational(0);
}

std::pair<int, int> LaurentPoly::degree_range(std::size_t var) const {
    if (terms_.empty()) return {0, 0};
    int lo = terms_[0].mono[var], hi = lo;
    for (const auto& t : terms_) {
        lo = std::min<int>(lo, t.mono[var]);
        hi = std::max<int>(hi, t.mono[var]);
    }
    return {lo, hi};
}

bool LaurentPoly::free_of(std::size_t var) const {
    return std::all_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] == 0; });
}

LaurentPoly LaurentPoly::with_arity(std::size_t arity) const {
    for (std::size_t v = arity; v < arity_; ++v)
        if (!free_of(v)) throw ArityMismatch("LaurentPoly: cannot drop variable " + var_name(v) + " in use");
    LaurentPoly r = *this;
    r.arity_ = arity;
    return r;
}

LaurentPoly merge_combine(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    check_arity(a, b);
    LaurentPoly r(a.arity_);
    r.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin(), ie = a.terms_.end();
    auto j = b.terms_.begin(), je = b.terms_.end();
    while (i != ie && j != je) {
        if (i->mono > j->mono) {
            r.terms_.push_back(*i++);
        } else if (j->mono > i->mono) {
            r.terms_.push_back(Term{j->mono, subtract ? -j->coef : j->coef});
            ++j;
        } else {
            Rational c = i->coef;
            if (subtract)
                c -= j->coef;
            else
                c += j->coef;
            if (!c.is_zero()) r.terms_.push_back(Term{i->mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i != ie; ++i) r.terms_.push_back(*i);
    for (; j != je; ++j) r.terms_.push_back(Term{j->mono, subtract ? -j->coef : j->coef});
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return *this = merge_combine(*this, o, false); }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this = merge_combine(*this, o, true); }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto& t : terms_) t.coef *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m, const Rational& c) const {
    LaurentPoly r(arity_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.mono + m, c.is_one() ? t.coef : t.coef * c});
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_arity(a, b);
    if (a.is_zero() || b.is_zero()) return LaurentPoly(a.arity());
    const LaurentPoly& small = a.size() <= b.size() ? a : b;
    const LaurentPoly& big = a.size() <= b.size() ? b : a;
    if (small.size() <= 8) {
        // Shifting by a monomial preserves the order, so a few merges beat hashing.
        LaurentPoly acc = big.shifted(small.terms()[0].mono, small.terms()[0].coef);
        for (std::size_t k = 1; k < small.size(); ++k)
            acc += big.shifted(small.terms()[k].mono, small.terms()[k].coef);
        return acc;
    }
    TermAccumulator accum(big.size() * 4);
    for (const auto& s : small.terms())
        for (const auto& t : big.terms()) accum.add(s.mono + t.mono, s.coef * t.coef);
    LaurentPoly r(a.arity());
    r.terms_ = accum.take();
    return r;
}

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly pow(const LaurentPoly& p, unsigned n) {
    LaurentPoly r = LaurentPoly::constant(1, p.arity());
    LaurentPoly base = p;
    while (n > 0) {
        if (n & 1u) r *= base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return r;
}

std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& p, const LaurentPoly& d) {
    check_arity(p, d);
    if (d.is_zero()) throw std::domain_error("exact_divide: zero divisor");
    if (p.is_zero()) return LaurentPoly(p.arity());
    if (d.size() == 1) return p.shifted(-d.leading().mono, Rational(1) / d.leading().coef);
    auto terms = d.size() == 2 ? divide_binomial(p, d, nullptr) : divide_general(p, d, nullptr);
    if (!terms) return std::nullopt;
    return LaurentPoly::from_terms(p.arity(), std::move(*terms));
}

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d) {
    check_arity(p, d);
    if (d.is_zero()) throw std::domain_error("exact_divide: zero divisor");
    if (p.is_zero()) return LaurentPoly(p.arity());
    if (d.size() == 1) return p.shifted(-d.leading().mono, Rational(1) / d.leading().coef);
    std::string why;
    auto terms = d.size() == 2 ? divide_binomial(p, d, &why) : divide_general(p, d, &why);
    if (!terms) throw NotDivisible("exact_divide: divisor " + d.to_string() + " does not divide", why);
    return LaurentPoly::from_terms(p.arity(), std::move(*terms));
}

LaurentPoly substitute_powers(const LaurentPoly& p, int k) {
    if (k < 1) throw std::invalid_argument("substitute_powers: k must be positive");
    if (k == 1) return p;
    // Scaling by k > 0 is strictly monotone for lex order: order is preserved.
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) terms.push_back({t.mono.scaled(k), t.coef});
    LaurentPoly r(p.arity());
    r = LaurentPoly::from_terms(p.arity(), std::move(terms));
    return r;
}

std::vector<MonomialImage> identity_images(std::size_t arity) {
    std::vector<MonomialImage> imgs(arity);
    for (std::size_t v = 0; v < arity; ++v) imgs[v].mono[v] = 1;
    return imgs;
}

LaurentPoly substitute_monomials(const LaurentPoly& p, std::span<const MonomialImage> images,
                                 std::size_t target_arity) {
    if (images.size() != p.arity())
        throw ArityMismatch("substitute_monomials: need one image per source variable");
    for (const auto& img : images)
        if (img.coef.is_zero()) throw std::domain_error("substitute_monomials: zero image coefficient");
    std::vector<LaurentPoly::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m;
        Rational c = t.coef;
        for (std::size_t v = 0; v < p.arity(); ++v) {
            int e = t.mono[v];
            if (e == 0) continue;
            m = m + images[v].mono.scaled(e);
            const Rational& ic = images[v].coef;
            if (ic.is_one()) continue;
            if (ic == Rational(-1)) {
                if (e % 2 != 0) c = -c;
                continue;
            }
            Rational f = e > 0 ? ic : Rational(1) / ic;
            for (int n = e > 0 ? e : -e; n > 0; --n) c *= f;
        }
        for (std::size_t v = target_arity; v < kMaxVars; ++v)
            if (m[v] != 0) throw ArityMismatch("substitute_monomials: image outside target arity");
        out.push_back({m, std::move(c)});
    }
    return LaurentPoly::from_terms(target_arity, std::move(out));
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (k) s += " + ";
        s += terms_[k].coef.to_string();
        for (std::size_t v = 0; v < arity_; ++v) {
            int e = terms_[k].mono[v];
            if (e == 0) continue;
            s += '*';
            s += var_name(v);
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

LaurentPoly LaurentPoly::parse(std::string_view text, std::size_t arity) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\n' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\n' || s.back() == '\t' || s.back() == '\r'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text == "0" || text.empty()) return LaurentPoly(arity);
    std::vector<Term> terms;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(" + ", pos);
        std::string_view tok = trim(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        std::size_t star = tok.find('*');
        Term t{Monomial{}, Rational::parse(tok.substr(0, star))};
        while (star != std::string_view::npos) {
            std::size_t nstar = tok.find('*', star + 1);
            std::string_view f = tok.substr(star + 1, nstar == std::string_view::npos ? std::string_view::npos : nstar - star - 1);
            std::size_t caret = f.find('^');
            std::string name(f.substr(0, caret));
            int e = caret == std::string_view::npos ? 1 : std::stoi(std::string(f.substr(caret + 1)));
            std::size_t idx = arity;
            for (std::size_t v = 0; v < arity; ++v)
                if (var_name(v) == name) idx = v;
            if (idx == arity) throw std::invalid_argument("LaurentPoly::parse: unknown variable '" + name + "'");
            t.mono[idx] = static_cast<Monomial::Exponent>(t.mono[idx] + e);
            star = nstar;
        }
        terms.push_back(std::move(t));
        if (next == std::string_view::npos) break;
        pos = next + 3;
    }
    return from_terms(arity, std::move(terms));
}

}  // namespace realhiggs
