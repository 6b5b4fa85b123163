#include "realhiggs/rational.hpp"

#include <stdexcept>

namespace realhiggs {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t uabs64(std::int64_t v) { return v < 0 ? std::uint64_t(0) - std::uint64_t(v) : std::uint64_t(v); }

bool fits64(i128 v) { return v > i128(INT64_MIN) && v <= i128(INT64_MAX); }

mpz_class mpz_from_i128(i128 v) {
    u128 a = uabs(v);
    mpz_class hi(static_cast<unsigned long>(a >> 64));
    mpz_class lo(static_cast<unsigned long>(a & ~std::uint64_t(0)));
    mpz_class r = (hi << 64) + lo;
    return v < 0 ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    set_from_i128(n, d);
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    std::string ns(s.substr(0, slash));
    std::string ds = slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1));
    if (!ns.empty() && ns[0] == '+') ns.erase(0, 1);
    mpz_class n, d;
    if (n.set_str(ns, 10) != 0 || d.set_str(ds, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

void Rational::set_big(mpq_class&& q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n != mpz_class(static_cast<long>(INT64_MIN))) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
        return;
    }
    if (big_)
        *big_ = std::move(q);
    else
        big_ = std::make_unique<mpq_class>(std::move(q));
}

void Rational::set_from_i128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    u128 g = gcd128(uabs(n), u128(d));
    if (g > 1) {
        n /= i128(g);
        d /= i128(g);
    }
    if (fits64(n) && fits64(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
        return;
    }
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    set_big(std::move(q));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }

std::string Rational::to_string() const {
    if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_short_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t r;
            if (!__builtin_add_overflow(num_, o.num_, &r) && r != INT64_MIN) {
                num_ = r;
                return *this;
            }
            set_from_i128(i128(num_) + o.num_, 1);
            return *this;
        }
        std::uint64_t g = gcd64(std::uint64_t(den_), std::uint64_t(o.den_));
        i128 n = i128(num_) * (o.den_ / std::int64_t(g)) + i128(o.num_) * (den_ / std::int64_t(g));
        i128 d = i128(den_ / std::int64_t(g)) * o.den_;
        set_from_i128(n, d);
        return *this;
    }
    set_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (num_ == 0 || o.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t r;
            if (!__builtin_mul_overflow(num_, o.num_, &r) && r != INT64_MIN) {
                num_ = r;
                return *this;
            }
            set_from_i128(i128(num_) * o.num_, 1);
            return *this;
        }
        std::uint64_t g1 = gcd64(uabs64(num_), std::uint64_t(o.den_));
        std::uint64_t g2 = gcd64(uabs64(o.num_), std::uint64_t(den_));
        i128 n = i128(num_ / std::int64_t(g1)) * (o.num_ / std::int64_t(g2));
        i128 d = i128(den_ / std::int64_t(g2)) * (o.den_ / std::int64_t(g1));
        set_from_i128(n, d);
        return *this;
    }
    set_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!big_ && !o.big_) {
        std::int64_t on = o.num_ < 0 ? -o.num_ : o.num_;
        std::int64_t od = o.num_ < 0 ? -o.den_ : o.den_;
        std::uint64_t g1 = gcd64(uabs64(num_), std::uint64_t(on));
        std::uint64_t g2 = gcd64(std::uint64_t(den_), std::uint64_t(o.den_));
        i128 n = i128(num_ / std::int64_t(g1)) * (od / std::int64_t(g2));
        i128 d = i128(den_ / std::int64_t(g2)) * (on / std::int64_t(g1));
        set_from_i128(n, d);
        return *this;
    }
    set_big(to_mpq() / o.to_mpq());
    return *this;
}

Rational Rational::operator-() const {
    Rational r(*this);
    if (r.big_)
        *r.big_ = -*r.big_;
    else
        r.num_ = -r.num_;
    return r;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a value that fits inline is never stored big
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 l = i128(a.num_) * b.den_;
        i128 r = i128(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

}  // namespace realhiggs
