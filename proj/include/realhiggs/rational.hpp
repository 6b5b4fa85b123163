#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace realhiggs {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger is promoted to a GMP rational and demoted again as soon
/// as it fits. The representation is always canonical, so equality is a
/// plain field comparison.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n == INT64_MIN ? 0 : n) {  // NOLINT: implicit by design of an arithmetic type
        if (n == INT64_MIN) set_big(mpq_class(mpz_class(static_cast<long>(n))));
    }
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q) { set_big(mpq_class(q)); }

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    /// Parses "n", "-n" or "n/d".
    static Rational parse(std::string_view s);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;

    /// Canonical "num/den" form; the denominator is always printed.
    std::string to_string() const;
    /// "num" for integers, "num/den" otherwise.
    std::string to_short_string() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_short_string();
    }

private:
    void set_big(mpq_class&& q);
    void set_from_i128(__int128 n, __int128 d);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;  // non-null: value lives here, num_/den_ unused
};

}  // namespace realhiggs
