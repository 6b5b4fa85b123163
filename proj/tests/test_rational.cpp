#include <doctest.h>

#include <climits>
#include <random>

#include "realhiggs/rational.hpp"

using realhiggs::Rational;

TEST_CASE("rational canonical form") {
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(0, 5).to_string() == "0/1");
    CHECK(Rational(7).to_short_string() == "7");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("rational matches mpq on random operations") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> small(-50, 50);
    std::uniform_int_distribution<std::int64_t> huge(INT64_MIN / 2, INT64_MAX / 2);
    for (int i = 0; i < 2000; ++i) {
        bool big = i % 3 == 0;
        std::int64_t an = big ? huge(rng) : small(rng), bn = big ? huge(rng) : small(rng);
        std::int64_t ad = small(rng), bd = small(rng);
        if (ad == 0) ad = 1;
        if (bd == 0) bd = 3;
        Rational a(an, ad), b(bn, bd);
        mpq_class qa(mpz_class(static_cast<long>(an)), mpz_class(static_cast<long>(ad)));
        mpq_class qb(mpz_class(static_cast<long>(bn)), mpz_class(static_cast<long>(bd)));
        qa.canonicalize();
        qb.canonicalize();
        CHECK((a + b).to_mpq() == qa + qb);
        CHECK((a - b).to_mpq() == qa - qb);
        CHECK((a * b).to_mpq() == qa * qb);
        if (!b.is_zero()) CHECK((a / b).to_mpq() == qa / qb);
        CHECK((a < b) == (qa < qb));
    }
}

TEST_CASE("rational overflow promotes and demotes") {
    Rational big(INT64_MAX);
    Rational sum = big + big;
    CHECK(sum.to_string() == "18446744073709551614/1");
    CHECK((sum - big) == big);
    CHECK(((sum - big - big)).is_zero());
    Rational m(INT64_MIN);
    CHECK((-m).to_string() == "9223372036854775808/1");
}
