#include "satake/linalg.hpp"

#include <doctest.h>

#include <climits>
#include <random>

using satake::Rational;

namespace {

Rational from(const mpq_class& q) { return Rational(q); }

}  // namespace

TEST_CASE("rational arithmetic agrees with mpq on random operands")
{
    std::mt19937_64 rng(20261015);
    // Mix small values with values near the int64 boundary so both the inline
    // and the promoted representations are exercised.
    std::uniform_int_distribution<std::int64_t> small(-1000, 1000);
    std::uniform_int_distribution<std::int64_t> huge(INT64_MIN / 2, INT64_MAX / 2);
    auto draw = [&](int k) {
        std::int64_t n = k % 3 == 0 ? huge(rng) : small(rng);
        std::int64_t d = k % 5 == 0 ? huge(rng) : small(rng);
        if (d == 0)
            d = 7;
        mpq_class q(mpz_class(std::to_string(n)), mpz_class(std::to_string(d)));
        q.canonicalize();
        return q;
    };
    for (int k = 0; k < 4000; ++k) {
        const mpq_class a = draw(k), b = draw(k + 1);
        const Rational ra = from(a), rb = from(b);
        CHECK((ra + rb).to_mpq() == a + b);
        CHECK((ra - rb).to_mpq() == a - b);
        CHECK((ra * rb).to_mpq() == a * b);
        if (b != 0)
            CHECK((ra / rb).to_mpq() == a / b);
        CHECK(compare(ra, rb) == cmp(a, b));
        CHECK((ra == rb) == (a == b));
    }
}

TEST_CASE("rational results that fit return to the inline form")
{
    Rational big = Rational(INT64_MAX) * Rational(4);
    CHECK_FALSE(big.is_small());
    Rational back = big / Rational(4);
    CHECK(back.is_small());
    CHECK(back == Rational(INT64_MAX));
    CHECK(Rational(INT64_MIN) / Rational(-1) == Rational(mpq_class(mpz_class("9223372036854775808"))));
}

TEST_CASE("rational canonical form and rendering")
{
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(satake::to_string(Rational(6, -4)) == "-3/2");
    CHECK(satake::to_string(Rational(5)) == "5/1");
    CHECK(satake::to_string(Rational(0)) == "0/1");
    CHECK(satake::parse_rational("-3/2") == Rational(-3, 2));
    CHECK(satake::parse_rational("4") == Rational(4));
    CHECK(satake::parse_rational("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(satake::parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(satake::parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}
