#include "doctest.h"
#include "toricdiv/rational.hpp"

#include <random>

using toricdiv::Integer;
using toricdiv::Rational;

TEST_CASE("rational normal form") {
    Rational a(Integer(6), Integer(-4));
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(a.str() == "-3/2");
    CHECK(Rational(Integer(0), Integer(-7)).str() == "0");
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), toricdiv::Error);
}

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("5/6") == Rational(Integer(5), Integer(6)));
    CHECK(Rational::parse("-31/30").str() == "-31/30");
    CHECK(Rational::parse("4").is_integer());
    CHECK(Rational::parse("10/4").str() == "5/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), toricdiv::Error);
    CHECK_THROWS_AS(Rational::parse("abc"), toricdiv::Error);
    CHECK_THROWS_AS(Rational::parse(""), toricdiv::Error);
}

TEST_CASE("rational arithmetic") {
    Rational half(Integer(1), Integer(2)), third(Integer(1), Integer(3));
    CHECK(half + third == Rational(Integer(5), Integer(6)));
    CHECK(half - third == Rational(Integer(1), Integer(6)));
    CHECK(half * third == Rational(Integer(1), Integer(6)));
    CHECK(half / third == Rational(Integer(3), Integer(2)));
    CHECK(third < half);
    CHECK(Rational(Integer(-7), Integer(2)).floor() == -4);
    CHECK(Rational(Integer(-7), Integer(2)).frac() == half);
    CHECK_THROWS_AS(half / Rational(0), toricdiv::Error);
}

TEST_CASE("big values stay exact") {
    Integer big = 1;
    for (int i = 0; i < 40; ++i) big *= 1000003;
    Rational x(big, big + 1);
    Rational y = x * Rational(big + 1, big);
    CHECK(y == Rational(1));
}

TEST_CASE("random field identities") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> d(-50, 50);
    for (int i = 0; i < 500; ++i) {
        auto pick = [&] {
            long long den = 0;
            while (den == 0) den = d(rng);
            return Rational(Integer(d(rng)), Integer(den));
        };
        Rational a = pick(), b = pick(), c = pick();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(gcd(a.num(), a.den()) == 1);
        CHECK(a.den() > 0);
    }
}
