#include <catch2/catch_amalgamated.hpp>

#include "fibercheck/rational.hpp"
#include "helpers.hpp"

using namespace fibercheck;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(3, -6).den() == 2);  // den > 0 after normalization
    CHECK(Rational(3, -6).num() == -1);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("rational field axioms on random samples") {
    std::mt19937 rng(20240511);
    for (int i = 0; i < 300; ++i) {
        Rational a = testgen::random_rational(rng), b = testgen::random_rational(rng),
                 c = testgen::random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
        // canonical invariants after arithmetic
        Rational r = a * b - c;
        CHECK(r.den() > 0);
        mpz_class g;
        mpz_class n = ::abs(r.num()), d = r.den();
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        CHECK((g == 1 || r.num() == 0));
    }
}

TEST_CASE("rational square roots") {
    CHECK(*rational_sqrt(Rational(9, 16)) == Rational(3, 4));
    CHECK(*rational_sqrt(Rational(0)) == Rational(0));
    CHECK(!rational_sqrt(Rational(2)));
    CHECK(!rational_sqrt(Rational(-4)));
    std::mt19937 rng(77);
    for (int i = 0; i < 100; ++i) {
        Rational a = testgen::random_rational(rng);
        auto s = rational_sqrt(a * a);
        REQUIRE(s);
        CHECK(*s == a.abs());
    }
}
