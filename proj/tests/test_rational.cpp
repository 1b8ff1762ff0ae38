#include "symq/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace symq;

TEST_CASE("factorial of small integers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(10) == 3628800);
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("inv_factorial uses the 1/n! = 0 convention below zero") {
    CHECK(inv_factorial(0) == Rational(1));
    CHECK(inv_factorial(3) == Rational(Int(1), Int(6)));
    CHECK(inv_factorial(-1) == Rational(0));
    CHECK(inv_factorial(-5) == Rational(0));
}

TEST_CASE("binomial vanishes outside 0 <= k <= n") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-2, 0) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(14, 7) == 3432);
}

TEST_CASE("binomial satisfies the Pascal recurrence on a grid") {
    for (long n = 1; n <= 12; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("pow2") {
    CHECK(pow2(0) == 1);
    CHECK(pow2(1) == 2);
    CHECK(pow2(10) == 1024);
    CHECK_THROWS_AS(pow2(-1), std::invalid_argument);
}

TEST_CASE("to_string renders lowest terms") {
    CHECK(to_string(Rational(3)) == "3");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(Rational(Int(-1), Int(2))) == "-1/2");
    CHECK(to_string(Rational(Int(2), Int(4))) == "1/2");
    CHECK(to_string(Rational(Int(6)) / Rational(Int(-4))) == "-3/2");
}

TEST_CASE("to_int64 range checks") {
    CHECK(to_int64(Int(42)) == 42);
    CHECK(to_int64(Int(-42)) == -42);
    CHECK_THROWS_AS(to_int64(Int(1) << 70), std::overflow_error);
}
