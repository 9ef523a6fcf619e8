#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "stochpoly/numerics.hpp"

using namespace stochpoly;

TEST_SUITE("numerics")
{
    TEST_CASE("binomial small values")
    {
        CHECK(binomial(7, 7) == 1);
        CHECK(binomial(8, 7) == 8);
        CHECK(binomial(15, 8) == 6435);
        CHECK(binomial(23, 19) == 8855);
        CHECK(binomial(22, 19) == 1540);
        CHECK(binomial(27, 19) == 2220075);
        CHECK(binomial(5, -1) == 0);
        CHECK(binomial(5, 6) == 0);
        CHECK(binomial(0, 0) == 1);
        CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
    }

    TEST_CASE("binomial agrees with Pascal's triangle")
    {
        const auto rows = oracle::pascal(200);
        for (int n = 0; n <= 200; ++n) {
            for (int k = 0; k <= n; ++k) {
                REQUIRE(binomial(n, k) == rows[n][k]);
            }
        }
    }

    TEST_CASE("binomial symmetry and Pascal rule on random large arguments")
    {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> pick_n(1, 3000);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = pick_n(rng);
            const int k = std::uniform_int_distribution<int>(0, n)(rng);
            CHECK(binomial(n, k) == binomial(n, n - k));
            if (k >= 1) {
                CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    TEST_CASE("factorial and powers")
    {
        CHECK(factorial(0) == 1);
        CHECK(factorial(10) == 3628800);
        CHECK(to_string(factorial(25)) == "15511210043330985984000000");
        CHECK(rational_pow(make_rational(2, 3), 3) == make_rational(8, 27));
        CHECK(rational_pow(make_rational(2, 3), -2) == make_rational(9, 4));
        CHECK(rational_pow(Rational(0), 0) == 1);
        CHECK_THROWS_AS(rational_pow(Rational(0), -1), std::domain_error);
    }

    TEST_CASE("rationals stay exact and canonical")
    {
        Rational third = make_rational(1, 3);
        CHECK(third + third + third == 1);
        CHECK(make_rational(2, 4) == make_rational(1, 2));
        CHECK(to_string(make_rational(6, -4)) == "-3/2");
        CHECK(to_string(make_rational(10, 5)) == "2");
        CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
        CHECK(sign(make_rational(-1, 7)) == -1);
        CHECK(sign(Rational(0)) == 0);
        CHECK(sign(BigInt(5)) == 1);
    }

    TEST_CASE("parse_rational")
    {
        CHECK(parse_rational("2/4") == make_rational(1, 2));
        CHECK(parse_rational("-7") == -7);
        CHECK(to_string(parse_rational("-10/4")) == "-5/2");
        for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", " 1", "1/-2", "+1", "abc", "1/2/3"}) {
            CAPTURE(bad);
            CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
        }
    }

    TEST_CASE("to_string / parse_rational round trip")
    {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<long> num(-100000, 100000);
        std::uniform_int_distribution<long> den(1, 100000);
        for (int i = 0; i < 500; ++i) {
            const Rational r = make_rational(num(rng), den(rng));
            CHECK(parse_rational(to_string(r)) == r);
        }
    }
}
