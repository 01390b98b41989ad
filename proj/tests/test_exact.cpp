#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "partsum/combinatorics.hpp"
#include "partsum/partitions.hpp"
#include "partsum/rational.hpp"

using namespace partsum;

TEST_CASE("binomial basics and zero extension") {
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 1) == 4);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(7, -1) == 0);
}

TEST_CASE("binomial satisfies the Pascal recurrence exhaustively") {
    for (unsigned long n = 1; n <= 20; ++n)
        for (long long k = 0; k <= static_cast<long long>(n); ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("binomial stays exact at CLI scale") {
    // C(80, 40), 24 digits
    CHECK(binomial(80, 40) == BigInt("107507208733336176461620"));
}

TEST_CASE("multinomial basics") {
    std::vector<unsigned> p1 = {2, 1, 1};
    CHECK(multinomial(p1) == 12);
    std::vector<unsigned> p2 = {7};
    CHECK(multinomial(p2) == 1);
    std::vector<unsigned> p3 = {1, 1};
    CHECK(multinomial(p3) == 2);
    CHECK(multinomial(std::span<const unsigned>{}) == 1);
}

TEST_CASE("multinomial equals the telescoping product of binomials") {
    for (unsigned n = 1; n <= 10; ++n) {
        CompositionStream comps(n);
        while (comps.next()) {
            auto parts = comps.parts();
            BigInt product = 1;
            unsigned long prefix = 0;
            for (unsigned part : parts) {
                prefix += part;
                product *= binomial(prefix, part);
            }
            CHECK(multinomial(parts) == product);
        }
    }
}

TEST_CASE("double factorial conventions") {
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(6) == 48);
    CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
}

TEST_CASE("double factorial identities") {
    for (unsigned long n = 0; n <= 30; ++n) {
        // (2n)!! = 2^n n!
        CHECK(double_factorial(2 * static_cast<long>(n)) ==
              (BigInt(1) << n) * factorial(n));
        // (2n-1)!!/n! = C(2n,n)/2^n
        CHECK(Rational(double_factorial(2 * static_cast<long>(n) - 1), factorial(n)) ==
              Rational(binomial(2 * n, n), BigInt(1) << n));
    }
}

TEST_CASE("pow2 over all integer exponents") {
    CHECK(pow2(4) == Rational(16));
    CHECK(pow2(0) == Rational(1));
    CHECK(pow2(-1) == Rational(1, 2));
    CHECK(pow2(-3) == Rational(1, 8));
    CHECK(pow2(70) == Rational(BigInt(1) << 70));
}

TEST_CASE("rationals are always canonical") {
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK(Rational(1, -2).denominator() == 2);
    CHECK(Rational(1, -2).numerator() == -1);
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK(Rational(0, 5).is_zero());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational rendering") {
    CHECK(Rational(16).str() == "16");
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(-1, 6).str() == "-1/6");
    CHECK(Rational(2, 4).str() == "1/2");
}

TEST_CASE("rational addition agrees with a cross-multiplication oracle") {
    std::mt19937 rng(20240511);
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 50);
    for (int i = 0; i < 1000; ++i) {
        long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        long long rn = a * d + c * b;
        long long rd = b * d;
        long long g = std::gcd(rn < 0 ? -rn : rn, rd);
        if (g == 0) g = 1;
        Rational expected(rn / g, rd / g);
        Rational got = Rational(a, b) + Rational(c, d);
        CHECK(got == expected);
        // the result itself must be canonical
        BigInt reduced;
        mpz_gcd(reduced.get_mpz_t(), got.numerator().get_mpz_t(),
                got.denominator().get_mpz_t());
        CHECK(reduced == 1);
        CHECK(got.denominator() > 0);
    }
}

TEST_CASE("rational arithmetic results stay canonical") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> num(-30, 30);
    std::uniform_int_distribution<long long> den(1, 30);
    for (int i = 0; i < 400; ++i) {
        Rational x(num(rng), den(rng));
        Rational y(num(rng), den(rng));
        for (Rational r : {x - y, x * y}) {
            BigInt g;
            mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(),
                    r.denominator().get_mpz_t());
            CHECK(g == 1);
            CHECK(r.denominator() > 0);
        }
        if (!y.is_zero()) {
            Rational r = x / y;
            BigInt g;
            mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(),
                    r.denominator().get_mpz_t());
            CHECK(g == 1);
            CHECK(r.denominator() > 0);
        }
    }
}
