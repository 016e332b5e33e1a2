#include "core/quadratic.hpp"

#include <doctest.h>

#include <random>

using ascert::Quadratic;
using ascert::Rational;

namespace {

Quadratic random_quad(std::mt19937& rng, std::int64_t disc) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    return Quadratic(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), disc);
}

}  // namespace

TEST_CASE("the defining relation w^2 = disc") {
    Quadratic w = Quadratic::root(-3);
    CHECK(w * w == Quadratic::rational(Rational(-3), -3));
    CHECK(Quadratic::root(5) * Quadratic::root(5) == Quadratic::rational(Rational(5), 5));
}

TEST_CASE("conjugation flips the root coordinate") {
    // (-1+w)/2 with w^2 = -7, as in the doubling eigenvalues.
    Quadratic x(Rational(-1, 2), Rational(1, 2), -7);
    CHECK(x.conj() == Quadratic(Rational(-1, 2), Rational(-1, 2), -7));
    CHECK(x.conj().conj() == x);
}

TEST_CASE("inverse of a rational element") {
    Quadratic two = Quadratic::rational(Rational(2), -3);
    CHECK(two.inverse() == Quadratic::rational(Rational(1, 2), -3));
    CHECK_THROWS_AS(Quadratic::rational(Rational(0), -3).inverse(), std::domain_error);
}

TEST_CASE("disc mismatch is an error for irrational operands") {
    Quadratic a = Quadratic::root(-3);
    Quadratic b = Quadratic::root(5);
    CHECK_THROWS_AS(a + b, std::domain_error);
    CHECK_THROWS_AS(a * b, std::domain_error);
    // Purely rational values live in every quadratic field.
    Quadratic r = Quadratic::rational(Rational(7, 2), 5);
    CHECK(a + r == Quadratic(Rational(7, 2), Rational(1), -3));
    CHECK(r == Quadratic::rational(Rational(7, 2), -3));
}

TEST_CASE("field and conjugation identities on random values") {
    std::mt19937 rng(987654321);
    for (std::int64_t disc : {-7, -3, 5, 13}) {
        for (int trial = 0; trial < 200; ++trial) {
            Quadratic x = random_quad(rng, disc);
            Quadratic y = random_quad(rng, disc);

            CHECK(x.conj().conj() == x);
            CHECK((x * y).conj() == x.conj() * y.conj());
            CHECK((x + y).conj() == x.conj() + y.conj());

            Quadratic nx = x * x.conj();
            CHECK(nx.is_rational());
            CHECK(nx.a() == x.norm());

            if (!x.is_zero()) {
                CHECK(x * x.inverse() == Quadratic::rational(Rational(1), disc));
                CHECK(x.inverse() * x == Quadratic::rational(Rational(1), disc));
            }
        }
    }
}
