#include "symq/ambient.hpp"
#include "symq/ring.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace symq;

TEST_CASE("ambient validation") {
    CHECK_NOTHROW(Ambient(0, 1));
    CHECK_THROWS_AS(Ambient(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Ambient(2, 0), std::invalid_argument);
    CHECK(Ambient(2, 2) == Ambient(2, 2));
    CHECK(Ambient(2, 2) != Ambient(2, 3));
    CHECK_THROWS_AS(require_same(Ambient(2, 2), Ambient(3, 2)),
                    std::invalid_argument);
}

TEST_CASE("q_degree and brill_noether_rho") {
    CHECK(q_degree(Ambient(2, 2)) == 1);
    CHECK(q_degree(Ambient(5, 4)) == 0);
    CHECK(q_degree(Ambient(8, 6)) == -1);
    // rho(r) = g - (r+1)(g-d+r)
    CHECK(brill_noether_rho(Ambient(4, 3), 1) == Rational(0));
    CHECK(brill_noether_rho(Ambient(2, 2), 1) == Rational(0));
    CHECK(brill_noether_rho(Ambient(2, 2), 2) == Rational(-4));
    CHECK(brill_noether_rho(Ambient(8, 6), 2) == Rational(-4));
}

TEST_CASE("eval_top values and guards") {
    const Ambient amb(2, 2);
    CHECK(eval_top(Monomial{0, 2}, amb) == Rational(1));
    CHECK(eval_top(Monomial{1, 1}, amb) == Rational(2));
    CHECK(eval_top(Monomial{2, 0}, amb) == Rational(2));
    CHECK(eval_top(Monomial{2, 1}, Ambient(1, 3)) == Rational(0)); // a > g
    CHECK_THROWS_AS(eval_top(Monomial{0, 1}, amb), std::invalid_argument);
    CHECK_THROWS_AS(eval_top(Monomial{-1, 3}, amb), std::invalid_argument);
}

TEST_CASE("monomial ordering is by degree then theta-exponent") {
    CHECK(Monomial{0, 2} < Monomial{0, 3});
    CHECK(Monomial{0, 2} < Monomial{1, 1});
    CHECK(Monomial{1, 1} < Monomial{2, 0});
    CHECK_FALSE(Monomial{2, 0} < Monomial{1, 1});
}

TEST_CASE("add_term normalizes vanishing monomials") {
    const Ambient amb(2, 3);
    CohClass x(amb);
    x.add_term(3, 0, Rational(5)); // theta^3, a > g: dropped
    CHECK(x.empty());
    x.add_term(1, 3, Rational(5)); // degree 4 > d: dropped
    CHECK(x.empty());
    x.add_term(5, 9, Rational(0)); // zero coefficient: accepted silently
    CHECK(x.empty());
    x.add_term(-1, 0, Rational(0)); // zero coefficient wins over bad exponent
    CHECK(x.empty());
    CHECK_THROWS_AS(x.add_term(-1, 0, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(x.add_term(0, -2, Rational(1)), std::invalid_argument);
}

TEST_CASE("add_term accumulates and cancels") {
    const Ambient amb(2, 3);
    CohClass x(amb);
    x.add_term(1, 1, Rational(2));
    x.add_term(1, 1, Rational(3));
    CHECK(x.coefficient(1, 1) == Rational(5));
    x.add_term(1, 1, Rational(-5));
    CHECK(x.empty());
}

TEST_CASE("class arithmetic") {
    const Ambient amb(2, 3);
    const CohClass x = CohClass::monomial(amb, 1, 0, Rational(2)) +
                       CohClass::eta(amb);
    const CohClass y = CohClass::theta(amb) - CohClass::eta(amb);
    CHECK((x + y).coefficient(1, 0) == Rational(3));
    CHECK((x + y).coefficient(0, 1) == Rational(0));
    CHECK((x * Rational(Int(1), Int(2))).coefficient(1, 0) == Rational(1));
    CHECK((-y).coefficient(0, 1) == Rational(1));
    CHECK(x - x == CohClass::zero(amb));
    CHECK_THROWS_AS(x + CohClass::eta(Ambient(3, 3)), std::invalid_argument);
}

TEST_CASE("homogeneous_degree") {
    const Ambient amb(3, 4);
    CHECK_FALSE(CohClass::zero(amb).homogeneous_degree().has_value());
    CHECK(CohClass::eta_power(amb, 2).homogeneous_degree() == 2);
    const CohClass mixed = CohClass::eta(amb) + CohClass::eta_power(amb, 2);
    CHECK_FALSE(mixed.homogeneous_degree().has_value());
    const CohClass homog =
        CohClass::monomial(amb, 2, 1) - CohClass::monomial(amb, 1, 2);
    CHECK(homog.homogeneous_degree() == 3);
}

TEST_CASE("cup multiplies monomials and drops vanishing ones") {
    const Ambient amb(1, 2);
    CHECK(cup(CohClass::eta(amb), CohClass::eta(amb)) ==
          CohClass::eta_power(amb, 2));
    // theta^2 vanishes for g = 1.
    CHECK(cup(CohClass::theta(amb), CohClass::theta(amb)).empty());
    const Ambient amb2(3, 2);
    // degree 3 > d = 2 vanishes.
    CHECK(cup(CohClass::eta_power(amb2, 2), CohClass::eta(amb2)).empty());
    // Bilinearity.
    const CohClass a = CohClass::eta(amb2) + CohClass::theta(amb2);
    const CohClass b = CohClass::eta(amb2) - CohClass::theta(amb2);
    CHECK(cup(a, b) == cup(a, CohClass::eta(amb2)) -
                           cup(a, CohClass::theta(amb2)));
}

TEST_CASE("pair against complementary classes") {
    const Ambient amb(2, 2);
    CHECK(pair(CohClass::eta(amb), CohClass::eta(amb)) == Rational(1));
    CHECK(pair(CohClass::theta(amb), CohClass::eta(amb)) == Rational(2));
    CHECK(pair(CohClass::theta(amb), CohClass::theta(amb)) == Rational(2));
    CHECK(pair(CohClass::theta(amb) - CohClass::eta(amb),
               CohClass::eta(amb)) == Rational(1));
    CHECK(pair(CohClass::unit(amb), CohClass::eta_power(amb, 2)) ==
          Rational(1));
    CHECK(pair(CohClass::zero(amb), CohClass::eta(amb)) == Rational(0));
    CHECK_THROWS_AS(pair(CohClass::eta(amb), CohClass::unit(amb)),
                    std::invalid_argument);
    const Ambient amb3(2, 3);
    CHECK_THROWS_AS(pair(CohClass::eta(amb3), CohClass::eta(amb3)),
                    std::invalid_argument);
}

TEST_CASE("pair agrees with eval_top on monomials") {
    const Ambient amb(3, 4);
    for (long k = 0; k <= amb.d; ++k)
        for (long a = 0; a <= k && a <= amb.g; ++a)
            for (long c = 0; c <= amb.d - k && c <= amb.g; ++c) {
                const Rational got =
                    pair(CohClass::monomial(amb, a, k - a),
                         CohClass::monomial(amb, c, amb.d - k - c));
                const Rational want =
                    (a + c <= amb.g)
                        ? Rational(factorial(amb.g) / factorial(amb.g - a - c))
                        : Rational(0);
                CHECK(got == want);
            }
}
