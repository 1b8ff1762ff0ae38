#include "symq/reduce.hpp"
#include "symq/ring.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace symq;

TEST_CASE("degree_monomials enumerates ascending theta-exponent") {
    const Ambient amb(2, 2);
    const auto deg1 = degree_monomials(amb, 1);
    REQUIRE(deg1.size() == 2);
    CHECK(deg1[0] == Monomial{0, 1});
    CHECK(deg1[1] == Monomial{1, 0});
    // theta-exponent capped at g.
    const auto deg3 = degree_monomials(Ambient(1, 4), 3);
    REQUIRE(deg3.size() == 2);
    CHECK(deg3[0] == Monomial{0, 3});
    CHECK(deg3[1] == Monomial{1, 2});
    CHECK(degree_monomials(amb, -1).empty());
    CHECK(degree_monomials(amb, 3).empty());
}

TEST_CASE("canonical basis at g=2, d=2") {
    const Ambient amb(2, 2);
    CHECK(canonical_basis(amb, 0).size() == 1);
    const auto b1 = canonical_basis(amb, 1);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == Monomial{0, 1});
    CHECK(b1[1] == Monomial{1, 0});
    // Degree 2 pairs against degree 0 only: rank 1, earliest monomial kept.
    const auto b2 = canonical_basis(amb, 2);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == Monomial{0, 2});
}

TEST_CASE("dim_invariant_subring is symmetric and matches the basis") {
    for (const Ambient amb : {Ambient(2, 2), Ambient(3, 4), Ambient(4, 3),
                              Ambient(2, 5), Ambient(5, 4)}) {
        for (long k = 0; k <= amb.d; ++k) {
            CHECK(dim_invariant_subring(amb, k) ==
                  dim_invariant_subring(amb, amb.d - k));
            CHECK(dim_invariant_subring(amb, k) ==
                  static_cast<long>(canonical_basis(amb, k).size()));
        }
    }
    CHECK(dim_invariant_subring(Ambient(2, 2), 0) == 1);
    CHECK(dim_invariant_subring(Ambient(2, 2), 1) == 2);
    CHECK(dim_invariant_subring(Ambient(2, 2), 2) == 1);
    CHECK_THROWS_AS(dim_invariant_subring(Ambient(2, 2), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(dim_invariant_subring(Ambient(2, 2), -1),
                    std::invalid_argument);
}

TEST_CASE("reduce rewrites top-degree classes at g=2, d=2") {
    const Ambient amb(2, 2);
    CHECK(reduce(CohClass::monomial(amb, 1, 1)) ==
          CohClass::monomial(amb, 0, 2, Rational(2)));
    CHECK(reduce(CohClass::monomial(amb, 2, 0)) ==
          CohClass::monomial(amb, 0, 2, Rational(2)));
    // theta - eta is already canonical in degree 1.
    const CohClass x = CohClass::theta(amb) - CohClass::eta(amb);
    CHECK(reduce(x) == x);
}

TEST_CASE("is_zero detects pairing-kernel classes") {
    const Ambient amb(2, 2);
    const CohClass k = CohClass::monomial(amb, 1, 1) -
                       CohClass::monomial(amb, 0, 2, Rational(2));
    CHECK(is_zero(k));
    CHECK(reduce(k).empty());
    CHECK_FALSE(is_zero(CohClass::eta(amb)));
    CHECK(is_zero(CohClass::zero(amb)));
}

TEST_CASE("reduce is idempotent and kills exactly the kernel") {
    const Ambient amb(3, 4);
    const CohClass x = CohClass::monomial(amb, 2, 1, Rational(3)) -
                       CohClass::monomial(amb, 1, 2, Rational(Int(1), Int(2))) +
                       CohClass::eta_power(amb, 4) + CohClass::theta(amb);
    const CohClass r = reduce(x);
    CHECK(reduce(r) == r);
    CHECK(is_zero(x - r));
    // The difference pairs to zero against every complementary monomial.
    const CohClass diff = x - r;
    for (long k = 0; k <= amb.d; ++k) {
        CohClass comp(amb);
        for (const auto& [m, c] : diff.terms())
            if (m.degree() == k)
                comp.add_term(m.a, m.b, c);
        if (comp.empty())
            continue;
        for (const auto& nu : degree_monomials(amb, amb.d - k))
            CHECK(pair(comp, CohClass::monomial(amb, nu.a, nu.b)) ==
                  Rational(0));
    }
}

TEST_CASE("reduce preserves pairings against all complementary monomials") {
    for (const Ambient amb : {Ambient(2, 3), Ambient(4, 4), Ambient(8, 6)}) {
        for (long k = 0; k <= amb.d; ++k) {
            for (const auto& m : degree_monomials(amb, k)) {
                const CohClass mono = CohClass::monomial(amb, m.a, m.b);
                const CohClass red = reduce(mono);
                for (const auto& nu : degree_monomials(amb, amb.d - k)) {
                    const CohClass dual = CohClass::monomial(amb, nu.a, nu.b);
                    CHECK(pair(mono, dual) == pair(red, dual));
                }
            }
        }
    }
}

TEST_CASE("reduced representatives live on the canonical basis") {
    const Ambient amb(8, 6);
    const CohClass q2 = CohClass::monomial(amb, 4, 0, Rational(Int(3), Int(16))) -
                        CohClass::monomial(amb, 3, 1, Rational(Int(1), Int(2))) -
                        CohClass::monomial(amb, 2, 2, Rational(Int(1), Int(4)));
    const CohClass red = reduce(q2);
    CHECK(red.coefficient(2, 2) == Rational(Int(49), Int(2)));
    CHECK(red.coefficient(1, 3) == Rational(-252));
    CHECK(red.coefficient(0, 4) == Rational(777));
    CHECK(red.coefficient(3, 1) == Rational(0));
    CHECK(red.coefficient(4, 0) == Rational(0));
}
