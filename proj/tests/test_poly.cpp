#include "doctest.h"

#include <numeric>
#include <set>

#include "polycss/poly.hpp"
#include "polycss/rng.hpp"

using namespace polycss;

namespace {

Poly P(const char* s, int q) { return poly_parse(s, field_of_order(q)); }
Poly E(const char* s, int q) { return parse_expression(s, field_of_order(q)); }

Poly random_poly(Field f, int degree, Rng& rng) {
    std::vector<Elem> c(static_cast<std::size_t>(degree) + 1);
    for (Elem& e : c) e = static_cast<Elem>(rng.below(static_cast<std::uint64_t>(f.q())));
    if (c.back() == 0) c.back() = 1;
    return Poly(f, std::move(c));
}

}  // namespace

TEST_CASE("arithmetic") {
    const Field gf3 = make_field(3);
    CHECK(E("x+1", 3) * E("x+2", 3) == E("x^2+2", 3));
    CHECK((E("x+1", 3) * Poly(gf3)).is_zero());
    CHECK(E("x^2+1", 3) + Poly(gf3) == E("x^2+1", 3));
    CHECK(Poly(gf3).degree() == Poly::kZeroDegree);
    CHECK(Poly::constant(gf3, 2).degree() == 0);
    CHECK_THROWS_AS(E("x", 3) + E("x", 5), Error);
}

TEST_CASE("divmod") {
    auto [q1, r1] = divmod(E("x^2-1", 5), E("x-1", 5));
    CHECK(q1 == E("x+1", 5));
    CHECK(r1.is_zero());

    auto [q2, r2] = divmod(E("x", 5), E("x^2", 5));
    CHECK(q2.is_zero());
    CHECK(r2 == E("x", 5));

    // Remainder theorem: the remainder is f(-1) = -1 - 2 + 1 = 1 over GF(3).
    const Poly f = E("x^3+2x+1", 3);
    const Poly g = E("x+1", 3);
    auto [q3, r3] = divmod(f, g);
    CHECK(q3 * g + r3 == f);
    CHECK(r3.degree() < 1);
    CHECK(r3 == Poly::constant(make_field(3), f.evaluate(2)));
    CHECK(r3 == E("1", 3));
    CHECK(q3 == E("x^2+2x", 3));
    CHECK_FALSE(r3.is_zero());

    CHECK_THROWS_AS(divmod(f, Poly(make_field(3))), Error);
}

TEST_CASE("gcd") {
    CHECK(gcd(E("x^5-x-1", 3), E("x^5-x-2", 3)).is_one());
    const Poly f = E("2x^3+x+1", 5);
    CHECK(gcd(f, f) == f.monic());
    CHECK(gcd(f, Poly(make_field(5))) == f.monic());
    CHECK_THROWS_AS(gcd(Poly(make_field(5)), Poly(make_field(5))), Error);
}

TEST_CASE("factor x^4 - 1 over GF(3)") {
    const Factorization fact = factor(E("x^4-1", 3));
    REQUIRE(fact.factors.size() == 3);
    CHECK(fact.factors[0].factor == E("x+1", 3));
    CHECK(fact.factors[1].factor == E("x+2", 3));
    CHECK(fact.factors[2].factor == E("x^2+1", 3));
    CHECK(fact.product() == E("x^4-1", 3));
}

TEST_CASE("factor an irreducible quadratic") {
    const Factorization fact = factor(E("x^2+1", 3));
    REQUIRE(fact.factors.size() == 1);
    CHECK(fact.factors[0].multiplicity == 1);
    CHECK(is_irreducible(E("x^2+1", 3)));
}

TEST_CASE("factor keeps the unit and multiplicities") {
    // 2 (x+1)^3 (x^2+x+2)^2 over GF(3); also the p-th power path (x^3 + 1 = (x+1)^3).
    const Poly f = E("2", 3) * E("x^3+1", 3) * E("x^2+x+2", 3) * E("x^2+x+2", 3);
    const Factorization fact = factor(f);
    CHECK(fact.unit.index() == 2);
    CHECK(fact.product() == f);
    REQUIRE(fact.factors.size() == 2);
    CHECK(fact.factors[0].multiplicity == 3);
    CHECK(fact.factors[1].multiplicity == 2);
    CHECK_THROWS_AS(factor(Poly(make_field(3))), Error);
}

TEST_CASE("factor of the Table 1 trinomial x^11 - x - 3 over GF(13) contains 8A0C31") {
    const Poly t = E("x^11-x-3", 13);
    const Factorization fact = factor(t);
    CHECK(fact.product() == t);
    for (const auto& fp : fact.factors) CHECK(is_irreducible(fp.factor));
    const Poly g1 = P("8A0C31", 13);
    CHECK(divides(g1, t));
    bool found = false;
    for (const Poly& d : enumerate_divisors(fact, 5, 5)) found = found || d == g1;
    CHECK(found);
}

TEST_CASE("factorization is independent of the splitting seed") {
    const Poly t = E("x^60-2x^6-2", 3);
    const Factorization a = factor(t, 1);
    const Factorization b = factor(t, 99);
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) CHECK(a.factors[i].factor == b.factors[i].factor);
}

TEST_CASE("factor reconstructs random polynomials in every field") {
    Rng rng(20261016);
    for (int q : supported_field_orders()) {
        const Field f = field_of_order(q);
        for (int trial = 0; trial < 6; ++trial) {
            const int degree = 1 + static_cast<int>(rng.below(60));
            const Poly p = random_poly(f, degree, rng);
            const Factorization fact = factor(p, rng.next());
            REQUIRE(fact.product() == p);
            for (const auto& fp : fact.factors) {
                CHECK(fp.factor.is_monic());
                CHECK(is_irreducible(fp.factor));
            }
        }
    }
}

TEST_CASE("factor handles repeated factors in characteristic 2 extensions") {
    const Field gf16 = make_field(2, 4);
    const Poly a = Poly(gf16, {3, 7, 1});
    const Poly b = Poly(gf16, {5, 1});
    const Poly f = a * a * b * b * b * b * b;
    const Factorization fact = factor(f);
    CHECK(fact.product() == f);
}

TEST_CASE("divisor enumeration") {
    SUBCASE("two distinct linear factors") {
        const auto ds = enumerate_divisors(factor(E("x^2-1", 5)));
        REQUIRE(ds.size() == 4);
        CHECK(ds[0].is_one());
        CHECK(ds[3] == E("x^2-1", 5));
    }
    SUBCASE("square of an irreducible") {
        const Poly p = E("x^2+2", 5);
        const auto ds = enumerate_divisors(factor(p * p));
        REQUIRE(ds.size() == 3);
        CHECK(ds[1] == p);
        CHECK(ds[2] == p * p);
    }
    SUBCASE("count, order and uniqueness match the factorization for x^60 - 2x^6 - 2") {
        const Poly t = E("x^60-2x^6-2", 3);
        const Factorization fact = factor(t);
        const auto ds = enumerate_divisors(fact);
        CHECK(ds.size() == fact.divisor_count());
        std::set<std::vector<Elem>> seen;
        int last_degree = 0;
        for (const Poly& d : ds) {
            CHECK(d.degree() >= last_degree);
            last_degree = d.degree();
            CHECK(divides(d, t));
            seen.insert(d.coeffs());
        }
        CHECK(seen.size() == ds.size());
    }
    SUBCASE("degree window") {
        const Factorization fact = factor(E("x^12-1", 13));
        for (const Poly& d : enumerate_divisors(fact, 3, 4)) {
            CHECK(d.degree() >= 3);
            CHECK(d.degree() <= 4);
        }
        CHECK(enumerate_divisors(fact, 13, 20).empty());
    }
    SUBCASE("cofactor") {
        const Factorization fact = factor(E("x^12-1", 13));
        DivisorStream stream(fact, 5, 5);
        const auto d = stream.next();
        REQUIRE(d);
        const Factorization rest = cofactor(fact, d->exponents);
        CHECK(rest.product().monic() * d->poly == E("x^12-1", 13));
    }
}

TEST_CASE("trinomial and multinomial constructors") {
    const Field gf13 = make_field(13);
    CHECK(make_trinomial(11, 1, FieldElement(gf13, 1), FieldElement(gf13, 3)) == E("x^11-x-3", 13));
    const Field gf17 = make_field(17);
    const Poly t = make_trinomial(7, 2, FieldElement(gf17, 1), FieldElement(gf17, 2));
    CHECK(t == E("x^7-x^2-2", 17));
    for (int r = 0; r < 17; ++r) {
        const Elem x = static_cast<Elem>(r);
        const FieldSpec& F = gf17.spec();
        if (t.evaluate(x) == 0) CHECK(F.pow(x, 7) == F.add(F.pow(x, 2), 2));
    }
    CHECK_THROWS_AS(make_trinomial(5, 5, FieldElement(gf13, 1), FieldElement(gf13, 1)), Error);
    CHECK_THROWS_AS(make_trinomial(5, 2, FieldElement(gf13, 0), FieldElement(gf13, 1)), Error);
    CHECK(make_multinomial(4, E("2x+1", 5)) == E("x^4-2x-1", 5));
    CHECK_THROWS_AS(make_multinomial(2, E("x^2", 5)), Error);
}

TEST_CASE("table notation") {
    CHECK(P("79F1", 17) == E("x^3+15x^2+9x+7", 17));
    CHECK(P("1", 5).is_one());
    CHECK(P("[8A0C31]", 13) == P("8A0C31", 13));
    for (const char* s : {"8A0C31", "352721", "1", "0"}) CHECK(poly_format(P(s, 13)) == s);
    CHECK_THROWS_AS(P("8A0D31", 13), Error);

    const Field gf23 = make_field(23);
    const Poly wide = poly_parse("22,0,19,1", gf23);
    CHECK(wide.coeff(0) == 22);
    CHECK(wide.degree() == 3);
    CHECK(poly_format(wide) == "22,0,19,1");
    CHECK_THROWS_AS(poly_parse("23,1", gf23), Error);
}

TEST_CASE("ten-as-digit-pair readings") {
    const auto readings = poly_parse_variants("99101", make_field(17));
    REQUIRE(readings.size() == 2);
    CHECK(readings[0].tokens == "99101");
    CHECK(readings[1].tokens == "99A1");
    CHECK(readings[1].poly.degree() == 3);
    CHECK(poly_parse_variants("1010", make_field(5)).size() == 1);
    CHECK(poly_parse_variants("1010", make_field(11)).size() == 4);
}

TEST_CASE("expression notation") {
    CHECK(E("x^11 - x - 3", 13).coeff(0) == 10);
    CHECK(E("x**7-x**2-2", 17) == E("x^7-x^2-2", 17));
    CHECK(E("3*x^2+x", 5) == E("x+3x^2", 5));
    CHECK(format_expression(E("x^4-1", 3)) == "x^4 + 2");
    CHECK_THROWS_AS(E("x^2 +", 5), Error);
    CHECK_THROWS_AS(E("", 5), Error);
    CHECK(parse_poly_any("x^2+1", make_field(5)) == parse_poly_any("101", make_field(5)));
}

TEST_CASE("trinomial gcd structure") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int q = std::array{3, 5, 7, 11, 13, 4, 8, 9}[rng.below(8)];
        const Field f = field_of_order(q);
        const int n = 2 + static_cast<int>(rng.below(40));
        const int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
        auto nz = [&] { return FieldElement(f, static_cast<Elem>(1 + rng.below(static_cast<std::uint64_t>(q - 1)))); };
        const FieldElement a = nz(), b = nz(), c = nz(), d = nz();
        if (a == c && b == d) continue;
        const Poly g = gcd(make_trinomial(n, i, a, b), make_trinomial(n, i, c, d));
        if (!g.is_one()) {
            CHECK(g.degree() == std::gcd(n, i));
            int nonzero = 0;
            for (Elem e : g.coeffs()) nonzero += e != 0;
            CHECK(nonzero == 2);
        }
    }
}
