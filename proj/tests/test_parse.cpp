#include <catch2/catch.hpp>

#include "support/helpers.hpp"
#include "wpoly/wpoly.hpp"

using namespace wpoly;

TEST_CASE("ring parsing") {
    RingDescriptor r = parse_ring("x:2,y:4,z:5");
    REQUIRE(r.variable_count() == 3);
    REQUIRE(r.name(0) == "x");
    REQUIRE(r.weight(2) == 5);

    // stable sort by weight, names preserved
    RingDescriptor sorted = parse_ring("b:3, a:2, c:3");
    REQUIRE(sorted.names() == std::vector<std::string>{"a", "b", "c"});
    REQUIRE(sorted.group(1).count == 2);

    REQUIRE_THROWS_AS(parse_ring("x:2,x:3"), ParseError);
    REQUIRE_THROWS_AS(parse_ring("x:0"), ParseError);
    REQUIRE_THROWS_AS(parse_ring("x"), ParseError);
    REQUIRE_THROWS_AS(parse_ring(""), ParseError);
}

TEST_CASE("ideal parsing") {
    RingDescriptor r = parse_ring("x:2,y:4,z:5");
    Ideal I = parse_ideal(r, "x*y; y*z; x^5");
    REQUIRE(I.generators.size() == 3);
    REQUIRE(I.generators[2].degree(r) == 10);

    RingDescriptor r23 = parse_ring("x:2,y:3");
    REQUIRE(parse_ideal(r23, "x^3+y^2").generators[0].is_homogeneous(r23));
    REQUIRE_THROWS_AS(parse_ideal(r23, "x+y"), ParseError);
    try {
        parse_ideal(r23, "x + y");
    } catch (const ParseError& e) {
        REQUIRE(std::string(e.what()).find("degrees") != std::string::npos);
    }
    REQUIRE_THROWS_AS(parse_ideal(r23, "x^3 - x^3"), ParseError);  // zero generator
    REQUIRE_THROWS_AS(parse_ideal(r23, "w^2"), ParseError);

    // comma separation and signs
    Ideal J = parse_ideal(r23, "2*x^3 - 3/2*y^2, -y^2");
    REQUIRE(J.generators.size() == 2);
    REQUIRE(J.generators[0] == parse_polynomial(r23, "2*x^3") - parse_polynomial(r23, "3/2*y^2"));

    // empty spec: the zero ideal
    REQUIRE(parse_ideal(r23, "").is_zero());
}

TEST_CASE("polynomial grammar") {
    RingDescriptor r23 = parse_ring("x:2,y:3");
    REQUIRE(parse_polynomial(r23, "(x^3 + y^2)^2") ==
            parse_polynomial(r23, "x^6 + 2*x^3*y^2 + y^4"));
    REQUIRE(parse_polynomial(r23, "1/2*x - -1/2*x") == parse_polynomial(r23, "x"));
    REQUIRE(parse_polynomial(r23, "x^0") == Polynomial::constant(2, 1));
    REQUIRE_THROWS_AS(parse_polynomial(r23, "x^"), ParseError);
    REQUIRE_THROWS_AS(parse_polynomial(r23, "3/0"), ParseError);
    REQUIRE_THROWS_AS(parse_polynomial(r23, "x y"), ParseError);

    ParseError err("", 0);
    try {
        parse_polynomial(r23, "x^2 + @");
    } catch (const ParseError& e) {
        err = e;
    }
    REQUIRE(err.position() == 6);
}

TEST_CASE("printing is canonical and parse-stable") {
    RingDescriptor r = parse_ring("x:2,y:4,z:5");
    TermOrder rev = TermOrder::wdegrevlex(r);
    Polynomial f = parse_polynomial(r, "y*z - 2*x^3*z + 1/3*x*y^2");
    std::string printed = format_polynomial(r, f, rev);
    REQUIRE(parse_polynomial(r, printed) == f);
    REQUIRE(format_polynomial(r, parse_polynomial(r, printed), rev) == printed);

    REQUIRE(format_polynomial(r, Polynomial(), rev) == "0");
    REQUIRE(format_monomial(r, Monomial::unit(3)) == "1");
    REQUIRE(format_monomial(r, wtest::mono(r, "x^2*z")) == "x^2*z");

    // leading terms come first under the active order
    Polynomial g = parse_polynomial(r, "x*y + x^3");
    REQUIRE(format_polynomial(r, g, rev) == "x^3 + x*y");
    REQUIRE(format_polynomial(r, g, TermOrder::wdeglex(r)) == "x^3 + x*y");

    std::mt19937_64 rng(151);
    for (int t = 0; t < 30; ++t) {
        Polynomial h = wtest::random_form(r, 8 + t % 5, 4, rng);
        if (h.is_zero()) continue;
        REQUIRE(parse_polynomial(r, format_polynomial(r, h, rev)) == h);
    }
}
