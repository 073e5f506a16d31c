#include <catch2/catch.hpp>

#include "support/helpers.hpp"
#include "wpoly/wpoly.hpp"

using namespace wpoly;
using wtest::mono_ideal;

TEST_CASE("polarize basics") {
    RingDescriptor r23 = wtest::ring23();
    Polarization p = polarize(mono_ideal(r23, {"x^2"}));
    REQUIRE(p.extended_ring.variable_count() == 3);
    REQUIRE(p.extended_ring.group(0).count == 2);  // x and x'
    REQUIRE(p.extended_ring.group(0).weight == 2);
    REQUIRE(p.ideal.minimal_generators().size() == 1);
    REQUIRE(p.ideal.minimal_generators()[0] == wtest::mono(p.extended_ring, "x*x'"));
    REQUIRE(p.back_map == std::vector<int>{0, 0, 1});

    // squarefree ideals are fixed points
    MonomialIdeal sq = mono_ideal(r23, {"x*y"});
    Polarization psq = polarize(sq);
    REQUIRE(psq.extended_ring == r23);
    REQUIRE(psq.ideal == sq);
}

TEST_CASE("polarized quotient keeps the hilbert function after a generic cut") {
    RingDescriptor r23 = wtest::ring23();
    MonomialIdeal I = mono_ideal(r23, {"x^2", "x*y"});
    Polarization p = polarize(I);
    const RingDescriptor& ext = p.extended_ring;
    // cut the one fresh variable by a generic form of weight 2
    std::mt19937_64 rng(139);
    std::uniform_int_distribution<long> c(1, 1000);
    Polynomial cut;
    for (const auto& m : monomials_of_degree(ext, 2)) cut.add_term(m, Rational(c(rng)));
    std::vector<Polynomial> gens;
    for (const auto& m : p.ideal.minimal_generators()) gens.emplace_back(m);
    gens.push_back(cut);
    Ideal cut_ideal(ext, gens);
    for (long long d = 0; d <= 24; ++d) {
        long long ext_dim = hilbert_function(cut_ideal, d, true);
        REQUIRE(ext_dim == hilbert_function(I, d, true));
    }
}

TEST_CASE("complete polarization reproduces the worked example") {
    RingDescriptor r = wtest::ring124();
    MonomialIdeal I =
        mono_ideal(r, {"x^8", "x^6*y", "x^4*y^2", "x^2*y^3", "y^4", "x^2*y*z", "x^6*z"});
    MonomialIdeal expected =
        mono_ideal(r, {"x^8", "x^6*y", "x^4*y^2", "x^4*z", "x^2*y^3", "x^2*y^2*z", "y^4"});
    MonomialIdeal ipol = completely_polarize(I, TermOrder::lex(r), 1);
    REQUIRE(ipol == expected);

    // the associated lexicographic ideal differs from the polarization
    auto lx = lexify(I, TermOrder::lex(r));
    REQUIRE(lx.status == LexifyOutcome::Status::Lexifiable);
    REQUIRE(lx.lex_ideal == mono_ideal(r, {"x^8", "x^6*y", "x^4*y^2", "x^4*z", "x^2*y^3",
                                           "x^2*y*z", "x^2*z^2", "y^6"}));
    REQUIRE_FALSE(ipol == lx.lex_ideal);
}

TEST_CASE("squarefree strongly stable ideals are fixed points") {
    RingDescriptor r11 = parse_ring("x:1,y:1");
    MonomialIdeal I = mono_ideal(r11, {"x"});
    REQUIRE(completely_polarize(I, TermOrder::lex(r11), 3) == I);

    RingDescriptor r123 = parse_ring("x:1,y:2,z:3");
    MonomialIdeal J = mono_ideal(r123, {"x"});
    REQUIRE(completely_polarize(J, TermOrder::lex(r123), 3) == J);
}

TEST_CASE("complete polarization invariants on random ideals") {
    std::mt19937_64 rng(149);
    std::vector<RingDescriptor> rings{parse_ring("x:1,y:1"), wtest::ring23(), wtest::ring124(),
                                      wtest::ring223()};
    for (int t = 0; t < 16; ++t) {
        const RingDescriptor& ring = rings[t % rings.size()];
        MonomialIdeal I = wtest::random_monomial_ideal(ring, 3, 3, rng);
        if (I.is_unit()) continue;
        MonomialIdeal ipol = completely_polarize(I, TermOrder::lex(ring), rng());
        // Hilbert function preserved
        long long top = 3 * std::max<long long>(I.max_generator_degree(), 1);
        REQUIRE(hilbert_function_range(I, top, true) ==
                hilbert_function_range(ipol, top, true));
        // strongly stable outcome
        REQUIRE(is_strongly_stable(ipol).stable);
        // idempotence
        REQUIRE(completely_polarize(ipol, TermOrder::lex(ring), rng()) == ipol);
    }
}
