#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpoly/groebner.hpp"
#include "wpoly/ideal.hpp"
#include "wpoly/monomial.hpp"
#include "wpoly/order.hpp"

namespace wpoly {

struct Polarization {
    MonomialIdeal ideal;          // squarefree, in the extended ring
    RingDescriptor extended_ring;
    std::vector<int> back_map;    // extended variable -> original variable
};

// Replaces every power X^t in the generators by a product of t distinct
// copies of X, all with X's weight; copies are shared across generators. The
// first copy is the original variable.
inline Polarization polarize(const MonomialIdeal& I) {
    const RingDescriptor& ring = I.ring();
    int vars = ring.variable_count();
    std::vector<int> copies(vars, 1);
    for (const auto& g : I.minimal_generators())
        for (int v = 0; v < vars; ++v) copies[v] = std::max(copies[v], g.exponent(v));

    std::vector<WeightGroup> groups;
    std::vector<std::string> names;
    std::vector<int> back_map;
    std::vector<int> first_copy(vars, 0);
    for (int g = 0; g < ring.group_count(); ++g) {
        int count = 0;
        for (int j = 0; j < ring.group(g).count; ++j) {
            int v = ring.group_offset(g) + j;
            first_copy[v] = static_cast<int>(back_map.size());
            for (int c = 0; c < copies[v]; ++c) {
                back_map.push_back(v);
                names.push_back(ring.name(v) + std::string(c, '\''));
                ++count;
            }
        }
        groups.push_back(WeightGroup{ring.group(g).weight, count});
    }
    RingDescriptor extended(std::move(groups), std::move(names));

    std::vector<Monomial> gens;
    for (const auto& g : I.minimal_generators()) {
        std::vector<int> e(extended.variable_count(), 0);
        for (int v = 0; v < vars; ++v)
            for (int c = 0; c < g.exponent(v); ++c) e[first_copy[v] + c] = 1;
        gens.emplace_back(std::move(e));
    }
    return Polarization{MonomialIdeal(extended, std::move(gens)), extended, std::move(back_map)};
}

// Complete polarization: iterate a) polarize, b) cut the fresh variables
// back into the original ring by generic homogeneous forms of the matching
// weights, c) take the generic initial ideal for the lex order, until the
// result is a fixed point. Step c carries the generic change of coordinates;
// plain initial ideals can stall on non-stable fixed points.
inline MonomialIdeal completely_polarize(const MonomialIdeal& I, const TermOrder& lex_order,
                                         std::uint64_t seed, int trials = 2, int max_rounds = 50) {
    const RingDescriptor& ring = I.ring();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-kGenericCoefficientBound, kGenericCoefficientBound);
    MonomialIdeal current = I;
    for (int round = 0; round < max_rounds; ++round) {
        Polarization pol = polarize(current);
        const RingDescriptor& ext = pol.extended_ring;

        std::vector<Polynomial> substitution(ext.variable_count());
        std::vector<bool> seen(ring.variable_count(), false);
        for (int v = 0; v < ext.variable_count(); ++v) {
            int orig = pol.back_map[v];
            if (!seen[orig]) {
                // the original copy stays itself
                substitution[v] =
                    Polynomial(Monomial::unit(ring.variable_count()).times(orig, 1));
                seen[orig] = true;
            } else {
                auto basis = monomials_of_degree(ring, ext.weight(v));
                Polynomial form;
                while (form.is_zero())
                    for (const auto& m : basis) form.add_term(m, Rational(dist(rng)));
                substitution[v] = std::move(form);
            }
        }

        std::vector<Polynomial> gens;
        for (const auto& g : pol.ideal.minimal_generators()) {
            Polynomial image = Polynomial::constant(ring.variable_count(), 1);
            for (int v = 0; v < ext.variable_count(); ++v)
                for (int rep = 0; rep < g.exponent(v); ++rep) image = image * substitution[v];
            if (image.is_zero()) throw GenericityError("completely_polarize: degenerate cut");
            gens.push_back(make_primitive(image));
        }
        MonomialIdeal next = gens.empty() ? MonomialIdeal(ring, {})
                                          : gin(Ideal(ring, std::move(gens)), lex_order, rng(), trials);
        if (next == current) return current;
        current = std::move(next);
    }
    throw std::runtime_error("completely_polarize: no fixed point within the round limit");
}

inline MonomialIdeal completely_polarize(const MonomialIdeal& I, std::uint64_t seed,
                                         int trials = 2, int max_rounds = 50) {
    return completely_polarize(I, TermOrder::lex(I.ring()), seed, trials, max_rounds);
}

}  // namespace wpoly
