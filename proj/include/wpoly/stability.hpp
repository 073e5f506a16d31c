#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "wpoly/automorphism.hpp"
#include "wpoly/groebner.hpp"
#include "wpoly/ideal.hpp"
#include "wpoly/monomial.hpp"

namespace wpoly {

// Witness that an exchange required by strong stability leaves the ideal:
// replacing one X_ij in `generator` either by an earlier variable of the
// same group or by a monomial of weight q_i in lighter groups produces
// `missing`, which is not in the ideal.
struct StabilityViolation {
    Monomial generator;
    int var = 0;                     // the divided variable X_ij
    bool cross_group = false;        // false: within-group raise
    int within_target = -1;          // within-group: the variable moved to
    Monomial replacement;            // cross-group: the substituted monomial
    Monomial missing;
};

struct StabilityResult {
    bool stable = true;
    std::optional<StabilityViolation> violation;

    explicit operator bool() const { return stable; }
};

// Checks the exchange conditions on the minimal generators; closure under
// the exchanges makes that sufficient for the whole ideal.
inline StabilityResult is_strongly_stable(const MonomialIdeal& I) {
    const RingDescriptor& ring = I.ring();
    for (const auto& u : I.minimal_generators()) {
        for (int v = 0; v < ring.variable_count(); ++v) {
            if (u.exponent(v) == 0) continue;
            int g = ring.group_of(v);
            int off = ring.group_offset(g);
            Monomial quotient = u.times(v, -1);
            for (int h = off; h < v; ++h) {
                Monomial raised = quotient.times(h, 1);
                if (!I.contains(raised)) {
                    StabilityViolation w;
                    w.generator = u;
                    w.var = v;
                    w.cross_group = false;
                    w.within_target = h;
                    w.missing = raised;
                    return {false, w};
                }
            }
            if (g > 0) {
                for (const auto& rep : monomials_of_degree_in_prefix(ring, ring.group(g).weight, g)) {
                    Monomial swapped = quotient * rep;
                    if (!I.contains(swapped)) {
                        StabilityViolation w;
                        w.generator = u;
                        w.var = v;
                        w.cross_group = true;
                        w.replacement = rep;
                        w.missing = swapped;
                        return {false, w};
                    }
                }
            }
        }
    }
    return {true, std::nullopt};
}

// Randomized test that phi(I) = I for phi ranging over T. Deterministically
// covers every elementary generator position (with random coefficients) and
// adds `trials` random compositions; a single witness refutes, acceptance is
// probabilistic.
inline bool is_T_fixed(const Ideal& I, int trials, std::uint64_t seed, const TermOrder& order) {
    const RingDescriptor& ring = I.ring;
    GroebnerBasis reference = buchberger(I, order);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(2, kGenericCoefficientBound);
    auto moved_by = [&](const GradedAutomorphism& phi) {
        GroebnerBasis image = buchberger(apply_automorphism(phi, I), order);
        return !(image.elements == reference.elements);
    };

    std::vector<ElementaryAutomorphism> generators;
    for (int v = 0; v < ring.variable_count(); ++v) {
        int g = ring.group_of(v);
        int off = ring.group_offset(g);
        ElementaryAutomorphism delta;
        delta.kind = ElementaryAutomorphism::Kind::Diagonal;
        delta.var = v;
        delta.coeff = Rational(dist(rng));
        generators.push_back(delta);
        for (int r = off; r < v; ++r) {
            ElementaryAutomorphism tau;
            tau.kind = ElementaryAutomorphism::Kind::Triangular;
            tau.var = v;
            tau.source = r;
            tau.coeff = Rational(dist(rng));
            generators.push_back(tau);
        }
        if (g > 0)
            for (const auto& m : monomials_of_degree_in_prefix(ring, ring.group(g).weight, g)) {
                ElementaryAutomorphism eta;
                eta.kind = ElementaryAutomorphism::Kind::Nonlinear;
                eta.var = v;
                eta.term = m;
                eta.coeff = Rational(dist(rng));
                generators.push_back(eta);
            }
    }
    for (const auto& e : generators)
        if (moved_by(e.to_automorphism(ring))) return false;
    for (int t = 0; t < trials; ++t) {
        GradedAutomorphism phi =
            random_automorphism(ring, AutomorphismMode::UpperTriangular, rng);
        if (moved_by(phi)) return false;
    }
    return true;
}

// Weights under which every exchange is impossible: with q_1 < ... < q_n and
// 2q_1 > q_n there is no monomial of weight q_i in lighter groups, so any
// monomial ideal is strongly stable. Takes q_j = n + j.
inline RingDescriptor weights_making_stable(int variables) {
    if (variables <= 0) throw std::invalid_argument("weights_making_stable: no variables");
    std::vector<WeightGroup> groups;
    groups.reserve(variables);
    for (int j = 1; j <= variables; ++j) groups.push_back(WeightGroup{variables + j, 1});
    return RingDescriptor(std::move(groups));
}

inline RingDescriptor weights_making_stable(const std::vector<Monomial>& monomials) {
    if (monomials.empty()) throw std::invalid_argument("weights_making_stable: empty set");
    return weights_making_stable(monomials.front().size());
}

// depth R/I for strongly stable I in a ring where each weight divides the
// next: the variables strictly after the smallest one dividing a minimal
// generator form a maximal regular sequence on R/I.
inline int stable_depth(const MonomialIdeal& I) {
    const RingDescriptor& ring = I.ring();
    if (!ring.satisfies_condition_multipli())
        throw std::invalid_argument("stable_depth: ring does not satisfy the divisibility chain");
    if (I.is_unit()) throw std::invalid_argument("stable_depth: unit ideal");
    if (I.is_zero()) return ring.variable_count();
    if (!is_strongly_stable(I).stable)
        throw std::invalid_argument("stable_depth: ideal is not strongly stable");
    int last = -1;
    for (const auto& u : I.minimal_generators())
        for (int v = 0; v < ring.variable_count(); ++v)
            if (u.exponent(v) > 0) last = std::max(last, v);
    return ring.variable_count() - 1 - last;
}

}  // namespace wpoly
