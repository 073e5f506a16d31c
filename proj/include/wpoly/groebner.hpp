#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wpoly/automorphism.hpp"
#include "wpoly/ideal.hpp"
#include "wpoly/module_engine.hpp"
#include "wpoly/monomial.hpp"
#include "wpoly/order.hpp"
#include "wpoly/polynomial.hpp"

namespace wpoly {

// Reduced Groebner basis: minimal, tails reduced, monic, sorted by
// descending leading term. Canonical for a fixed ideal and order.
struct GroebnerBasis {
    TermOrder order;
    std::vector<Polynomial> elements;
};

struct DivisionResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients;  // f = sum quotients[i]*basis[i] + remainder
};

inline DivisionResult divide(const Polynomial& f, std::span<const Polynomial> basis,
                             const TermOrder& order) {
    ModuleOrder ord(order, 0);
    std::vector<detail_gb::OrderedVec> reducer_terms;
    reducer_terms.reserve(basis.size());
    for (const auto& g : basis) {
        if (g.is_zero()) throw std::invalid_argument("divide: zero divisor polynomial");
        reducer_terms.push_back(detail_gb::to_ordered(VecPoly::from_polynomial(0, g), ord));
    }
    std::vector<detail_gb::Reducer> reducers;
    reducers.reserve(basis.size());
    for (const auto& t : reducer_terms) reducers.push_back({&t, t.front().first, t.front().second});
    std::vector<Polynomial> quotients(basis.size());
    auto rem = detail_gb::reduce_full(detail_gb::to_ordered(VecPoly::from_polynomial(0, f), ord),
                                      reducers, ord, &quotients);
    return {detail_gb::to_vecpoly(rem).component(0), std::move(quotients)};
}

// Remainder of f on division by the list: no term of the result is divisible
// by any leading term, and f minus the result lies in the ideal of the list.
inline Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                              const TermOrder& order) {
    return divide(f, basis, order).remainder;
}

inline GroebnerBasis buchberger(const Ideal& I, const TermOrder& order) {
    FreeModule F{I.ring, {0}};
    ModuleBasis basis(F, ModuleOrder(order, 0));
    for (const auto& g : I.generators) basis.add_generator(VecPoly::from_polynomial(0, g));
    basis.complete();
    std::vector<Polynomial> elements;
    for (const auto& v : basis.reduced_elements()) elements.push_back(v.component(0));
    return {order, std::move(elements)};
}

inline MonomialIdeal initial_ideal(const GroebnerBasis& gb, const RingDescriptor& ring) {
    std::vector<Monomial> lts;
    lts.reserve(gb.elements.size());
    for (const auto& g : gb.elements) lts.push_back(g.leading_term(gb.order).first);
    return MonomialIdeal(ring, std::move(lts));
}

inline MonomialIdeal initial_ideal(const Ideal& I, const TermOrder& order) {
    return initial_ideal(buchberger(I, order), I.ring);
}

inline bool ideal_contains(const GroebnerBasis& gb, const Polynomial& f) {
    if (f.is_zero()) return true;
    if (gb.elements.empty()) return false;
    return normal_form(f, gb.elements, gb.order).is_zero();
}

inline bool ideal_equal(const Ideal& a, const Ideal& b, const TermOrder& order) {
    GroebnerBasis ga = buchberger(a, order);
    GroebnerBasis gb = buchberger(b, order);
    return ga.elements == gb.elements;
}

inline Ideal apply_automorphism(const GradedAutomorphism& phi, const Ideal& I) {
    std::vector<Polynomial> gens;
    gens.reserve(I.generators.size());
    for (const auto& g : I.generators) gens.push_back(apply_automorphism(phi, g));
    return Ideal(I.ring, std::move(gens));
}

// Trials of a Monte Carlo generic computation disagreed; retry with a fresh
// seed (or more trials).
class GenericityError : public std::runtime_error {
public:
    explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};

// Generic initial ideal: the initial ideal of the image of I under a random
// change of coordinates. `trials` independent samples must agree; agreement
// is strong evidence of genericity, not a proof.
inline MonomialIdeal gin(const Ideal& I, const TermOrder& order, std::uint64_t seed,
                         int trials = 2) {
    if (trials < 2) throw std::invalid_argument("gin: at least two trials required");
    std::mt19937_64 rng(seed);
    std::vector<MonomialIdeal> results;
    for (int t = 0; t < trials; ++t) {
        GradedAutomorphism phi = random_automorphism(I.ring, AutomorphismMode::General, rng);
        results.push_back(initial_ideal(apply_automorphism(phi, I), order));
        if (t > 0 && !(results[t] == results[0]))
            throw GenericityError("gin: genericity failure, retry with a new seed");
    }
    return results[0];
}

// --- colon and saturation -------------------------------------------------

namespace detail_colon {
// Prunes generators so no one lies in the ideal of the others, processing by
// increasing degree (a minimal homogeneous generating set).
inline std::vector<Polynomial> minimalize_generators(const RingDescriptor& ring,
                                                     std::vector<Polynomial> gens,
                                                     const TermOrder& order) {
    FreeModule F{ring, {0}};
    std::vector<VecPoly> vecs;
    vecs.reserve(gens.size());
    for (const auto& g : gens)
        if (!g.is_zero()) vecs.push_back(VecPoly::from_polynomial(0, g));
    auto kept = minimal_module_generators(F, std::move(vecs), order);
    std::vector<Polynomial> out;
    out.reserve(kept.size());
    for (const auto& v : kept) out.push_back(make_primitive(v.component(0)));
    return out;
}
}  // namespace detail_colon

// I : f = { h : h*f in I }, read off the f-coordinates of the syzygies of
// (f, g_1, ..., g_k).
inline Ideal colon(const Ideal& I, const Polynomial& f, const TermOrder& order) {
    if (f.is_zero()) throw std::invalid_argument("colon: zero divisor polynomial");
    if (!f.is_homogeneous(I.ring)) throw std::invalid_argument("colon: divisor not homogeneous");
    FreeModule F{I.ring, {0}};
    std::vector<VecPoly> gens;
    gens.push_back(VecPoly::from_polynomial(0, f));
    for (const auto& g : I.generators) gens.push_back(VecPoly::from_polynomial(0, g));
    std::vector<Polynomial> out;
    for (const auto& s : syzygies(F, gens, order)) {
        Polynomial h = s.component(0);
        if (!h.is_zero()) out.push_back(h);
    }
    return Ideal(I.ring, detail_colon::minimalize_generators(I.ring, std::move(out), order));
}

// A intersected with B: combinations sum a_i u_i with sum a_i u_i = sum b_j v_j.
inline Ideal ideal_intersection(const Ideal& A, const Ideal& B, const TermOrder& order) {
    if (A.is_zero()) return A;
    if (B.is_zero()) return B;
    FreeModule F{A.ring, {0}};
    std::vector<VecPoly> gens;
    for (const auto& g : A.generators) gens.push_back(VecPoly::from_polynomial(0, g));
    for (const auto& g : B.generators) gens.push_back(VecPoly::from_polynomial(0, g));
    std::vector<Polynomial> out;
    for (const auto& s : syzygies(F, gens, order)) {
        Polynomial h;
        for (std::size_t i = 0; i < A.generators.size(); ++i)
            h += s.component(static_cast<int>(i)) * A.generators[i];
        if (!h.is_zero()) out.push_back(h);
    }
    return Ideal(A.ring, detail_colon::minimalize_generators(A.ring, std::move(out), order));
}

inline Ideal colon(const Ideal& I, const Ideal& J, const TermOrder& order) {
    if (J.is_zero()) throw std::invalid_argument("colon: zero ideal divisor");
    Ideal result = colon(I, J.generators.front(), order);
    for (std::size_t i = 1; i < J.generators.size(); ++i)
        result = ideal_intersection(result, colon(I, J.generators[i], order), order);
    return result;
}

inline Ideal saturation(const Ideal& I, const Polynomial& f, const TermOrder& order) {
    Ideal cur = I;
    for (;;) {
        Ideal next = colon(cur, f, order);
        if (ideal_equal(next, cur, order)) return cur;
        cur = std::move(next);
    }
}

inline Ideal saturation(const Ideal& I, const Ideal& J, const TermOrder& order) {
    Ideal cur = I;
    for (;;) {
        Ideal next = colon(cur, J, order);
        if (ideal_equal(next, cur, order)) return cur;
        cur = std::move(next);
    }
}

// Weighted prime avoidance: a homogeneous form of degree q = lcm(q_1..q_n)
// outside every given prime. Each prime must miss some variable.
inline Polynomial find_avoiding_form(const RingDescriptor& ring,
                                     const std::vector<MonomialIdeal>& primes,
                                     std::uint64_t seed) {
    for (const auto& p : primes) {
        bool misses_a_variable = false;
        for (int v = 0; v < ring.variable_count() && !misses_a_variable; ++v)
            if (!p.contains(Monomial::unit(ring.variable_count()).times(v, 1)))
                misses_a_variable = true;
        if (!misses_a_variable)
            throw std::invalid_argument("find_avoiding_form: a prime contains every variable");
    }
    long long q = ring.lcm_weight();
    if (primes.empty())
        return Polynomial(
            Monomial::unit(ring.variable_count()).times(0, static_cast<int>(q / ring.weight(0))));
    auto basis = monomials_of_degree(ring, q);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-kGenericCoefficientBound, kGenericCoefficientBound);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Polynomial f;
        for (const auto& m : basis) f.add_term(m, Rational(dist(rng)));
        bool good = !f.is_zero();
        for (const auto& p : primes)
            if (good && p.contains(f)) good = false;
        if (good) return f;
    }
    throw std::runtime_error("find_avoiding_form: no avoiding form found");
}

}  // namespace wpoly
