#pragma once

#include <random>
#include <vector>

#include "wpoly/wpoly.hpp"

namespace wtest {

using namespace wpoly;

inline RingDescriptor ring23() { return parse_ring("x:2,y:3"); }
inline RingDescriptor ring27() { return parse_ring("x:2,y:7"); }
inline RingDescriptor ring124() { return parse_ring("x:1,y:2,z:4"); }
inline RingDescriptor ring245() { return parse_ring("x:2,y:4,z:5"); }
inline RingDescriptor ring223() { return parse_ring("x:2,y:2,z:3"); }

inline Monomial mono(const RingDescriptor& ring, const std::string& text) {
    Polynomial p = parse_polynomial(ring, text);
    if (p.term_count() != 1 || p.terms().begin()->second != Rational(1))
        throw std::invalid_argument("mono: not a plain monomial: " + text);
    return p.terms().begin()->first;
}

inline std::vector<Monomial> monos(const RingDescriptor& ring,
                                   const std::vector<std::string>& texts) {
    std::vector<Monomial> out;
    for (const auto& t : texts) out.push_back(mono(ring, t));
    return out;
}

inline MonomialIdeal mono_ideal(const RingDescriptor& ring,
                                const std::vector<std::string>& gens) {
    return MonomialIdeal(ring, monos(ring, gens));
}

inline Ideal ideal(const RingDescriptor& ring, const std::string& spec) {
    return parse_ideal(ring, spec);
}

// Random monomial of weighted degree <= max_degree (resamples until the
// degree has monomials); uniform over exponent boxes, not over monomials.
inline Monomial random_monomial(const RingDescriptor& ring, int max_total_exponent,
                                std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(0, max_total_exponent);
    std::vector<int> e(ring.variable_count());
    for (int v = 0; v < ring.variable_count(); ++v) e[v] = dist(rng) / (1 + v % 2);
    return Monomial(e);
}

inline MonomialIdeal random_monomial_ideal(const RingDescriptor& ring, int max_gens,
                                           int max_total_exponent, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, max_gens);
    std::vector<Monomial> gens;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m = random_monomial(ring, max_total_exponent, rng);
        if (!m.is_unit()) gens.push_back(m);
    }
    if (gens.empty()) gens.push_back(Monomial::unit(ring.variable_count()).times(0, 1));
    return MonomialIdeal(ring, gens);
}

// Random homogeneous polynomial supported on the degree-d monomials.
inline Polynomial random_form(const RingDescriptor& ring, long long degree, int max_terms,
                              std::mt19937_64& rng) {
    auto basis = monomials_of_degree(ring, degree);
    if (basis.empty()) return Polynomial();
    std::uniform_int_distribution<int> coeff(-20, 20);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    Polynomial f;
    for (int t = 0; t < max_terms; ++t) f.add_term(basis[pick(rng)], Rational(coeff(rng)));
    if (f.is_zero()) f.add_term(basis[pick(rng)], Rational(1));
    return f;
}

// Random homogeneous ideal with small generators; degrees drawn from the
// realizable degrees of the ring.
inline Ideal random_homogeneous_ideal(const RingDescriptor& ring, int max_gens,
                                      long long max_degree, std::mt19937_64& rng) {
    std::vector<long long> degrees;
    for (long long d = 1; d <= max_degree; ++d)
        if (!monomials_of_degree(ring, d).empty()) degrees.push_back(d);
    std::uniform_int_distribution<int> count(1, max_gens);
    std::uniform_int_distribution<std::size_t> pick(0, degrees.size() - 1);
    std::uniform_int_distribution<int> terms(1, 3);
    std::vector<Polynomial> gens;
    int n = count(rng);
    for (int i = 0; i < n; ++i)
        gens.push_back(random_form(ring, degrees[pick(rng)], terms(rng), rng));
    return Ideal(ring, gens);
}

// Brute-force dim_K I_d: the rank of the multiples of the generators over
// the monomial basis of R_d (fraction-free elimination). Independent of the
// Groebner machinery.
inline long long dimension_by_rank(const Ideal& I, long long d) {
    auto basis = monomials_of_degree(I.ring, d);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : I.generators) {
        long long dg = g.degree(I.ring);
        if (dg > d) continue;
        for (const auto& m : monomials_of_degree(I.ring, d - dg)) {
            std::vector<Rational> row(basis.size(), Rational(0));
            for (const auto& [mm, c] : g.terms()) row[index.at(mm * m)] += c;
            rows.push_back(std::move(row));
        }
    }
    // Gaussian elimination over Q
    long long rank = 0;
    std::size_t cols = basis.size();
    std::vector<std::vector<Rational>> reduced;
    for (auto& row : rows) {
        for (const auto& r : reduced) {
            std::size_t piv = 0;
            while (piv < cols && r[piv] == 0) ++piv;
            if (piv < cols && row[piv] != 0) {
                Rational f = row[piv] / r[piv];
                for (std::size_t j = piv; j < cols; ++j) row[j] -= f * r[j];
            }
        }
        bool nonzero = false;
        for (const auto& c : row)
            if (c != 0) {
                nonzero = true;
                break;
            }
        if (nonzero) {
            reduced.push_back(row);
            ++rank;
        }
    }
    return rank;
}

}  // namespace wtest
