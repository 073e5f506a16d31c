#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "wpoly/groebner.hpp"
#include "wpoly/ideal.hpp"
#include "wpoly/module_engine.hpp"
#include "wpoly/polynomial.hpp"

namespace wpoly {

// Graded free resolution of an ideal I (the module being resolved is I, not
// R/I): level 0 carries the generators, differentials map level k to level
// k-1. Shifts are weighted degrees.
struct FreeResolution {
    RingDescriptor ring;
    std::vector<Polynomial> generators;          // level-0 images, the resolved generators
    std::vector<std::vector<long long>> shifts;  // shifts[k][c]: degree of basis c at level k
    // differentials[k-1]: matrix of level k -> level k-1, entry [row][col]
    std::vector<std::vector<std::vector<Polynomial>>> differentials;
    bool minimal = true;

    bool is_zero() const { return shifts.empty(); }
    int levels() const { return static_cast<int>(shifts.size()); }

    std::vector<long long> sorted_shifts(int level) const {
        auto s = shifts.at(level);
        std::sort(s.begin(), s.end());
        return s;
    }
};

// Iterated syzygies from Groebner bases. With `minimalize` every level is
// pruned to a minimal generating set, so the result is the minimal
// resolution and its length is capped by the variable count; without it the
// raw syzygy Groebner bases are kept.
inline FreeResolution free_resolution(const Ideal& I, const TermOrder& order,
                                      bool minimalize = true) {
    FreeResolution res;
    res.ring = I.ring;
    res.minimal = minimalize;
    if (I.is_zero()) return res;

    FreeModule F{I.ring, {0}};
    std::vector<VecPoly> current;
    {
        std::vector<VecPoly> vecs;
        for (const auto& g : I.generators)
            vecs.push_back(VecPoly::from_polynomial(0, make_primitive(g)));
        if (minimalize) vecs = minimal_module_generators(F, std::move(vecs), order);
        current = std::move(vecs);
    }
    std::vector<long long> degrees;
    for (const auto& v : current) {
        degrees.push_back(v.degree(F));
        res.generators.push_back(v.component(0));
    }
    res.shifts.push_back(degrees);

    int cap = I.ring.variable_count() + (minimalize ? 1 : 8);
    while (!current.empty()) {
        if (res.levels() > cap)
            throw std::logic_error("free_resolution: length exceeded the syzygy bound");
        auto syz = syzygies(F, current, order);
        FreeModule next{I.ring, degrees};
        if (minimalize) syz = minimal_module_generators(next, std::move(syz), order);
        if (syz.empty()) break;
        std::vector<long long> next_degrees;
        for (const auto& v : syz) next_degrees.push_back(v.degree(next));
        std::vector<std::vector<Polynomial>> matrix(degrees.size(),
                                                    std::vector<Polynomial>(syz.size()));
        for (std::size_t col = 0; col < syz.size(); ++col)
            for (std::size_t row = 0; row < degrees.size(); ++row)
                matrix[row][col] = syz[col].component(static_cast<int>(row));
        res.differentials.push_back(std::move(matrix));
        res.shifts.push_back(next_degrees);
        F = std::move(next);
        current = std::move(syz);
        degrees = std::move(next_degrees);
    }
    return res;
}

inline FreeResolution free_resolution(const Ideal& I, bool minimalize = true) {
    return free_resolution(I, TermOrder::wdegrevlex(I.ring), minimalize);
}

inline FreeResolution free_resolution(const MonomialIdeal& I, bool minimalize = true) {
    return free_resolution(I.to_ideal(), minimalize);
}

// Graded Betti numbers beta_{ij} as (homological index, weighted degree) ->
// multiplicity. With `quotient` the table is the one of R/I (a free rank-one
// start in degree zero, everything else moved up one index).
struct BettiTable {
    std::map<std::pair<int, long long>, long long> entries;

    long long beta(int i, long long j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    // b_i: largest degree with a nonzero entry at index i; -1 when empty.
    long long b(int i) const {
        long long best = -1;
        for (const auto& [key, count] : entries)
            if (key.first == i) best = std::max(best, key.second);
        return best;
    }

    int max_index() const {
        int best = -1;
        for (const auto& [key, count] : entries) best = std::max(best, key.first);
        return best;
    }
};

inline BettiTable betti(const FreeResolution& res, bool quotient = false) {
    BettiTable table;
    if (quotient) table.entries[{0, 0}] = 1;
    int base = quotient ? 1 : 0;
    for (int level = 0; level < res.levels(); ++level)
        for (long long s : res.shifts[level]) ++table.entries[{level + base, s}];
    return table;
}

inline BettiTable betti(const Ideal& I, bool quotient = false) {
    return betti(free_resolution(I), quotient);
}

inline BettiTable betti(const MonomialIdeal& I, bool quotient = false) {
    return betti(I.to_ideal(), quotient);
}

// Castelnuovo-Mumford regularity through the weighted Betti formula:
//   reg M = max_i { b_i(M) - i } - sum_j l_j (q_j - 1).
inline long long weight_correction(const RingDescriptor& ring) {
    long long c = 0;
    for (int g = 0; g < ring.group_count(); ++g)
        c += static_cast<long long>(ring.group(g).count) * (ring.group(g).weight - 1);
    return c;
}

inline long long regularity(const BettiTable& table, const RingDescriptor& ring) {
    long long best = 0;
    bool seen = false;
    for (const auto& [key, count] : table.entries) {
        long long v = key.second - key.first;
        if (!seen || v > best) best = v;
        seen = true;
    }
    if (!seen) throw std::invalid_argument("regularity: empty Betti table");
    return best - weight_correction(ring);
}

inline long long regularity(const Ideal& I, bool quotient = false) {
    if (I.is_zero() && !quotient)
        throw std::invalid_argument("regularity: zero ideal has no generators");
    return regularity(betti(I, quotient), I.ring);
}

inline long long regularity(const MonomialIdeal& I, bool quotient = false) {
    return regularity(I.to_ideal(), quotient);
}

// depth R/I = l - projdim R/I (Auslander-Buchsbaum over the weighted
// polynomial ring); the minimal resolution of I has projdim R/I levels.
inline int depth(const Ideal& I) {
    FreeResolution res = free_resolution(I);
    return I.ring.variable_count() - res.levels();
}

inline int depth(const MonomialIdeal& I) { return depth(I.to_ideal()); }

}  // namespace wpoly
