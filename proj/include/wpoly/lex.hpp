#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wpoly/groebner.hpp"
#include "wpoly/hilbert.hpp"
#include "wpoly/ideal.hpp"
#include "wpoly/monomial.hpp"
#include "wpoly/order.hpp"

namespace wpoly {

// Monomials of degree d sorted descending under the given order.
inline std::vector<Monomial> sorted_degree_basis(const RingDescriptor& ring, long long d,
                                                 const TermOrder& order) {
    auto basis = monomials_of_degree(ring, d);
    std::sort(basis.begin(), basis.end(),
              [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    return basis;
}

// The k largest monomials of degree d.
inline std::vector<Monomial> lex_segment(const RingDescriptor& ring, long long d, std::size_t k,
                                         const TermOrder& order) {
    auto basis = sorted_degree_basis(ring, d, order);
    if (k > basis.size()) throw std::invalid_argument("lex_segment: segment larger than component");
    basis.resize(k);
    return basis;
}

// Upward closed in its degree: together with u, every larger monomial of the
// same degree belongs to the set.
inline bool is_lexsegment(const RingDescriptor& ring, const std::vector<Monomial>& A,
                          const TermOrder& order) {
    if (A.empty()) return true;
    long long d = weighted_degree(A.front(), ring);
    for (const auto& m : A)
        if (weighted_degree(m, ring) != d)
            throw std::invalid_argument("is_lexsegment: mixed degrees");
    auto basis = sorted_degree_basis(ring, d, order);
    std::vector<Monomial> sorted = A;
    std::sort(sorted.begin(), sorted.end(),
              [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (!(sorted[i] == basis[i])) return false;
    return true;
}

// Shad_i(A): products of A with every monomial of degree i.
inline std::vector<Monomial> shadow(const RingDescriptor& ring, const std::vector<Monomial>& A,
                                    long long i) {
    if (!A.empty()) {
        long long d = weighted_degree(A.front(), ring);
        for (const auto& m : A)
            if (weighted_degree(m, ring) != d)
                throw std::invalid_argument("shadow: mixed degrees");
    }
    std::vector<Monomial> out;
    for (const auto& u : A)
        for (const auto& m : monomials_of_degree(ring, i)) out.push_back(u * m);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct LexCheckResult {
    bool lexicographic = true;
    long long first_failure = -1;
    long long checked_through = 0;  // components 0..checked_through were tested

    explicit operator bool() const { return lexicographic; }
};

// Every graded component up to max generator degree + q + G*(w) must be a
// lexsegment; beyond the bound the property propagates automatically.
inline LexCheckResult is_lexicographic_ideal(const MonomialIdeal& I, const TermOrder& order) {
    const RingDescriptor& ring = I.ring();
    long long bound = I.max_generator_degree() + ring.lcm_weight() + gap_bound(ring);
    for (long long i = 0; i <= bound; ++i) {
        auto component = I.graded_component(i);
        if (!is_lexsegment(ring, component, order)) return {false, i, bound};
    }
    return {true, -1, bound};
}

struct LexifyOutcome {
    enum class Status { Lexifiable, NotLexifiable, Inconclusive };
    Status status = Status::Inconclusive;
    MonomialIdeal lex_ideal;       // Lexifiable: the associated lexicographic ideal
    long long witness_degree = -1; // NotLexifiable: first inconsistent degree
    long long h_ideal = -1;        // dim of I at the witness degree
    long long h_candidate = -1;    // dim forced by the candidate's lower components
    long long degree_bound = -1;   // Inconclusive: exhausted search bound
};

// Builds the candidate L degreewise from the Hilbert function of I: L_i is
// the lexsegment of size H_I(i). Multiplying lower components by the
// variables must land inside the candidate, otherwise I is not lexifiable
// and the failing degree with both dimensions is the certificate. Once no
// new generator appears for q + G*(w) degrees past the last one, the
// candidate is an ideal in every degree; an exact Hilbert-series comparison
// then settles equality of the Hilbert functions in all degrees at once.
inline LexifyOutcome lexify(const MonomialIdeal& I, const TermOrder& order,
                            long long max_degree = -1) {
    const RingDescriptor& ring = I.ring();
    long long q = ring.lcm_weight();
    long long gap = gap_bound(ring);
    long long maxgen = I.max_generator_degree();
    if (max_degree < 0) max_degree = 4 * (maxgen + q + gap);
    auto H = hilbert_function_range(I, std::max(max_degree, maxgen), false);

    std::map<long long, std::vector<Monomial>> components;  // candidate components, sorted desc
    std::vector<Monomial> lex_gens;
    long long cutoff = maxgen;  // reaches the first generator, then slides
    for (long long i = 0;; ++i) {
        if (i > cutoff) break;
        if (i > max_degree) {
            LexifyOutcome out;
            out.status = LexifyOutcome::Status::Inconclusive;
            out.degree_bound = max_degree;
            return out;
        }
        long long n = to_long(H[i]);
        auto basis = sorted_degree_basis(ring, i, order);
        std::map<Monomial, std::size_t> rank;
        for (std::size_t r = 0; r < basis.size(); ++r) rank.emplace(basis[r], r + 1);

        std::vector<Monomial> forced;
        for (int g = 0; g < ring.group_count(); ++g) {
            long long w = ring.group(g).weight;
            if (i < w) continue;
            auto lower = components.find(i - w);
            if (lower == components.end()) continue;
            for (const auto& u : lower->second)
                for (int j = 0; j < ring.group(g).count; ++j)
                    forced.push_back(u.times(ring.group_offset(g) + j, 1));
        }
        std::sort(forced.begin(), forced.end());
        forced.erase(std::unique(forced.begin(), forced.end()), forced.end());

        long long needed = 0;
        for (const auto& m : forced) needed = std::max<long long>(needed, rank.at(m));
        if (needed > n) {
            LexifyOutcome out;
            out.status = LexifyOutcome::Status::NotLexifiable;
            out.witness_degree = i;
            out.h_ideal = n;
            out.h_candidate = needed;
            return out;
        }
        std::vector<Monomial> L_i(basis.begin(), basis.begin() + n);
        if (static_cast<long long>(forced.size()) < n) {
            // new generators appear in this degree
            for (const auto& m : L_i)
                if (std::find(forced.begin(), forced.end(), m) == forced.end())
                    lex_gens.push_back(m);
            cutoff = std::max(i, maxgen) + q + gap;
        }
        if (n > 0) components.emplace(i, std::move(L_i));
    }
    MonomialIdeal L(ring, std::move(lex_gens));
    HilbertSeries hi = hilbert_series(I);
    HilbertSeries hl = hilbert_series(L);
    if (hi.numerator != hl.numerator) {
        // the candidate is forced, so the first degree where the Hilbert
        // functions split refutes lexifiability
        long long top = std::max(hi.numerator_degree(), hl.numerator_degree());
        auto vi = hilbert_function_range(I, top, false);
        auto vl = hilbert_function_range(L, top, false);
        for (long long d = 0; d <= top; ++d)
            if (vi[d] != vl[d]) {
                LexifyOutcome out;
                out.status = LexifyOutcome::Status::NotLexifiable;
                out.witness_degree = d;
                out.h_ideal = to_long(vi[d]);
                out.h_candidate = to_long(vl[d]);
                return out;
            }
        throw std::logic_error("lexify: series mismatch without a witness degree");
    }
    LexifyOutcome out;
    out.status = LexifyOutcome::Status::Lexifiable;
    out.lex_ideal = std::move(L);
    return out;
}

inline LexifyOutcome lexify(const Ideal& I, const TermOrder& order, long long max_degree = -1) {
    return lexify(initial_ideal(I, TermOrder::wdegrevlex(I.ring)), order, max_degree);
}

// Outcomes per cross-group lex order (every permutation of the weight
// groups, variables within a group kept in index order).
inline std::vector<std::pair<std::vector<int>, LexifyOutcome>> lexify_all_group_orders(
    const MonomialIdeal& I, long long max_degree = -1) {
    std::vector<int> perm(I.ring().group_count());
    for (std::size_t g = 0; g < perm.size(); ++g) perm[g] = static_cast<int>(g);
    std::vector<std::pair<std::vector<int>, LexifyOutcome>> out;
    do {
        TermOrder order = TermOrder::lex(I.ring(), TermOrder::priority_from_group_order(I.ring(), perm));
        out.emplace_back(perm, lexify(I, order, max_degree));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

struct DeltaResult {
    long long delta = 0;
    long long beta = 0;
    bool divisible = false;  // q_1 divides d already
};

// Smallest d + beta*q_2 divisible by q_1 (two variables, coprime weights).
inline DeltaResult delta(long long d, const RingDescriptor& ring) {
    if (ring.group_count() != 2 || ring.group(0).count != 1 || ring.group(1).count != 1)
        throw std::invalid_argument("delta: ring must have two variables of distinct weights");
    long long q1 = ring.group(0).weight, q2 = ring.group(1).weight;
    if (d % q1 == 0) return {d, 0, true};
    if (gcd_ll(q1, q2) != 1) throw std::invalid_argument("delta: weights must be coprime");
    for (long long beta = 1; beta < q1; ++beta)
        if ((d + beta * q2) % q1 == 0) return {d + beta * q2, beta, false};
    throw std::logic_error("delta: unreachable for coprime weights");
}

// Lexicographic-ideal criterion for two coprime weights when every
// generating component is a lexsegment: q_1 | d_1, or some later generating
// degree d_s is divisible by q_1 and bounded by every delta_i of the
// non-divisible generating degrees.
inline bool two_var_lex_test(const MonomialIdeal& I, const TermOrder& order) {
    const RingDescriptor& ring = I.ring();
    if (ring.group_count() != 2 || ring.group(0).count != 1 || ring.group(1).count != 1)
        throw std::invalid_argument("two_var_lex_test: ring must have two variables");
    long long q1 = ring.group(0).weight, q2 = ring.group(1).weight;
    if (gcd_ll(q1, q2) != 1)
        throw std::invalid_argument("two_var_lex_test: weights must be coprime");
    if (order.priority().front() != 0)
        throw std::invalid_argument("two_var_lex_test: the lighter variable must rank highest");
    if (I.is_zero()) return true;
    std::vector<long long> degrees;
    for (const auto& m : I.minimal_generators()) {
        long long d = weighted_degree(m, ring);
        if (degrees.empty() || degrees.back() != d) degrees.push_back(d);
    }
    for (long long d : degrees)
        if (!is_lexsegment(ring, I.graded_component(d), order))
            throw std::invalid_argument("two_var_lex_test: generating component is not a lexsegment");
    if (degrees.front() % q1 == 0) return true;
    long long min_delta = -1;
    for (long long d : degrees)
        if (d % q1 != 0) {
            long long dd = delta(d, ring).delta;
            if (min_delta < 0 || dd < min_delta) min_delta = dd;
        }
    for (std::size_t s = 1; s < degrees.size(); ++s)
        if (degrees[s] % q1 == 0 && degrees[s] <= min_delta) return true;
    return false;
}

}  // namespace wpoly
