#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wpoly/groebner.hpp"
#include "wpoly/ideal.hpp"
#include "wpoly/monomial.hpp"
#include "wpoly/rational.hpp"
#include "wpoly/ring.hpp"

namespace wpoly {

namespace detail_hs {

using ZPoly = std::vector<BigInt>;  // univariate over Z, ascending, trimmed

inline void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly out(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

inline ZPoly shifted(const ZPoly& a, long long k) {
    if (a.empty()) return {};
    ZPoly out(a.size() + static_cast<std::size_t>(k), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i + k] = a[i];
    return out;
}

// 1 - t^k (the zero polynomial when k = 0)
inline ZPoly one_minus_power(long long k) {
    ZPoly out(static_cast<std::size_t>(k) + 1, BigInt(0));
    out[0] += 1;
    out[static_cast<std::size_t>(k)] -= 1;
    trim(out);
    return out;
}

}  // namespace detail_hs

// Hilbert series of R/I as numerator over the fixed denominator
// prod_i (1 - t^{q_i})^{l_i}.
struct HilbertSeries {
    RingDescriptor ring;
    detail_hs::ZPoly numerator;  // ascending coefficients

    long long numerator_degree() const {
        return numerator.empty() ? -1 : static_cast<long long>(numerator.size()) - 1;
    }
};

namespace detail_hs {

inline bool disjoint_supports(const std::vector<Monomial>& gens) {
    if (gens.size() < 2) return true;
    int vars = gens.front().size();
    std::vector<int> owner(vars, -1);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (int v = 0; v < vars; ++v)
            if (gens[i].exponent(v) > 0) {
                if (owner[v] >= 0) return false;
                owner[v] = static_cast<int>(i);
            }
    return true;
}

// Pivot for the splitting recursion: the variable occurring in most minimal
// generators, raised to the lower median of its positive exponents. The
// median is automatically below any pure-power generator exponent, so the
// pivot is never inside the ideal and both branches strictly shrink the
// generator exponent mass.
inline Monomial pick_pivot(const MonomialIdeal& I) {
    const auto& gens = I.minimal_generators();
    int vars = I.ring().variable_count();
    int best = -1, best_count = 0;
    for (int v = 0; v < vars; ++v) {
        int count = 0;
        for (const auto& g : gens)
            if (g.exponent(v) > 0) ++count;
        if (count > best_count) {
            best_count = count;
            best = v;
        }
    }
    std::vector<int> exps;
    for (const auto& g : gens)
        if (g.exponent(best) > 0) exps.push_back(g.exponent(best));
    std::sort(exps.begin(), exps.end());
    int a = exps[(exps.size() - 1) / 2];
    return Monomial::unit(vars).times(best, a);
}

inline ZPoly numerator_of(const MonomialIdeal& I, std::map<std::vector<Monomial>, ZPoly>& memo) {
    const auto& gens = I.minimal_generators();
    if (disjoint_supports(gens)) {
        ZPoly out{BigInt(1)};
        for (const auto& g : gens) out = mul(out, one_minus_power(weighted_degree(g, I.ring())));
        return out;
    }
    auto it = memo.find(gens);
    if (it != memo.end()) return it->second;
    Monomial p = pick_pivot(I);
    long long dp = weighted_degree(p, I.ring());
    ZPoly colon_part = numerator_of(I.colon(p), memo);
    ZPoly sum_part = numerator_of(I.plus(p), memo);
    ZPoly out = add(shifted(colon_part, dp), sum_part);
    memo.emplace(gens, out);
    return out;
}

}  // namespace detail_hs

// Pivot-splitting recursion on 0 -> R/(I:p)(-deg p) -> R/I -> R/(I+p) -> 0.
inline HilbertSeries hilbert_series(const MonomialIdeal& I) {
    std::map<std::vector<Monomial>, detail_hs::ZPoly> memo;
    return HilbertSeries{I.ring(), detail_hs::numerator_of(I, memo)};
}

// Coefficients H_{R/I}(0..max_degree) of the series expansion.
inline std::vector<BigInt> expand(const HilbertSeries& hs, long long max_degree) {
    std::vector<BigInt> out(static_cast<std::size_t>(max_degree) + 1, BigInt(0));
    for (std::size_t i = 0; i < hs.numerator.size() && i <= static_cast<std::size_t>(max_degree);
         ++i)
        out[i] = hs.numerator[i];
    for (int g = 0; g < hs.ring.group_count(); ++g) {
        long long w = hs.ring.group(g).weight;
        for (int rep = 0; rep < hs.ring.group(g).count; ++rep)
            for (long long d = w; d <= max_degree; ++d) out[d] += out[d - w];
    }
    return out;
}

inline std::vector<BigInt> hilbert_function_range(const MonomialIdeal& I, long long max_degree,
                                                  bool quotient) {
    auto values = expand(hilbert_series(I), max_degree);
    if (!quotient) {
        auto free_values = expand(HilbertSeries{I.ring(), {BigInt(1)}}, max_degree);
        for (long long d = 0; d <= max_degree; ++d) values[d] = free_values[d] - values[d];
    }
    return values;
}

// dim_K I_d by default; the quotient flag reports H_{R/I} instead.
inline long long hilbert_function(const MonomialIdeal& I, long long d, bool quotient = false) {
    if (d < 0) throw std::invalid_argument("hilbert_function: negative degree");
    return to_long(hilbert_function_range(I, d, quotient)[d]);
}

inline long long hilbert_function(const Ideal& I, long long d, const TermOrder& order,
                                  bool quotient = false) {
    return hilbert_function(initial_ideal(I, order), d, quotient);
}

inline long long hilbert_function(const Ideal& I, long long d, bool quotient = false) {
    return hilbert_function(I, d, TermOrder::wdegrevlex(I.ring), quotient);
}

// The residue-class polynomials of the Hilbert function: H_{R/I}(l) equals
// polys[l mod q](l) for l >= threshold; each polynomial has degree below the
// pole order of the series at t = 1, and the threshold is minimal.
struct QuasiPolynomial {
    long long modulus = 1;
    int pole_order = 0;
    long long threshold = 0;
    std::vector<std::vector<Rational>> polys;  // coefficients, ascending power

    Rational evaluate(long long l) const {
        const auto& p = polys.at(static_cast<std::size_t>(((l % modulus) + modulus) % modulus));
        Rational acc(0);
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * rational_of(l) + *it;
        return acc;
    }
};

namespace detail_hs {

// multiplicity of the root t = 1
inline int multiplicity_at_one(ZPoly g) {
    int v = 0;
    while (!g.empty()) {
        BigInt at_one(0);
        for (const auto& c : g) at_one += c;
        if (at_one != 0) break;
        // divide by (1 - t): h[k] = g[k] + h[k-1]
        ZPoly h(g.size() - 1, BigInt(0));
        BigInt carry(0);
        for (std::size_t k = 0; k + 1 < g.size(); ++k) {
            carry = g[k] + carry;
            h[k] = carry;
        }
        trim(h);
        g = std::move(h);
        ++v;
    }
    return v;
}

inline std::vector<Rational> lagrange(const std::vector<long long>& xs,
                                      const std::vector<BigInt>& ys) {
    std::size_t n = xs.size();
    std::vector<Rational> acc(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> basis{Rational(1)};
        Rational denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            // basis *= (t - xs[j])
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * rational_of(xs[j]);
            }
            basis = std::move(next);
            denom *= rational_of(xs[i]) - rational_of(xs[j]);
        }
        Rational scale = Rational(ys[i]) / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * scale;
    }
    while (!acc.empty() && acc.back() == 0) acc.pop_back();
    return acc;
}

}  // namespace detail_hs

inline QuasiPolynomial quasi_polynomial(const HilbertSeries& hs) {
    long long q = hs.ring.lcm_weight();
    int l = hs.ring.variable_count();
    QuasiPolynomial out;
    out.modulus = q;
    out.polys.assign(static_cast<std::size_t>(q), {});
    if (hs.numerator.empty()) {
        out.pole_order = 0;
        out.threshold = 0;
        return out;
    }
    int mult = detail_hs::multiplicity_at_one(hs.numerator);
    out.pole_order = std::max(0, l - mult);
    long long denom_degree = 0;
    for (int g = 0; g < hs.ring.group_count(); ++g)
        denom_degree += static_cast<long long>(hs.ring.group(g).weight) * hs.ring.group(g).count;
    long long base_threshold =
        std::max<long long>(0, static_cast<long long>(hs.numerator.size()) - denom_degree);

    int d = out.pole_order;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 8) throw std::runtime_error("quasi_polynomial: interpolation did not verify");
        long long T = base_threshold + attempt * q;
        long long top = T + (d + 2) * q;
        auto H = expand(hs, top);
        bool ok = true;
        if (d == 0) {
            for (long long j = 0; j < q && ok; ++j) out.polys[j] = {};
        } else {
            for (long long j = 0; j < q; ++j) {
                long long start = T + (((j - T) % q) + q) % q;
                std::vector<long long> xs;
                std::vector<BigInt> ys;
                for (int k = 0; k < d; ++k) {
                    xs.push_back(start + k * q);
                    ys.push_back(H[start + k * q]);
                }
                out.polys[j] = detail_hs::lagrange(xs, ys);
            }
        }
        // verify against the next stretch of coefficients
        for (long long t = T; t <= top && ok; ++t)
            if (out.evaluate(t) != Rational(H[t])) ok = false;
        if (!ok) continue;
        // minimal threshold: walk down from T
        long long n0 = 0;
        for (long long t = T - 1; t >= 0; --t)
            if (out.evaluate(t) != Rational(H[t])) {
                n0 = t + 1;
                break;
            }
        out.threshold = n0;
        return out;
    }
}

// Least B such that every monomial of degree n + q with n > B has a divisor
// of degree exactly q. Monomials outside the box {e_v < q/w_v} contain a
// variable power of degree q, so the search is finite; one degree-q divisor
// peels off at a time, which extends the bound to all multiples hq.
inline long long gap_bound(const RingDescriptor& ring) {
    long long q = ring.lcm_weight();
    int vars = ring.variable_count();
    std::vector<int> caps(vars);
    for (int v = 0; v < vars; ++v) caps[v] = static_cast<int>(q / ring.weight(v)) - 1;
    long long bound = 0;
    std::vector<int> exps(vars, 0);
    for (;;) {
        long long deg = 0;
        for (int v = 0; v < vars; ++v) deg += static_cast<long long>(exps[v]) * ring.weight(v);
        if (deg > q) {
            Monomial m{std::vector<int>(exps)};
            if (!has_divisor_of_degree(m, ring, q)) bound = std::max(bound, deg - q);
        }
        int v = vars - 1;
        while (v >= 0 && exps[v] == caps[v]) exps[v--] = 0;
        if (v < 0) break;
        ++exps[v];
    }
    return bound;
}

// All monomials of degree D with no divisor of degree exactly d.
inline std::vector<Monomial> gap_witnesses(const RingDescriptor& ring, long long d, long long D) {
    if (d > D) throw std::invalid_argument("gap_witnesses: divisor degree exceeds monomial degree");
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(ring, D))
        if (!has_divisor_of_degree(m, ring, d)) out.push_back(m);
    return out;
}

// Largest degree with empty graded piece of R; the weights must have gcd 1.
// Returns -1 when every degree is realized.
inline long long frobenius_number(const RingDescriptor& ring) {
    long long g = 0;
    for (int i = 0; i < ring.group_count(); ++i) g = gcd_ll(g, ring.group(i).weight);
    if (g != 1)
        throw std::invalid_argument("frobenius_number: weights do not have gcd 1");
    long long max_w = ring.group(ring.group_count() - 1).weight;
    long long min_w = ring.group(0).weight;
    if (min_w == 1) return -1;
    long long bound = max_w * max_w + max_w;
    std::vector<char> reach(static_cast<std::size_t>(bound) + 1, 0);
    reach[0] = 1;
    for (long long t = 1; t <= bound; ++t)
        for (int i = 0; i < ring.group_count() && !reach[t]; ++i) {
            long long w = ring.group(i).weight;
            if (t >= w && reach[t - w]) reach[t] = 1;
        }
    long long frob = -1;
    for (long long t = bound; t >= 1; --t)
        if (!reach[t]) {
            frob = t;
            break;
        }
    return frob;
}

namespace detail_hs {
inline void divisors_of_degree(const Monomial& m, const RingDescriptor& ring, int v,
                               long long remaining, std::vector<int>& pick,
                               std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.emplace_back(pick);
        return;
    }
    if (v >= m.size()) return;
    long long w = ring.weight(v);
    long long cap = std::min<long long>(m.exponent(v), remaining / w);
    for (long long e = cap; e >= 0; --e) {
        pick[v] = static_cast<int>(e);
        divisors_of_degree(m, ring, v + 1, remaining - e * w, pick, out);
    }
    pick[v] = 0;
}
}  // namespace detail_hs

// A monomial of I_r without a degree-l divisor inside I, if any; absence for
// every r in (l, limit] certifies I_r = I_l R_{r-l} over that window.
inline std::optional<std::pair<long long, Monomial>> stabilization_witness(
    const MonomialIdeal& I, long long l, long long limit) {
    const RingDescriptor& ring = I.ring();
    for (long long r = l + 1; r <= limit; ++r) {
        for (const auto& m : I.graded_component(r)) {
            std::vector<Monomial> divisors;
            std::vector<int> pick(ring.variable_count(), 0);
            detail_hs::divisors_of_degree(m, ring, 0, l, pick, divisors);
            bool covered = false;
            for (const auto& u : divisors)
                if (I.contains(u)) {
                    covered = true;
                    break;
                }
            if (!covered) return std::make_pair(r, m);
        }
    }
    return std::nullopt;
}

// Least l with I_r = I_l * R_{r-l} for all l <= r <= limit. Candidates stop
// below the limit so the verification window is never empty.
inline std::optional<long long> stabilization_degree(const MonomialIdeal& I, long long limit) {
    for (long long l = 0; l < limit; ++l)
        if (!stabilization_witness(I, l, limit).has_value()) return l;
    return std::nullopt;
}

}  // namespace wpoly
