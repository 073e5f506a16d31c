#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "wpoly/monomial.hpp"
#include "wpoly/order.hpp"
#include "wpoly/polynomial.hpp"
#include "wpoly/ring.hpp"

namespace wpoly {

// Free module with weighted-degree shifts: basis element e_c has degree
// shifts[c], so the term m*e_c is homogeneous of degree deg(m) + shifts[c].
struct FreeModule {
    RingDescriptor ring;
    std::vector<long long> shifts;

    int rank() const { return static_cast<int>(shifts.size()); }
};

struct ModTerm {
    int comp = 0;
    Monomial mono;

    friend bool operator==(const ModTerm& a, const ModTerm& b) {
        return a.comp == b.comp && a.mono == b.mono;
    }
};

// Order on module terms: an optional leading block of components dominates
// everything after it (used to eliminate the presentation part when reading
// off syzygies), then the base term order on monomials, then position. The
// restriction to a rank-one module is exactly the base order.
class ModuleOrder {
public:
    ModuleOrder(TermOrder base, int elim_split = 0)
        : base_(std::move(base)), split_(elim_split) {}

    const TermOrder& base() const { return base_; }

    int compare(const ModTerm& a, const ModTerm& b) const {
        int blk_a = a.comp < split_ ? 0 : 1;
        int blk_b = b.comp < split_ ? 0 : 1;
        if (blk_a != blk_b) return blk_a < blk_b ? 1 : -1;
        int c = base_.compare(a.mono, b.mono);
        if (c != 0) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }

    bool greater(const ModTerm& a, const ModTerm& b) const { return compare(a, b) > 0; }

private:
    TermOrder base_;
    int split_;
};

// Element of a free module, canonical map storage.
class VecPoly {
public:
    VecPoly() = default;

    static VecPoly basis_vector(int comp, int variables) {
        VecPoly v;
        v.terms_.emplace(std::make_pair(comp, Monomial::unit(variables)), Rational(1));
        return v;
    }

    static VecPoly from_polynomial(int comp, const Polynomial& f) {
        VecPoly v;
        for (const auto& [m, c] : f.terms()) v.terms_.emplace(std::make_pair(comp, m), c);
        return v;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<std::pair<int, Monomial>, Rational>& terms() const { return terms_; }

    void add_term(int comp, const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto key = std::make_pair(comp, m);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    VecPoly& operator+=(const VecPoly& other) {
        for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    VecPoly& operator-=(const VecPoly& other) {
        for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend VecPoly operator-(const VecPoly& v) {
        VecPoly out = v;
        for (auto& [k, c] : out.terms_) c = -c;
        return out;
    }

    Polynomial component(int comp) const {
        Polynomial f;
        for (const auto& [k, c] : terms_)
            if (k.first == comp) f.add_term(k.second, c);
        return f;
    }

    bool supported_from(int comp) const {
        return terms_.empty() || terms_.begin()->first.first >= comp;
    }

    // Drops `shift` leading components (which must be unused).
    VecPoly renumbered(int shift) const {
        VecPoly out;
        for (const auto& [k, c] : terms_) {
            if (k.first < shift) throw std::logic_error("vecpoly: component in dropped range");
            out.terms_.emplace(std::make_pair(k.first - shift, k.second), c);
        }
        return out;
    }

    bool is_homogeneous(const FreeModule& F) const {
        if (terms_.empty()) return true;
        long long d = degree(F);
        for (const auto& [k, c] : terms_)
            if (weighted_degree(k.second, F.ring) + F.shifts.at(k.first) != d) return false;
        return true;
    }

    long long degree(const FreeModule& F) const {
        if (terms_.empty()) return -1;
        long long d = 0;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            long long t = weighted_degree(k.second, F.ring) + F.shifts.at(k.first);
            d = first ? t : std::max(d, t);
            first = false;
        }
        return d;
    }

    friend bool operator==(const VecPoly& a, const VecPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator<(const VecPoly& a, const VecPoly& b) { return a.terms_ < b.terms_; }

private:
    std::map<std::pair<int, Monomial>, Rational> terms_;
};

namespace detail_gb {

using Term = std::pair<ModTerm, Rational>;
using OrderedVec = std::vector<Term>;  // sorted descending under the module order

inline OrderedVec to_ordered(const VecPoly& v, const ModuleOrder& ord) {
    OrderedVec out;
    out.reserve(v.term_count());
    for (const auto& [k, c] : v.terms()) out.push_back({ModTerm{k.first, k.second}, c});
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.first, b.first); });
    return out;
}

inline VecPoly to_vecpoly(const OrderedVec& v) {
    VecPoly out;
    for (const auto& [t, c] : v) out.add_term(t.comp, t.mono, c);
    return out;
}

// a - c*(m * b); both inputs sorted, result sorted.
inline OrderedVec axpy(const OrderedVec& a, const Rational& c, const Monomial& m,
                       const OrderedVec& b, const ModuleOrder& ord) {
    OrderedVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j >= b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        ModTerm bt{b[j].first.comp, b[j].first.mono * m};
        if (i >= a.size()) {
            out.push_back({bt, -c * b[j].second});
            ++j;
            continue;
        }
        int cmp = ord.compare(a[i].first, bt);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back({bt, -c * b[j].second});
            ++j;
        } else {
            Rational coef = a[i].second - c * b[j].second;
            if (coef != 0) out.push_back({a[i].first, coef});
            ++i;
            ++j;
        }
    }
    return out;
}

inline void make_primitive(OrderedVec& v) {
    if (v.empty()) return;
    BigInt den = 1, num = 0;
    for (const auto& [t, c] : v) den = lcm(den, c.get_den());
    for (const auto& [t, c] : v) num = gcd(num, BigInt(c.get_num() * (den / c.get_den())));
    Rational scale(den, num);
    scale.canonicalize();
    if (v.front().second < 0) scale = -scale;
    for (auto& [t, c] : v) c *= scale;
}

struct Reducer {
    const OrderedVec* terms;
    ModTerm lt;
    Rational lc;
};

// Full normal form of `work` against `reducers`. With `quotients` the exact
// division bookkeeping is kept: input = sum quotients[i]*reducers[i] + result.
inline OrderedVec reduce_full(OrderedVec work, const std::vector<Reducer>& reducers,
                              const ModuleOrder& ord,
                              std::vector<Polynomial>* quotients = nullptr) {
    OrderedVec remainder;
    std::size_t done = 0;  // leading `done` entries of work are the remainder so far
    while (done < work.size()) {
        const ModTerm& lt = work[done].first;
        const Rational& lc = work[done].second;
        const Reducer* hit = nullptr;
        std::size_t hit_index = 0;
        for (std::size_t i = 0; i < reducers.size(); ++i) {
            if (reducers[i].lt.comp == lt.comp && divides(reducers[i].lt.mono, lt.mono)) {
                hit = &reducers[i];
                hit_index = i;
                break;
            }
        }
        if (!hit) {
            ++done;
            continue;
        }
        Rational factor = lc / hit->lc;
        Monomial shift = lt.mono / hit->lt.mono;
        if (quotients) (*quotients)[hit_index].add_term(shift, factor);
        OrderedVec head(work.begin(), work.begin() + done);
        OrderedVec tail(work.begin() + done, work.end());
        tail = axpy(tail, factor, shift, *hit->terms, ord);
        head.insert(head.end(), tail.begin(), tail.end());
        work = std::move(head);
    }
    return work;
}

}  // namespace detail_gb

// Buchberger engine over a free module. Generators can be added
// incrementally; complete() brings the basis to a Groebner basis of the
// submodule generated so far. Reductions strip content, so basis elements
// stay primitive integer vectors.
class ModuleBasis {
public:
    ModuleBasis(FreeModule F, ModuleOrder ord) : F_(std::move(F)), ord_(std::move(ord)) {}

    const FreeModule& free_module() const { return F_; }
    const ModuleOrder& order() const { return ord_; }

    void add_generator(const VecPoly& v) {
        if (v.is_zero()) return;
        auto reduced =
            detail_gb::reduce_full(detail_gb::to_ordered(v, ord_), reducers(), ord_);
        if (reduced.empty()) return;
        detail_gb::make_primitive(reduced);
        insert_element(std::move(reduced));
    }

    void complete() {
        while (!pairs_.empty()) {
            auto [deg, i, j] = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            auto reduced = detail_gb::reduce_full(s_pair(basis_[i], basis_[j]), reducers(), ord_);
            if (reduced.empty()) continue;
            detail_gb::make_primitive(reduced);
            insert_element(std::move(reduced));
        }
    }

    VecPoly normal_form(const VecPoly& v) const {
        return detail_gb::to_vecpoly(
            detail_gb::reduce_full(detail_gb::to_ordered(v, ord_), reducers(), ord_));
    }

    bool contains(const VecPoly& v) const { return normal_form(v).is_zero(); }

    std::size_t size() const { return basis_.size(); }

    std::vector<VecPoly> elements() const {
        std::vector<VecPoly> out;
        out.reserve(basis_.size());
        for (const auto& e : basis_) out.push_back(detail_gb::to_vecpoly(e.terms));
        return out;
    }

    // Minimal Groebner basis with reduced tails and unit leading
    // coefficients, sorted by descending leading term: canonical for a fixed
    // order, so equal submodules yield equal reduced bases.
    std::vector<VecPoly> reduced_elements() const {
        std::vector<int> keep;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
                if (i == j) continue;
                if (basis_[j].lt.comp == basis_[i].lt.comp &&
                    divides(basis_[j].lt.mono, basis_[i].lt.mono)) {
                    if (basis_[i].lt.mono == basis_[j].lt.mono && j > i) continue;
                    redundant = true;
                }
            }
            if (!redundant) keep.push_back(static_cast<int>(i));
        }
        std::sort(keep.begin(), keep.end(),
                  [&](int a, int b) { return ord_.greater(basis_[a].lt, basis_[b].lt); });
        std::vector<detail_gb::OrderedVec> out;
        out.reserve(keep.size());
        for (int idx : keep) out.push_back(basis_[idx].terms);
        // reduce tails against the other kept elements until stable
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t i = 0; i < out.size(); ++i) {
                std::vector<detail_gb::Reducer> others;
                for (std::size_t j = 0; j < out.size(); ++j)
                    if (j != i)
                        others.push_back({&out[j], out[j].front().first, out[j].front().second});
                detail_gb::OrderedVec tail(out[i].begin() + 1, out[i].end());
                auto reduced_tail = detail_gb::reduce_full(tail, others, ord_);
                if (reduced_tail != tail) {
                    changed = true;
                    detail_gb::OrderedVec next;
                    next.push_back(out[i].front());
                    next.insert(next.end(), reduced_tail.begin(), reduced_tail.end());
                    out[i] = std::move(next);
                }
            }
        }
        std::vector<VecPoly> result;
        result.reserve(out.size());
        for (auto& v : out) {
            Rational lc = v.front().second;
            for (auto& [t, c] : v) c /= lc;
            result.push_back(detail_gb::to_vecpoly(v));
        }
        return result;
    }

private:
    struct Elem {
        detail_gb::OrderedVec terms;
        ModTerm lt;
        Rational lc;
    };

    std::vector<detail_gb::Reducer> reducers() const {
        std::vector<detail_gb::Reducer> out;
        out.reserve(basis_.size());
        for (const auto& e : basis_) out.push_back({&e.terms, e.lt, e.lc});
        return out;
    }

    detail_gb::OrderedVec s_pair(const Elem& f, const Elem& g) const {
        Monomial m = lcm(f.lt.mono, g.lt.mono);
        Monomial mf = m / f.lt.mono;
        Monomial mg = m / g.lt.mono;
        // g.lc * mf * f  -  f.lc * mg * g
        detail_gb::OrderedVec scaled;
        scaled.reserve(f.terms.size());
        for (const auto& [t, c] : f.terms)
            scaled.push_back({ModTerm{t.comp, t.mono * mf}, c * g.lc});
        return detail_gb::axpy(scaled, f.lc, mg, g.terms, ord_);
    }

    void insert_element(detail_gb::OrderedVec terms) {
        Elem e{std::move(terms), {}, {}};
        e.lt = e.terms.front().first;
        e.lc = e.terms.front().second;
        int idx = static_cast<int>(basis_.size());
        bool single_component = F_.rank() <= 1;
        for (int i = 0; i < idx; ++i) {
            if (basis_[i].lt.comp != e.lt.comp) continue;
            // the coprimality criterion is only valid for polynomials
            if (single_component && coprime(basis_[i].lt.mono, e.lt.mono)) continue;
            Monomial m = lcm(basis_[i].lt.mono, e.lt.mono);
            long long deg = weighted_degree(m, F_.ring) + F_.shifts.at(e.lt.comp);
            pairs_.insert({deg, i, idx});
        }
        basis_.push_back(std::move(e));
    }

    FreeModule F_;
    ModuleOrder ord_;
    std::vector<Elem> basis_;
    std::set<std::tuple<long long, int, int>> pairs_;
};

// Generators of the syzygy module of `gens` (homogeneous vectors in F):
// Groebner basis of {(g_i, e_i)} in F + R^k under an order that lets the F
// block dominate; the elements with vanishing F part, projected to R^k, form
// a Groebner basis of Syz(g_1..g_k). Returned in the free module R^k whose
// shifts are the generators' degrees.
inline std::vector<VecPoly> syzygies(const FreeModule& F, const std::vector<VecPoly>& gens,
                                     const TermOrder& base) {
    int p = F.rank();
    int k = static_cast<int>(gens.size());
    FreeModule combined{F.ring, F.shifts};
    for (const auto& g : gens) {
        if (!g.is_homogeneous(F)) throw std::invalid_argument("syzygies: non-homogeneous generator");
        combined.shifts.push_back(g.degree(F));
    }
    ModuleBasis basis(combined, ModuleOrder(base, p));
    for (int i = 0; i < k; ++i) {
        VecPoly ext = gens[i];
        ext.add_term(p + i, Monomial::unit(F.ring.variable_count()), Rational(1));
        basis.add_generator(ext);
    }
    basis.complete();
    std::vector<VecPoly> out;
    for (const auto& v : basis.reduced_elements())
        if (v.supported_from(p)) out.push_back(v.renumbered(p));
    return out;
}

// Prunes a homogeneous generating set to a minimal one: candidates are
// taken in increasing degree and kept only when not in the submodule
// generated by the previously kept ones (graded Nakayama makes this greedy
// sound).
inline std::vector<VecPoly> minimal_module_generators(const FreeModule& F,
                                                      std::vector<VecPoly> gens,
                                                      const TermOrder& base) {
    std::stable_sort(gens.begin(), gens.end(), [&](const VecPoly& a, const VecPoly& b) {
        long long da = a.degree(F), db = b.degree(F);
        if (da != db) return da < db;
        return a < b;
    });
    ModuleBasis kept_basis(F, ModuleOrder(base, 0));
    std::vector<VecPoly> kept;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        kept_basis.complete();
        if (kept_basis.contains(g)) continue;
        kept.push_back(g);
        kept_basis.add_generator(g);
    }
    return kept;
}

}  // namespace wpoly
