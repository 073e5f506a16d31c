#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wpoly/ring.hpp"

namespace wpoly {

// A monomial is an exponent vector over the ring's flat variable list.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
        for (int x : e_)
            if (x < 0) throw std::invalid_argument("monomial: negative exponent");
    }
    static Monomial unit(int variables) { return Monomial(std::vector<int>(variables, 0)); }

    int size() const { return static_cast<int>(e_.size()); }
    int exponent(int v) const { return e_.at(v); }
    const std::vector<int>& exponents() const { return e_; }

    bool is_unit() const {
        return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
    }

    int total_exponent() const {
        int s = 0;
        for (int x : e_) s += x;
        return s;
    }

    Monomial times(int v, int amount) const {
        Monomial m = *this;
        m.e_.at(v) += amount;
        if (m.e_[v] < 0) throw std::invalid_argument("monomial: negative exponent");
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        check_sizes(a, b);
        Monomial m = a;
        for (int v = 0; v < b.size(); ++v) m.e_[v] += b.e_[v];
        return m;
    }

    // Exact division; throws when b does not divide a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        check_sizes(a, b);
        Monomial m = a;
        for (int v = 0; v < b.size(); ++v) {
            m.e_[v] -= b.e_[v];
            if (m.e_[v] < 0) throw std::invalid_argument("monomial: division is not exact");
        }
        return m;
    }

    friend bool divides(const Monomial& a, const Monomial& b) {
        check_sizes(a, b);
        for (int v = 0; v < a.size(); ++v)
            if (a.e_[v] > b.e_[v]) return false;
        return true;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        check_sizes(a, b);
        Monomial m = a;
        for (int v = 0; v < b.size(); ++v) m.e_[v] = std::max(m.e_[v], b.e_[v]);
        return m;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        check_sizes(a, b);
        Monomial m = a;
        for (int v = 0; v < b.size(); ++v) m.e_[v] = std::min(m.e_[v], b.e_[v]);
        return m;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        check_sizes(a, b);
        for (int v = 0; v < a.size(); ++v)
            if (a.e_[v] > 0 && b.e_[v] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
    // Canonical container order (plain exponent-vector comparison); term
    // orders live in order.hpp.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

private:
    static void check_sizes(const Monomial& a, const Monomial& b) {
        if (a.size() != b.size()) throw std::invalid_argument("monomial: variable count mismatch");
    }
    std::vector<int> e_;
};

inline long long weighted_degree(const Monomial& m, const RingDescriptor& ring) {
    if (m.size() != ring.variable_count())
        throw std::invalid_argument("weighted_degree: monomial does not match ring");
    long long d = 0;
    for (int v = 0; v < m.size(); ++v) d += static_cast<long long>(m.exponent(v)) * ring.weight(v);
    return d;
}

namespace detail {
inline void enumerate_degree(const RingDescriptor& ring, int v, int last_var, long long remaining,
                             std::vector<int>& exps, std::vector<Monomial>& out) {
    if (v > last_var) {
        if (remaining == 0) out.emplace_back(exps);
        return;
    }
    if (v == last_var) {
        // tail shortcut: the last admissible variable must absorb the rest
        if (remaining % ring.weight(v) == 0) {
            exps[v] = static_cast<int>(remaining / ring.weight(v));
            out.emplace_back(exps);
            exps[v] = 0;
        }
        return;
    }
    long long w = ring.weight(v);
    for (long long e = remaining / w; e >= 0; --e) {
        exps[v] = static_cast<int>(e);
        enumerate_degree(ring, v + 1, last_var, remaining - e * w, exps, out);
    }
    exps[v] = 0;
}
}  // namespace detail

// All monomials of weighted degree exactly d, listed in descending
// lexicographic order for the default variable priority (flat order).
inline std::vector<Monomial> monomials_of_degree(const RingDescriptor& ring, long long d) {
    if (d < 0) throw std::invalid_argument("monomials_of_degree: negative degree");
    std::vector<Monomial> out;
    std::vector<int> exps(ring.variable_count(), 0);
    detail::enumerate_degree(ring, 0, ring.variable_count() - 1, d, exps, out);
    return out;
}

// Monomials of degree d supported on the first `group_limit` groups.
inline std::vector<Monomial> monomials_of_degree_in_prefix(const RingDescriptor& ring, long long d,
                                                           int group_limit) {
    std::vector<Monomial> out;
    if (group_limit <= 0) {
        if (d == 0) out.push_back(Monomial::unit(ring.variable_count()));
        return out;
    }
    int last = ring.group_offset(group_limit - 1) + ring.group(group_limit - 1).count - 1;
    std::vector<int> exps(ring.variable_count(), 0);
    detail::enumerate_degree(ring, 0, last, d, exps, out);
    return out;
}

// Does m have a divisor of weighted degree exactly d?
inline bool has_divisor_of_degree(const Monomial& m, const RingDescriptor& ring, long long d);

namespace detail {
inline bool divisor_search(const Monomial& m, const RingDescriptor& ring, int v, long long remaining,
                           std::vector<int>& pick, std::optional<Monomial>& found) {
    if (remaining == 0) {
        found = Monomial(pick);
        return true;
    }
    if (v >= m.size()) return false;
    long long w = ring.weight(v);
    long long cap = std::min<long long>(m.exponent(v), remaining / w);
    for (long long e = cap; e >= 0; --e) {
        pick[v] = static_cast<int>(e);
        if (divisor_search(m, ring, v + 1, remaining - e * w, pick, found)) return true;
    }
    pick[v] = 0;
    return false;
}
}  // namespace detail

inline std::optional<Monomial> divisor_of_degree(const Monomial& m, const RingDescriptor& ring,
                                                 long long d) {
    if (d < 0) return std::nullopt;
    std::vector<int> pick(m.size(), 0);
    std::optional<Monomial> found;
    detail::divisor_search(m, ring, 0, d, pick, found);
    return found;
}

inline bool has_divisor_of_degree(const Monomial& m, const RingDescriptor& ring, long long d) {
    return divisor_of_degree(m, ring, d).has_value();
}

}  // namespace wpoly
