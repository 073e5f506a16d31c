#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wpoly/monomial.hpp"
#include "wpoly/order.hpp"
#include "wpoly/rational.hpp"
#include "wpoly/ring.hpp"

namespace wpoly {

// Sparse polynomial with exact rational coefficients. Terms are kept in a
// canonical map (exponent-vector order) so equality is plain map equality;
// leading terms under a specific TermOrder are located by scan.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Monomial& m, const Rational& c) {
        if (c != 0) terms_[m] = c;
    }
    explicit Polynomial(const Monomial& m) : Polynomial(m, Rational(1)) {}

    static Polynomial constant(int variables, const Rational& c) {
        return Polynomial(Monomial::unit(variables), c);
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& g) {
        for (const auto& [m, c] : g.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& g) {
        for (const auto& [m, c] : g.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }

    friend Polynomial operator-(const Polynomial& f) {
        Polynomial g = f;
        for (auto& [m, c] : g.terms_) c = -c;
        return g;
    }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        Polynomial h;
        for (const auto& [mf, cf] : f.terms_)
            for (const auto& [mg, cg] : g.terms_) h.add_term(mf * mg, cf * cg);
        return h;
    }

    friend Polynomial operator*(const Polynomial& f, const Rational& c) {
        Polynomial h;
        if (c == 0) return h;
        h.terms_ = f.terms_;
        for (auto& [m, coef] : h.terms_) coef *= c;
        return h;
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& f) { return f * c; }

    // f * c*m
    Polynomial scaled_shift(const Monomial& m, const Rational& c) const {
        Polynomial h;
        if (c == 0) return h;
        for (const auto& [mm, cc] : terms_) h.terms_.emplace(mm * m, cc * c);
        return h;
    }

    Polynomial pow(int e) const {
        if (e < 0) throw std::invalid_argument("polynomial: negative power");
        if (terms_.empty()) {
            if (e == 0) throw std::invalid_argument("polynomial: 0^0");
            return Polynomial();
        }
        int vars = terms_.begin()->first.size();
        Polynomial result = constant(vars, 1);
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = e > 1 ? base * base : base;
            e >>= 1;
        }
        return result;
    }

    bool is_homogeneous(const RingDescriptor& ring) const {
        if (terms_.empty()) return true;
        long long d = weighted_degree(terms_.begin()->first, ring);
        for (const auto& [m, c] : terms_)
            if (weighted_degree(m, ring) != d) return false;
        return true;
    }

    // Weighted degree (maximum over terms); -1 for the zero polynomial.
    long long degree(const RingDescriptor& ring) const {
        long long d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, weighted_degree(m, ring));
        return d;
    }

    std::pair<Monomial, Rational> leading_term(const TermOrder& order) const {
        if (terms_.empty()) throw std::invalid_argument("polynomial: leading term of zero");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order.greater(it->first, best->first)) best = it;
        return {best->first, best->second};
    }

    friend bool operator==(const Polynomial& f, const Polynomial& g) { return f.terms_ == g.terms_; }
    friend bool operator!=(const Polynomial& f, const Polynomial& g) { return !(f == g); }
    friend bool operator<(const Polynomial& f, const Polynomial& g) { return f.terms_ < g.terms_; }

private:
    std::map<Monomial, Rational> terms_;
};

// Integer scalar multiple with content 1 and positive first canonical term.
inline Polynomial make_primitive(const Polynomial& f) {
    if (f.is_zero()) return f;
    BigInt den = 1, num = 0;
    for (const auto& [m, c] : f.terms()) den = lcm(den, c.get_den());
    for (const auto& [m, c] : f.terms()) num = gcd(num, BigInt(c.get_num() * (den / c.get_den())));
    Rational scale(den, num);
    scale.canonicalize();
    if (f.terms().begin()->second < 0) scale = -scale;
    return f * scale;
}

// Scalar multiple with leading coefficient one.
inline Polynomial make_monic(const Polynomial& f, const TermOrder& order) {
    if (f.is_zero()) return f;
    return f * (Rational(1) / f.leading_term(order).second);
}

}  // namespace wpoly
