#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wpoly/monomial.hpp"
#include "wpoly/polynomial.hpp"
#include "wpoly/ring.hpp"

namespace wpoly {

// A homogeneous ideal given by generators. Zero generators are rejected,
// non-homogeneous ones too.
struct Ideal {
    RingDescriptor ring;
    std::vector<Polynomial> generators;

    Ideal(RingDescriptor r, std::vector<Polynomial> gens)
        : ring(std::move(r)), generators(std::move(gens)) {
        for (const auto& g : generators) {
            if (g.is_zero()) throw std::invalid_argument("ideal: zero generator");
            if (!g.is_homogeneous(ring))
                throw std::invalid_argument("ideal: generator is not homogeneous");
        }
    }

    bool is_zero() const { return generators.empty(); }
};

// A monomial ideal kept by its minimal generators (an antichain under
// divisibility), sorted by degree then canonically.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(RingDescriptor ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
        for (const auto& m : gens)
            if (m.size() != ring_.variable_count())
                throw std::invalid_argument("monomial ideal: monomial does not match ring");
        gens_ = minimalize(std::move(gens));
        sort_canonical(gens_, ring_);
    }

    const RingDescriptor& ring() const { return ring_; }
    const std::vector<Monomial>& minimal_generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

    bool contains(const Monomial& m) const {
        for (const auto& g : gens_)
            if (divides(g, m)) return true;
        return false;
    }

    bool contains(const Polynomial& f) const {
        for (const auto& [m, c] : f.terms())
            if (!contains(m)) return false;
        return true;
    }

    // Monomials of weighted degree d lying in the ideal.
    std::vector<Monomial> graded_component(long long d) const {
        std::vector<Monomial> out;
        for (const auto& m : monomials_of_degree(ring_, d))
            if (contains(m)) out.push_back(m);
        return out;
    }

    MonomialIdeal colon(const Monomial& m) const {
        std::vector<Monomial> out;
        out.reserve(gens_.size());
        for (const auto& g : gens_) out.push_back(g / gcd(g, m));
        return MonomialIdeal(ring_, std::move(out));
    }

    MonomialIdeal saturation(const Monomial& m) const {
        MonomialIdeal cur = *this;
        for (;;) {
            MonomialIdeal next = cur.colon(m);
            if (next == cur) return cur;
            cur = std::move(next);
        }
    }

    MonomialIdeal plus(const Monomial& m) const {
        std::vector<Monomial> out = gens_;
        out.push_back(m);
        return MonomialIdeal(ring_, std::move(out));
    }

    MonomialIdeal plus(const MonomialIdeal& other) const {
        std::vector<Monomial> out = gens_;
        out.insert(out.end(), other.gens_.begin(), other.gens_.end());
        return MonomialIdeal(ring_, std::move(out));
    }

    MonomialIdeal intersection(const MonomialIdeal& other) const {
        std::vector<Monomial> out;
        for (const auto& a : gens_)
            for (const auto& b : other.gens_) out.push_back(lcm(a, b));
        return MonomialIdeal(ring_, std::move(out));
    }

    Ideal to_ideal() const {
        std::vector<Polynomial> gens;
        gens.reserve(gens_.size());
        for (const auto& m : gens_) gens.emplace_back(m);
        return Ideal(ring_, std::move(gens));
    }

    long long max_generator_degree() const {
        long long d = 0;
        for (const auto& m : gens_) d = std::max(d, weighted_degree(m, ring_));
        return d;
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.ring_.same_grading(b.ring_) && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }
    friend bool operator<(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.gens_ < b.gens_;
    }

private:
    static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
        std::vector<Monomial> out;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
                if (i == j) continue;
                if (divides(gens[j], gens[i]) && !(gens[i] == gens[j] && j > i)) redundant = true;
            }
            if (!redundant && std::find(out.begin(), out.end(), gens[i]) == out.end())
                out.push_back(gens[i]);
        }
        return out;
    }

    static void sort_canonical(std::vector<Monomial>& gens, const RingDescriptor& ring) {
        std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
            long long da = weighted_degree(a, ring), db = weighted_degree(b, ring);
            if (da != db) return da < db;
            return b < a;
        });
    }

    RingDescriptor ring_;
    std::vector<Monomial> gens_;
};

}  // namespace wpoly
