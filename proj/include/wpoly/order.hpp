#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "wpoly/monomial.hpp"
#include "wpoly/ring.hpp"

namespace wpoly {

enum class OrderKind { WDegLex, WDegRevLex, Lex };

// A term order on the monomials of a fixed ring. The two weighted-degree
// kinds compare by weighted degree first; ties (and the pure Lex kind) are
// broken through a variable priority permutation: priority[0] is the most
// significant variable. The default priority is the flat order, so the
// lightest group ranks highest.
//
// Tie-breaks:
//   lex     — first differing exponent along the priority, larger wins;
//   revlex  — first differing exponent along the *reversed* priority,
//             smaller wins.
class TermOrder {
public:
    TermOrder(OrderKind kind, const RingDescriptor& ring, std::vector<int> priority = {})
        : kind_(kind), weights_(ring.weights()), priority_(std::move(priority)) {
        int l = static_cast<int>(weights_.size());
        if (priority_.empty()) {
            priority_.resize(l);
            std::iota(priority_.begin(), priority_.end(), 0);
        }
        if (static_cast<int>(priority_.size()) != l)
            throw std::invalid_argument("term order: priority size mismatch");
        std::vector<bool> seen(l, false);
        for (int v : priority_) {
            if (v < 0 || v >= l || seen[v])
                throw std::invalid_argument("term order: priority is not a permutation");
            seen[v] = true;
        }
    }

    static TermOrder wdeglex(const RingDescriptor& ring, std::vector<int> priority = {}) {
        return TermOrder(OrderKind::WDegLex, ring, std::move(priority));
    }
    static TermOrder wdegrevlex(const RingDescriptor& ring, std::vector<int> priority = {}) {
        return TermOrder(OrderKind::WDegRevLex, ring, std::move(priority));
    }
    static TermOrder lex(const RingDescriptor& ring, std::vector<int> priority = {}) {
        return TermOrder(OrderKind::Lex, ring, std::move(priority));
    }

    // Priority listing the groups in the given order, variables within a
    // group kept in index order.
    static std::vector<int> priority_from_group_order(const RingDescriptor& ring,
                                                      const std::vector<int>& group_order) {
        if (static_cast<int>(group_order.size()) != ring.group_count())
            throw std::invalid_argument("term order: group permutation size mismatch");
        std::vector<int> priority;
        priority.reserve(ring.variable_count());
        for (int g : group_order) {
            int off = ring.group_offset(g);
            for (int j = 0; j < ring.group(g).count; ++j) priority.push_back(off + j);
        }
        return priority;
    }

    OrderKind kind() const { return kind_; }
    const std::vector<int>& priority() const { return priority_; }

    // -1, 0, or 1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (a.size() != static_cast<int>(weights_.size()) || b.size() != a.size())
            throw std::invalid_argument("term order: monomial does not match ring");
        if (kind_ != OrderKind::Lex) {
            long long da = 0, db = 0;
            for (int v = 0; v < a.size(); ++v) {
                da += static_cast<long long>(a.exponent(v)) * weights_[v];
                db += static_cast<long long>(b.exponent(v)) * weights_[v];
            }
            if (da != db) return da < db ? -1 : 1;
        }
        if (kind_ == OrderKind::WDegRevLex) {
            for (int r = static_cast<int>(priority_.size()) - 1; r >= 0; --r) {
                int v = priority_[r];
                int ea = a.exponent(v), eb = b.exponent(v);
                if (ea != eb) return ea < eb ? 1 : -1;  // smaller trailing exponent wins
            }
            return 0;
        }
        for (int v : priority_) {
            int ea = a.exponent(v), eb = b.exponent(v);
            if (ea != eb) return ea > eb ? 1 : -1;
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool degree_compatible() const { return kind_ != OrderKind::Lex; }

    friend bool operator==(const TermOrder& a, const TermOrder& b) {
        return a.kind_ == b.kind_ && a.weights_ == b.weights_ && a.priority_ == b.priority_;
    }

private:
    OrderKind kind_;
    std::vector<int> weights_;
    std::vector<int> priority_;
};

}  // namespace wpoly
