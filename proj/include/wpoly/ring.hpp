#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wpoly/rational.hpp"

namespace wpoly {

// One block of variables sharing a weight.
struct WeightGroup {
    int weight = 1;
    int count = 1;
};

// A weighted polynomial ring: variables are grouped by weight, weights
// strictly increasing across groups. Variable v (flat index, 0-based) has
// weight weights()[v]; the flat order lists the lightest group first and,
// within a group, variables in index order.
class RingDescriptor {
public:
    RingDescriptor() = default;

    RingDescriptor(std::vector<WeightGroup> groups, std::vector<std::string> names = {})
        : groups_(std::move(groups)) {
        if (groups_.empty()) throw std::invalid_argument("ring: no variable groups");
        for (std::size_t g = 0; g < groups_.size(); ++g) {
            if (groups_[g].weight <= 0) throw std::invalid_argument("ring: weights must be positive");
            if (groups_[g].count <= 0) throw std::invalid_argument("ring: group counts must be positive");
            if (g > 0 && groups_[g - 1].weight >= groups_[g].weight)
                throw std::invalid_argument("ring: weights must be strictly increasing across groups");
        }
        offsets_.reserve(groups_.size());
        int off = 0;
        for (const auto& grp : groups_) {
            offsets_.push_back(off);
            for (int j = 0; j < grp.count; ++j) weights_.push_back(grp.weight);
            off += grp.count;
        }
        if (names.empty()) {
            names_.reserve(weights_.size());
            for (std::size_t v = 0; v < weights_.size(); ++v)
                names_.push_back("x" + std::to_string(v + 1));
        } else {
            if (names.size() != weights_.size())
                throw std::invalid_argument("ring: name count does not match variable count");
            names_ = std::move(names);
        }
        lcm_ = 1;
        for (const auto& grp : groups_) lcm_ = lcm_ll(lcm_, grp.weight);
        multipli_ = true;
        for (std::size_t g = 0; g + 1 < groups_.size(); ++g)
            if (groups_[g + 1].weight % groups_[g].weight != 0) multipli_ = false;
    }

    // Builds a ring from a flat weight list; variables are stably sorted by
    // increasing weight and grouped, original names preserved.
    static RingDescriptor from_weights(const std::vector<int>& weights,
                                       std::vector<std::string> names = {}) {
        if (weights.empty()) throw std::invalid_argument("ring: no variables");
        std::vector<std::size_t> idx(weights.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return weights[a] < weights[b]; });
        std::vector<WeightGroup> groups;
        std::vector<std::string> sorted_names;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            int w = weights[idx[k]];
            if (groups.empty() || groups.back().weight != w)
                groups.push_back(WeightGroup{w, 1});
            else
                ++groups.back().count;
            if (!names.empty()) sorted_names.push_back(names[idx[k]]);
        }
        return RingDescriptor(std::move(groups), std::move(sorted_names));
    }

    int variable_count() const { return static_cast<int>(weights_.size()); }
    int group_count() const { return static_cast<int>(groups_.size()); }
    const WeightGroup& group(int g) const { return groups_.at(g); }
    int group_offset(int g) const { return offsets_.at(g); }
    const std::vector<int>& weights() const { return weights_; }
    int weight(int v) const { return weights_.at(v); }

    int group_of(int v) const {
        for (int g = group_count() - 1; g >= 0; --g)
            if (v >= offsets_[g]) return g;
        throw std::out_of_range("ring: bad variable index");
    }

    // q = lcm of the weights.
    long long lcm_weight() const { return lcm_; }

    // Each weight divides the next one.
    bool satisfies_condition_multipli() const { return multipli_; }

    const std::string& name(int v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }

    int index_of(const std::string& name) const {
        for (int v = 0; v < variable_count(); ++v)
            if (names_[v] == name) return v;
        return -1;
    }

    // Divides all weights by their gcd (the grading is essentially unchanged,
    // degrees rescale by the gcd).
    RingDescriptor normalized() const {
        int g = 0;
        for (int w : weights_) g = static_cast<int>(gcd_ll(g, w));
        std::vector<WeightGroup> groups = groups_;
        for (auto& grp : groups) grp.weight /= g;
        return RingDescriptor(std::move(groups), names_);
    }

    // The prefix subring on the first `group_limit` groups.
    RingDescriptor prefix(int group_limit) const {
        if (group_limit <= 0 || group_limit > group_count())
            throw std::invalid_argument("ring: bad prefix group count");
        std::vector<WeightGroup> groups(groups_.begin(), groups_.begin() + group_limit);
        int vars = offsets_[group_limit - 1] + groups_[group_limit - 1].count;
        std::vector<std::string> names(names_.begin(), names_.begin() + vars);
        return RingDescriptor(std::move(groups), std::move(names));
    }

    bool same_grading(const RingDescriptor& other) const { return weights_ == other.weights_; }

    friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
        return a.weights_ == b.weights_ && a.names_ == b.names_;
    }
    friend bool operator!=(const RingDescriptor& a, const RingDescriptor& b) { return !(a == b); }

private:
    std::vector<WeightGroup> groups_;
    std::vector<int> offsets_;
    std::vector<int> weights_;
    std::vector<std::string> names_;
    long long lcm_ = 1;
    bool multipli_ = true;
};

}  // namespace wpoly
