#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wpoly/matrix.hpp"
#include "wpoly/monomial.hpp"
#include "wpoly/polynomial.hpp"
#include "wpoly/ring.hpp"

namespace wpoly {

// A graded automorphism in normal form: variable X_{ij} maps to
//     sum_h a^i_{jh} X_{ih}  +  psi_{ij},
// where A_i = (a^i_{jh}) is an invertible block per weight group and psi_{ij}
// is homogeneous of degree q_i in the strictly lighter groups. Membership in
// the subgroup T additionally requires every block to be triangular (each
// variable maps into itself and earlier variables of its group).
class GradedAutomorphism {
public:
    GradedAutomorphism(RingDescriptor ring, std::vector<QMatrix> blocks,
                       std::vector<Polynomial> psi)
        : ring_(std::move(ring)), blocks_(std::move(blocks)), psi_(std::move(psi)) {
        validate();
    }

    static GradedAutomorphism identity(const RingDescriptor& ring) {
        std::vector<QMatrix> blocks;
        for (int g = 0; g < ring.group_count(); ++g)
            blocks.push_back(QMatrix::identity(ring.group(g).count));
        return GradedAutomorphism(ring, std::move(blocks),
                                  std::vector<Polynomial>(ring.variable_count()));
    }

    // Reconstructs the normal form from explicit variable images.
    static GradedAutomorphism from_images(const RingDescriptor& ring,
                                          const std::vector<Polynomial>& images) {
        if (static_cast<int>(images.size()) != ring.variable_count())
            throw std::invalid_argument("automorphism: one image per variable required");
        std::vector<QMatrix> blocks;
        for (int g = 0; g < ring.group_count(); ++g) blocks.emplace_back(ring.group(g).count);
        std::vector<Polynomial> psi(ring.variable_count());
        for (int v = 0; v < ring.variable_count(); ++v) {
            int g = ring.group_of(v);
            int off = ring.group_offset(g);
            int j = v - off;
            for (const auto& [m, c] : images[v].terms()) {
                int linear_var = linear_variable_of(ring, m, g);
                if (linear_var >= 0)
                    blocks[g].at(j, linear_var - off) = c;
                else
                    psi[v].add_term(m, c);
            }
        }
        return GradedAutomorphism(ring, std::move(blocks), std::move(psi));
    }

    const RingDescriptor& ring() const { return ring_; }
    const QMatrix& block(int g) const { return blocks_.at(g); }
    const Polynomial& psi(int v) const { return psi_.at(v); }

    Polynomial image(int v) const {
        int g = ring_.group_of(v);
        int off = ring_.group_offset(g);
        Polynomial img = psi_[v];
        for (int h = 0; h < ring_.group(g).count; ++h) {
            const Rational& c = blocks_[g].at(v - off, h);
            if (c != 0) img.add_term(Monomial::unit(ring_.variable_count()).times(off + h, 1), c);
        }
        return img;
    }

    bool is_in_T() const {
        for (const auto& b : blocks_)
            if (!b.is_triangular()) return false;
        return true;
    }

    bool is_diagonal() const {
        for (std::size_t g = 0; g < blocks_.size(); ++g)
            for (int j = 0; j < blocks_[g].size(); ++j)
                for (int h = 0; h < blocks_[g].size(); ++h)
                    if (j != h && blocks_[g].at(j, h) != 0) return false;
        for (const auto& p : psi_)
            if (!p.is_zero()) return false;
        return true;
    }

    friend bool operator==(const GradedAutomorphism& a, const GradedAutomorphism& b) {
        return a.ring_ == b.ring_ && a.blocks_ == b.blocks_ && a.psi_ == b.psi_;
    }

private:
    void validate() const {
        if (static_cast<int>(blocks_.size()) != ring_.group_count())
            throw std::invalid_argument("automorphism: one block per group required");
        if (static_cast<int>(psi_.size()) != ring_.variable_count())
            throw std::invalid_argument("automorphism: one psi per variable required");
        for (int g = 0; g < ring_.group_count(); ++g) {
            if (blocks_[g].size() != ring_.group(g).count)
                throw std::invalid_argument("automorphism: block size mismatch");
            if (blocks_[g].determinant() == 0)
                throw std::invalid_argument("automorphism: singular block");
        }
        for (int v = 0; v < ring_.variable_count(); ++v) {
            int g = ring_.group_of(v);
            const Polynomial& p = psi_[v];
            if (p.is_zero()) continue;
            for (const auto& [m, c] : p.terms()) {
                if (weighted_degree(m, ring_) != ring_.group(g).weight)
                    throw std::invalid_argument("automorphism: psi has wrong degree");
                for (int u = ring_.group_offset(g); u < ring_.variable_count(); ++u)
                    if (m.exponent(u) != 0)
                        throw std::invalid_argument(
                            "automorphism: psi must live in strictly lighter groups");
            }
        }
    }

    // If m is a single variable of group g with exponent 1, returns it.
    static int linear_variable_of(const RingDescriptor& ring, const Monomial& m, int g) {
        int var = -1;
        for (int u = 0; u < m.size(); ++u) {
            if (m.exponent(u) == 0) continue;
            if (var >= 0 || m.exponent(u) != 1) return -1;
            var = u;
        }
        if (var < 0) return -1;
        return ring.group_of(var) == g ? var : -1;
    }

    RingDescriptor ring_;
    std::vector<QMatrix> blocks_;
    std::vector<Polynomial> psi_;
};

namespace detail_aut {
inline Monomial resize_monomial(const Monomial& m, int vars) {
    std::vector<int> e(vars, 0);
    for (int v = 0; v < std::min(vars, m.size()); ++v) e[v] = m.exponent(v);
    for (int v = vars; v < m.size(); ++v)
        if (m.exponent(v) != 0) throw std::invalid_argument("monomial: cannot truncate support");
    return Monomial(std::move(e));
}
}  // namespace detail_aut

inline Polynomial resize_polynomial(const Polynomial& f, int vars) {
    Polynomial out;
    for (const auto& [m, c] : f.terms()) out.add_term(detail_aut::resize_monomial(m, vars), c);
    return out;
}

inline Polynomial apply_automorphism(const GradedAutomorphism& phi, const Polynomial& f) {
    const RingDescriptor& ring = phi.ring();
    for (const auto& [m, c] : f.terms())
        if (m.size() != ring.variable_count())
            throw std::invalid_argument("apply_automorphism: polynomial does not match the ring");
    // power cache per variable, built lazily up to the needed exponent
    std::vector<std::vector<Polynomial>> powers(ring.variable_count());
    auto power = [&](int v, int e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) {
            cache.push_back(Polynomial::constant(ring.variable_count(), 1));
            cache.push_back(phi.image(v));
        }
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
        return cache[e];
    };
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        Polynomial term = Polynomial::constant(ring.variable_count(), c);
        for (int v = 0; v < ring.variable_count(); ++v)
            if (m.exponent(v) > 0) term = term * power(v, m.exponent(v));
        out += term;
    }
    return out;
}

// compose(f, g) maps x to f(g(x)).
inline GradedAutomorphism compose(const GradedAutomorphism& f, const GradedAutomorphism& g) {
    if (!f.ring().same_grading(g.ring()))
        throw std::invalid_argument("automorphism: ring mismatch");
    std::vector<Polynomial> images;
    images.reserve(f.ring().variable_count());
    for (int v = 0; v < f.ring().variable_count(); ++v)
        images.push_back(apply_automorphism(f, g.image(v)));
    return GradedAutomorphism::from_images(f.ring(), images);
}

inline GradedAutomorphism inverse(const GradedAutomorphism& phi) {
    const RingDescriptor& ring = phi.ring();
    int l = ring.variable_count();
    std::vector<QMatrix> blocks;
    std::vector<Polynomial> psi(l);
    // Solve group by group in increasing weight; the psi correction
    //   chi_j = -phi^{-1}( sum_h (A^{-1})_{jh} psi_h )
    // only involves the already-inverted lighter groups.
    for (int g = 0; g < ring.group_count(); ++g) {
        QMatrix inv = phi.block(g).inverse();
        blocks.push_back(inv);
        int off = ring.group_offset(g);
        int count = ring.group(g).count;
        bool any_psi = false;
        for (int h = 0; h < count; ++h)
            if (!phi.psi(off + h).is_zero()) any_psi = true;
        if (!any_psi) continue;
        RingDescriptor prefix_ring = ring.prefix(g);
        std::vector<QMatrix> prefix_blocks(blocks.begin(), blocks.begin() + g);
        std::vector<Polynomial> prefix_psi;
        prefix_psi.reserve(off);
        for (int v = 0; v < off; ++v) prefix_psi.push_back(resize_polynomial(psi[v], off));
        GradedAutomorphism partial(prefix_ring, std::move(prefix_blocks), std::move(prefix_psi));
        for (int j = 0; j < count; ++j) {
            Polynomial correction;
            for (int h = 0; h < count; ++h) {
                const Rational& c = inv.at(j, h);
                if (c != 0 && !phi.psi(off + h).is_zero()) correction += phi.psi(off + h) * c;
            }
            if (correction.is_zero()) continue;
            Polynomial mapped =
                apply_automorphism(partial, resize_polynomial(correction, off));
            psi[off + j] = -resize_polynomial(mapped, l);
        }
    }
    return GradedAutomorphism(ring, std::move(blocks), std::move(psi));
}

enum class AutomorphismMode { General, UpperTriangular };

// The documented coefficient range realizing "generic" choices.
inline constexpr long kGenericCoefficientBound = 1000000;

inline GradedAutomorphism random_automorphism(const RingDescriptor& ring, AutomorphismMode mode,
                                              std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-kGenericCoefficientBound, kGenericCoefficientBound);
    std::vector<QMatrix> blocks;
    for (int g = 0; g < ring.group_count(); ++g) {
        int n = ring.group(g).count;
        QMatrix block(n);
        do {
            for (int j = 0; j < n; ++j)
                for (int h = 0; h < n; ++h) {
                    if (mode == AutomorphismMode::UpperTriangular && h > j)
                        block.at(j, h) = 0;
                    else
                        block.at(j, h) = Rational(dist(rng));
                }
        } while (block.determinant() == 0);
        blocks.push_back(std::move(block));
    }
    std::vector<Polynomial> psi(ring.variable_count());
    for (int g = 1; g < ring.group_count(); ++g) {
        auto basis = monomials_of_degree_in_prefix(ring, ring.group(g).weight, g);
        if (basis.empty()) continue;
        int off = ring.group_offset(g);
        for (int j = 0; j < ring.group(g).count; ++j)
            for (const auto& m : basis) psi[off + j].add_term(m, Rational(dist(rng)));
    }
    return GradedAutomorphism(ring, std::move(blocks), std::move(psi));
}

inline GradedAutomorphism random_automorphism(const RingDescriptor& ring, AutomorphismMode mode,
                                              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_automorphism(ring, mode, rng);
}

// Elementary generators of T:
//   Diagonal   delta_{ij}^c : X_ij -> c X_ij
//   Triangular tau_{ij}^{rc}: X_ij -> X_ij + c X_ir  (r earlier in the group)
//   Nonlinear  eta_{ij}^m   : X_ij -> X_ij + c m     (m of degree q_i in lighter groups)
struct ElementaryAutomorphism {
    enum class Kind { Diagonal, Triangular, Nonlinear };
    Kind kind;
    int var = 0;     // flat index of the moved variable
    int source = 0;  // Triangular: flat index of the added variable
    Rational coeff;  // scale (Diagonal) or added coefficient
    Monomial term;   // Nonlinear: the added monomial

    GradedAutomorphism to_automorphism(const RingDescriptor& ring) const {
        GradedAutomorphism id = GradedAutomorphism::identity(ring);
        std::vector<Polynomial> images;
        for (int v = 0; v < ring.variable_count(); ++v) images.push_back(id.image(v));
        Polynomial& img = images[var];
        switch (kind) {
            case Kind::Diagonal:
                img = img * coeff;
                break;
            case Kind::Triangular:
                img.add_term(Monomial::unit(ring.variable_count()).times(source, 1), coeff);
                break;
            case Kind::Nonlinear:
                img.add_term(term, coeff);
                break;
        }
        return GradedAutomorphism::from_images(ring, images);
    }
};

// Factors phi in T into elementary automorphisms; composing the returned
// sequence in order (leftmost applied last) reproduces phi. Peels one
// variable at a time from the last: the nonlinear part splits into eta
// factors, the off-diagonal row into tau factors and the diagonal entry
// into a delta.
inline std::vector<ElementaryAutomorphism> decompose_automorphism(const GradedAutomorphism& phi) {
    if (!phi.is_in_T()) throw std::invalid_argument("decompose: automorphism is not in T");
    const RingDescriptor& ring = phi.ring();
    std::vector<ElementaryAutomorphism> out;
    for (int v = ring.variable_count() - 1; v >= 0; --v) {
        int g = ring.group_of(v);
        int off = ring.group_offset(g);
        int j = v - off;
        Rational diag = phi.block(g).at(j, j);
        for (const auto& [m, c] : phi.psi(v).terms()) {
            ElementaryAutomorphism eta;
            eta.kind = ElementaryAutomorphism::Kind::Nonlinear;
            eta.var = v;
            eta.term = m;
            eta.coeff = c / diag;
            out.push_back(std::move(eta));
        }
        for (int r = 0; r < j; ++r) {
            const Rational& c = phi.block(g).at(j, r);
            if (c == 0) continue;
            ElementaryAutomorphism tau;
            tau.kind = ElementaryAutomorphism::Kind::Triangular;
            tau.var = v;
            tau.source = off + r;
            tau.coeff = c / diag;
            out.push_back(std::move(tau));
        }
        if (diag != 1) {
            ElementaryAutomorphism delta;
            delta.kind = ElementaryAutomorphism::Kind::Diagonal;
            delta.var = v;
            delta.coeff = diag;
            out.push_back(std::move(delta));
        }
    }
    return out;
}

inline GradedAutomorphism compose_sequence(const RingDescriptor& ring,
                                           const std::vector<ElementaryAutomorphism>& seq) {
    GradedAutomorphism acc = GradedAutomorphism::identity(ring);
    for (auto it = seq.rbegin(); it != seq.rend(); ++it)
        acc = compose(it->to_automorphism(ring), acc);
    return acc;
}

}  // namespace wpoly
