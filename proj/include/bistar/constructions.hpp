#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bistar/coloring.hpp"
#include "bistar/detect.hpp"
#include "bistar/errors.hpp"
#include "bistar/pattern.hpp"

// Lower-bound witness generators. Outputs are candidates; star_bistar_witness
// re-checks its own result, the rest are checked by callers (the CLI does so
// before writing anything).

namespace bistar {

/// Raised when a generated coloring contains one of its advertised targets.
class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& what, Embedding offending)
        : std::runtime_error(what + ": " + offending.to_string()), embedding_(std::move(offending)) {}
    const Embedding& embedding() const noexcept { return embedding_; }

private:
    Embedding embedding_;
};

/// Precondition violation that selects the wrong parity branch.
class WrongCaseError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

/// Subset of Z_N \ {0} defining a cyclic coloring.
class ResidueSet {
public:
    ResidueSet(std::size_t modulus, const std::vector<long long>& members) : modulus_(modulus) {
        if (modulus < 1) throw ArgumentError("residue modulus must be positive");
        std::set<std::size_t> reduced;
        const auto n = static_cast<long long>(modulus);
        for (auto x : members) {
            const auto r = static_cast<std::size_t>(((x % n) + n) % n);
            if (r == 0) throw ArgumentError("residue set may not contain 0 mod " + std::to_string(modulus));
            reduced.insert(r);
        }
        members_.assign(reduced.begin(), reduced.end());
    }

    std::size_t modulus() const noexcept { return modulus_; }
    const std::vector<std::size_t>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(std::size_t r) const {
        return std::binary_search(members_.begin(), members_.end(), r % modulus_);
    }

    /// R = -R.
    bool symmetric() const {
        return std::all_of(members_.begin(), members_.end(),
                           [&](std::size_t r) { return contains(modulus_ - r); });
    }

    /// R subset of R + R (sums of any two members, repetition allowed).
    bool closed() const {
        std::vector<bool> sums(modulus_, false);
        for (auto a : members_)
            for (auto b : members_) sums[(a + b) % modulus_] = true;
        return std::all_of(members_.begin(), members_.end(), [&](std::size_t r) { return sums[r]; });
    }

    ResidueSet symmetric_closure() const {
        std::vector<long long> all;
        for (auto r : members_) {
            all.push_back(static_cast<long long>(r));
            all.push_back(static_cast<long long>(modulus_ - r));
        }
        return ResidueSet(modulus_, all);
    }

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

private:
    std::size_t modulus_;
    std::vector<std::size_t> members_;
};

inline bool check_residue_closure(const ResidueSet& reds) { return reds.closed(); }

enum class Symmetrize { no, yes };

/// Red iff (u - v) mod N lies in `reds`, blue otherwise.
inline EdgeColoring cyclic_coloring(std::size_t order, const ResidueSet& reds, Symmetrize sym = Symmetrize::no) {
    if (order < 2) throw ArgumentError("cyclic coloring needs N >= 2");
    if (reds.modulus() != order)
        throw ArgumentError("residue modulus " + std::to_string(reds.modulus()) + " differs from order " +
                            std::to_string(order));
    const ResidueSet r = sym == Symmetrize::yes ? reds.symmetric_closure() : reds;
    if (!r.symmetric()) throw ArgumentError("residue set is not symmetric (R != -R)");
    EdgeColoring g(order, 2);
    for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v) g.assign(u, v, r.contains(v - u) ? kRed : kBlue);
    return g;
}

/// Red subgraph is a 5-cycle, blue its complement (also a 5-cycle).
inline EdgeColoring c5c5_coloring() { return cyclic_coloring(5, ResidueSet(5, {1, 4})); }

/// Residue set for k + m even on Z_N, N = (k+m)/2 + n:
///   (k+m)/2 even: R' = {2} u {2l+1 : 1 <= l <= (k+m-4)/4},  R = R' u -R'
///   (k+m)/2 odd:  R' = {2} u {2l+1 : 1 <= l <= (k+m-6)/4},  R = R' u {(k+m)/2} u -R'
/// Returned exactly as defined; symmetric() and closed() report whether it
/// meets what the cyclic construction needs.
inline ResidueSet residues_even_case(unsigned k, unsigned m, unsigned n) {
    if (k < 4 || m < 4) throw ArgumentError("residue construction needs k, m >= 4");
    if ((k + m) % 2 != 0) throw WrongCaseError("k + m must be even for the residue construction");
    if (n < 1) throw ArgumentError("n must be >= 1");
    const unsigned half = (k + m) / 2;
    const std::size_t order = half + n;
    std::vector<long long> members{2};
    const unsigned odd_terms = half % 2 == 0 ? (k + m - 4) / 4 : (k + m - 6) / 4;
    for (unsigned l = 1; l <= odd_terms; ++l) members.push_back(2 * l + 1);
    const std::size_t base = members.size();
    for (std::size_t i = 0; i < base; ++i) members.push_back(-members[i]);
    if (half % 2 == 1) members.push_back(half);
    return ResidueSet(order, members);
}

/// Blue is the (n-1)-regular circulant on Z_N with connection set
/// {+-1, ..., +-floor((n-1)/2)}, plus N/2 when n-1 is odd; red is the rest.
inline EdgeColoring regular_blue_witness(unsigned k, unsigned m, unsigned n) {
    if (k < 4 || m < 4) throw ArgumentError("regular witness needs k, m >= 4");
    if ((k + m) % 2 == 0) throw WrongCaseError("k + m must be odd for the regular witness");
    if (n < 1) throw ArgumentError("n must be >= 1");
    const std::size_t order = (k + m) / 2 + n;
    const std::size_t degree = n - 1;
    if (order * degree % 2 != 0)
        throw InfeasibleError("no " + std::to_string(degree) + "-regular graph exists on " + std::to_string(order) +
                              " vertices");
    std::vector<long long> blue;
    for (std::size_t d = 1; d <= degree / 2; ++d) {
        blue.push_back(static_cast<long long>(d));
        blue.push_back(-static_cast<long long>(d));
    }
    if (degree % 2 == 1) blue.push_back(static_cast<long long>(order / 2));
    const ResidueSet blues(order, blue);
    EdgeColoring g(order, 2);
    for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v) g.assign(u, v, blues.contains(v - u) ? kBlue : kRed);
    return g;
}

/// Provenance tag of the branch star_bistar_witness takes for (k, m).
inline std::string star_bistar_case(unsigned k, unsigned m) {
    if ((k + m) % 2 == 1) return "Thm3-odd";
    return ((k + m) / 2) % 2 == 0 ? "Thm3-case-i" : "Thm3-case-ii";
}

/// Witness on K_N, N = floor((k+m)/2) + n, with no red B_{k,m} and no blue S_n.
/// Throws ConstructionError if the generated coloring fails that check.
inline EdgeColoring star_bistar_witness(unsigned k, unsigned m, unsigned n) {
    if (k < 4 || m < 4) throw ArgumentError("star-bistar witness needs k, m >= 4");
    EdgeColoring g = (k + m) % 2 == 1 ? regular_blue_witness(k, m, n)
                                      : cyclic_coloring((k + m) / 2 + n, residues_even_case(k, m, n),
                                                        Symmetrize::yes);
    const std::vector<Pattern> targets{Pattern::bistar(k, m), Pattern::star(n)};
    if (auto e = violates(g, targets))
        throw ConstructionError("star-bistar witness (" + std::to_string(k) + "," + std::to_string(m) + "," +
                                    std::to_string(n) + ") failed verification",
                                *e);
    return g;
}

/// n-1 red blocks of order k+m-1; every edge between blocks is blue.
inline EdgeColoring turan_blowup_witness(unsigned k, unsigned m, unsigned n) {
    if (k < 1 || m < 1) throw ArgumentError("k, m must be >= 1");
    if (n < 2) throw ArgumentError("n must be >= 2");
    const std::size_t block = k + m - 1;
    const std::size_t order = block * (n - 1);
    EdgeColoring g(order, 2);
    for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v) g.assign(u, v, u / block == v / block ? kRed : kBlue);
    return g;
}

/// Two red cliques of order k+m-1 joined by blue edges.
inline EdgeColoring two_cliques_witness(unsigned k, unsigned m) { return turan_blowup_witness(k, m, 3); }

/// Blows every vertex of `outer` up into a copy of `inner`. Intra-block edges
/// keep inner's colors 0..a-1; edges between blocks take the color of the
/// outer edge shifted to a..a+b-1 (a = inner.colors(), b = outer.colors()).
inline EdgeColoring product_construction(const EdgeColoring& outer, const EdgeColoring& inner) {
    if (!outer.complete() || !inner.complete()) throw ArgumentError("product needs complete colorings");
    const std::size_t block = inner.order();
    const std::size_t order = block * outer.order();
    const unsigned shift = inner.colors();
    EdgeColoring g(order, inner.colors() + outer.colors());
    for (Vertex u = 0; u < order; ++u) {
        for (Vertex v = u + 1; v < order; ++v) {
            const Vertex bu = u / block, bv = v / block;
            const ColorId c = bu == bv ? *inner.color(u % block, v % block)
                                       : ColorId{outer.color(bu, bv)->index() + shift};
            g.assign(u, v, c);
        }
    }
    return g;
}

/// K_{N,N}, N = k+n-2: v_i w_j red iff (i - j) mod N is in {0, ..., k-2}.
inline BipartiteColoring bipartite_interval_witness(unsigned k, unsigned n) {
    if (k < 2 || n < 2) throw ArgumentError("interval witness needs k, n >= 2");
    const std::size_t order = k + n - 2;
    BipartiteColoring g(order, order, 2);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j)
            g.assign_lr(i, j, (i + order - j) % order <= k - 2 ? kRed : kBlue);
    return g;
}

/// K_{N,N}, N = k(m-1), in k colors: v_i w_j gets color (i - j) mod k.
inline BipartiteColoring bipartite_kcolor_witness(unsigned colors, unsigned m) {
    if (colors < 2) throw ArgumentError("k-color witness needs k >= 2");
    if (m < 3) throw ArgumentError("k-color witness needs m >= 3");
    const std::size_t order = colors * (m - 1);
    BipartiteColoring g(order, order, colors);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j)
            g.assign_lr(i, j, ColorId{static_cast<unsigned>((i + order - j) % colors)});
    return g;
}

}  // namespace bistar
