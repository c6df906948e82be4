#pragma once

// Independent reference implementations for tests. Nothing here calls the
// detectors, the search, or the encoder it is used to check.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "bistar/coloring.hpp"
#include "bistar/pattern.hpp"

namespace oracle {

using bistar::ColorId;
using bistar::Vertex;

/// Pattern as an explicit graph on vertices 0..order-1, built from the
/// textbook definitions.
struct SmallGraph {
    std::size_t order = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline SmallGraph star(unsigned n) {
    SmallGraph g{n + 1u, {}};
    for (unsigned i = 1; i <= n; ++i) g.edges.emplace_back(0, i);
    return g;
}

inline SmallGraph bistar(unsigned k, unsigned m) {
    SmallGraph g{k + m, {{0, 1}}};
    std::size_t next = 2;
    for (unsigned i = 0; i + 1 < k; ++i) g.edges.emplace_back(0, next++);
    for (unsigned i = 0; i + 1 < m; ++i) g.edges.emplace_back(1, next++);
    return g;
}

inline SmallGraph clique(unsigned n) {
    SmallGraph g{n, {}};
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    return g;
}

inline SmallGraph from(const bistar::Pattern& p) {
    if (p.is<bistar::Star>()) return star(p.as<bistar::Star>().leaves);
    if (p.is<bistar::Bistar>()) return bistar(p.as<bistar::Bistar>().k, p.as<bistar::Bistar>().m);
    return clique(p.as<bistar::Clique>().n);
}

/// Edge-color lookup for any host: complete or bipartite.
template <class G>
bool has_color(const G& g, Vertex u, Vertex v, ColorId c) {
    if (!g.admissible(u, v)) return false;
    return g.color(u, v) == c;
}

/// Searches injective maps pattern -> host, rejecting a partial map as soon as
/// a pattern edge between two mapped vertices is not a c-edge.
template <class G>
bool embeds(const G& g, ColorId c, const SmallGraph& p) {
    if (p.order > g.order()) return false;
    std::vector<Vertex> map(p.order);
    std::vector<bool> used(g.order(), false);
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
        if (i == p.order) return true;
        for (Vertex h = 0; h < g.order(); ++h) {
            if (used[h]) continue;
            map[i] = h;
            bool ok = true;
            for (auto [a, b] : p.edges) {
                const auto hi = std::max(a, b), lo = std::min(a, b);
                if (hi == i && !has_color(g, map[lo], h, c)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[h] = true;
            if (place(i + 1)) return true;
            used[h] = false;
        }
        return false;
    };
    return place(0);
}

template <class G>
bool embeds(const G& g, ColorId c, const bistar::Pattern& p) {
    return embeds(g, c, from(p));
}

template <class G>
bool avoids_all(const G& g, const std::vector<bistar::Pattern>& targets) {
    for (unsigned c = 0; c < targets.size(); ++c)
        if (embeds(g, ColorId{c}, targets[c])) return false;
    return true;
}

/// Every pattern with at most `max_order` vertices.
inline std::vector<bistar::Pattern> small_patterns(std::size_t max_order) {
    std::vector<bistar::Pattern> out;
    for (unsigned n = 1; n + 1 <= max_order; ++n) out.push_back(bistar::Pattern::star(n));
    for (unsigned k = 1; k < max_order; ++k)
        for (unsigned m = 1; m <= k && k + m <= max_order; ++m) out.push_back(bistar::Pattern::bistar(k, m));
    for (unsigned n = 2; n <= max_order; ++n) out.push_back(bistar::Pattern::clique(n));
    return out;
}

/// Host pairs in lexicographic order, computed directly.
template <class G>
std::vector<std::pair<Vertex, Vertex>> pairs_of(const G& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (g.admissible(u, v)) out.emplace_back(u, v);
    return out;
}

/// Calls f on every complete t-coloring of `empty`'s host, in mixed-radix
/// order (first pair is the least significant digit).
template <class G, class F>
void for_each_coloring(const G& empty, F&& f) {
    const auto pairs = pairs_of(empty);
    const unsigned t = empty.colors();
    std::vector<unsigned> digit(pairs.size(), 0);
    G g = empty;
    for (std::size_t i = 0; i < pairs.size(); ++i) g.assign(pairs[i].first, pairs[i].second, ColorId{0});
    for (;;) {
        f(static_cast<const G&>(g));
        std::size_t i = 0;
        while (i < pairs.size() && digit[i] == t - 1) {
            digit[i] = 0;
            g.assign(pairs[i].first, pairs[i].second, ColorId{0});
            ++i;
        }
        if (i == pairs.size()) return;
        ++digit[i];
        g.assign(pairs[i].first, pairs[i].second, ColorId{digit[i]});
    }
}

/// No-pruning arrowing oracle: true iff no complete coloring avoids all targets.
template <class G>
bool brute_force_arrows(const G& empty, const std::vector<bistar::Pattern>& targets) {
    bool arrows = true;
    for_each_coloring(empty, [&](const G& g) {
        if (arrows && avoids_all(g, targets)) arrows = false;
    });
    return arrows;
}

template <class G>
G random_coloring(G empty, std::mt19937_64& rng, double unassigned_probability = 0.0) {
    std::uniform_int_distribution<unsigned> color(0, empty.colors() - 1);
    std::bernoulli_distribution skip(unassigned_probability);
    for (auto [u, v] : pairs_of(empty))
        if (!skip(rng)) empty.assign(u, v, ColorId{color(rng)});
    return empty;
}

}  // namespace oracle
