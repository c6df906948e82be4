#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bistar/coloring.hpp"
#include "bistar/pattern.hpp"

// Monochromatic containment detectors. All of them look only at assigned
// edges, so they run unchanged on partial colorings during search.

namespace bistar {

template <ColoredGraph G>
std::optional<Embedding> contains_star(const G& g, ColorId c, unsigned n) {
    if (n < 1) throw ArgumentError("star needs at least one leaf");
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& nb = g.neighbors(v, c);
        if (nb.size() < n) continue;
        Embedding e{Pattern::star(n), c, {v}};
        nb.for_each([&](Vertex w) {
            if (e.vertices.size() <= n) e.vertices.push_back(w);
        });
        return e;
    }
    return std::nullopt;
}

namespace detail {

/// Tries the c-edge uv as the spine with u taking k-1 leaves and v taking m-1.
/// With a = |N(u)-v|, b = |N(v)-u| and s common neighbors, disjoint leaf sets
/// exist iff a >= k-1, b >= m-1 and a + b - s >= k + m - 2.
template <ColoredGraph G>
std::optional<Embedding> bistar_on_spine(const G& g, ColorId c, unsigned k, unsigned m, Vertex u, Vertex v) {
    const auto& nu = g.neighbors(u, c);
    const auto& nv = g.neighbors(v, c);
    const std::size_t a = nu.size() - 1;
    const std::size_t b = nv.size() - 1;
    const std::size_t s = nu.intersection_size(nv);
    if (a + 1 < k || b + 1 < m || a + b - s + 2 < std::size_t{k} + m) return std::nullopt;

    // Private neighbors first, then shared ones for whichever end still needs leaves.
    auto only_u = nu - nv;
    only_u.erase(v);
    auto only_v = nv - nu;
    only_v.erase(u);
    const auto shared = nu & nv;

    std::vector<Vertex> leaves_u, leaves_v;
    only_u.for_each([&](Vertex w) {
        if (leaves_u.size() + 1 < k) leaves_u.push_back(w);
    });
    only_v.for_each([&](Vertex w) {
        if (leaves_v.size() + 1 < m) leaves_v.push_back(w);
    });
    shared.for_each([&](Vertex w) {
        if (leaves_u.size() + 1 < k) leaves_u.push_back(w);
        else if (leaves_v.size() + 1 < m) leaves_v.push_back(w);
    });
    std::sort(leaves_u.begin(), leaves_u.end());
    std::sort(leaves_v.begin(), leaves_v.end());

    Embedding e{Pattern::bistar(k, m), c, {u, v}};
    e.vertices.insert(e.vertices.end(), leaves_u.begin(), leaves_u.end());
    e.vertices.insert(e.vertices.end(), leaves_v.begin(), leaves_v.end());
    return e;
}

/// Both orientations of the spine uv.
template <ColoredGraph G>
std::optional<Embedding> bistar_on_edge(const G& g, ColorId c, unsigned k, unsigned m, Vertex u, Vertex v) {
    if (auto e = bistar_on_spine(g, c, k, m, u, v)) return e;
    if (k != m) return bistar_on_spine(g, c, k, m, v, u);
    return std::nullopt;
}

/// Greedy sequential coloring of `candidates` in the c-subgraph; returns
/// vertices in color-class order with the 1-based class of each.
template <ColoredGraph G>
void color_classes(const G& g, ColorId c, const VertexSet& candidates, std::vector<Vertex>& order,
                   std::vector<unsigned>& bound) {
    order.clear();
    bound.clear();
    auto uncolored = candidates;
    unsigned cls = 0;
    while (!uncolored.empty()) {
        ++cls;
        auto q = uncolored;
        while (!q.empty()) {
            const Vertex v = q.front();
            q.erase(v);
            q -= g.neighbors(v, c);
            uncolored.erase(v);
            order.push_back(v);
            bound.push_back(cls);
        }
    }
}

template <ColoredGraph G>
bool extend_clique(const G& g, ColorId c, std::vector<Vertex>& current, VertexSet candidates, unsigned need) {
    if (need == 0) return true;
    if (candidates.size() < need) return false;
    std::vector<Vertex> order;
    std::vector<unsigned> bound;
    color_classes(g, c, candidates, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
        if (bound[i] < need) return false;
        const Vertex v = order[i];
        current.push_back(v);
        if (extend_clique(g, c, current, candidates & g.neighbors(v, c), need - 1)) return true;
        current.pop_back();
        candidates.erase(v);
    }
    return false;
}

}  // namespace detail

template <ColoredGraph G>
std::optional<Embedding> contains_bistar(const G& g, ColorId c, unsigned k, unsigned m) {
    const auto p = Pattern::bistar(k, m);
    const auto& b = p.as<Bistar>();
    for (Vertex u = 0; u < g.order(); ++u) {
        std::optional<Embedding> found;
        g.neighbors(u, c).for_each([&](Vertex v) {
            if (!found && u < v) found = detail::bistar_on_edge(g, c, b.k, b.m, u, v);
        });
        if (found) return found;
    }
    return std::nullopt;
}

/// In K_{L,R} a cross edge has no common neighbors, so the feasibility rule
/// reduces to the two degree conditions.
inline std::optional<Embedding> contains_bipartite_bistar(const BipartiteColoring& g, ColorId c, unsigned k,
                                                          unsigned m) {
    return contains_bistar(g, c, k, m);
}

template <ColoredGraph G>
std::optional<Embedding> contains_clique(const G& g, ColorId c, unsigned n) {
    if (n < 2) throw ArgumentError("clique order must be >= 2");
    std::vector<Vertex> current;
    VertexSet all(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (!g.neighbors(v, c).empty()) all.insert(v);
    if (!detail::extend_clique(g, c, current, all, n)) return std::nullopt;
    std::sort(current.begin(), current.end());
    return Embedding{Pattern::clique(n), c, std::move(current)};
}

template <ColoredGraph G>
std::optional<Embedding> contains(const G& g, ColorId c, const Pattern& p) {
    if (p.is<Star>()) return contains_star(g, c, p.as<Star>().leaves);
    if (p.is<Bistar>()) return contains_bistar(g, c, p.as<Bistar>().k, p.as<Bistar>().m);
    return contains_clique(g, c, p.as<Clique>().n);
}

/// Finds a copy of `p` in color c that uses the c-edge uv. Any copy created
/// by coloring uv passes through it, so searching only here is complete.
template <ColoredGraph G>
std::optional<Embedding> contains_through(const G& g, ColorId c, const Pattern& p, Vertex u, Vertex v) {
    if (p.is<Star>()) {
        const auto n = p.as<Star>().leaves;
        for (Vertex x : {u, v}) {
            const auto& nb = g.neighbors(x, c);
            if (nb.size() < n) continue;
            Embedding e{p, c, {x}};
            nb.for_each([&](Vertex w) {
                if (e.vertices.size() <= n) e.vertices.push_back(w);
            });
            return e;
        }
        return std::nullopt;
    }
    if (p.is<Bistar>()) {
        const auto& b = p.as<Bistar>();
        for (Vertex x : {u, v}) {
            std::optional<Embedding> found;
            g.neighbors(x, c).for_each([&](Vertex y) {
                if (!found) found = detail::bistar_on_edge(g, c, b.k, b.m, x, y);
            });
            if (found) return found;
        }
        return std::nullopt;
    }
    const auto n = p.as<Clique>().n;
    std::vector<Vertex> current{u, v};
    auto candidates = g.neighbors(u, c) & g.neighbors(v, c);
    if (!detail::extend_clique(g, c, current, std::move(candidates), n - 2)) return std::nullopt;
    std::sort(current.begin(), current.end());
    return Embedding{p, c, std::move(current)};
}

/// First copy of targets[i] in color i, scanning colors in order. Absence
/// certifies `g` as a witness against the target tuple.
template <ColoredGraph G>
std::optional<Embedding> violates(const G& g, std::span<const Pattern> targets) {
    if (targets.size() != g.colors())
        throw ArgumentError("expected " + std::to_string(g.colors()) + " target patterns, got " +
                            std::to_string(targets.size()));
    for (unsigned c = 0; c < targets.size(); ++c)
        if (auto e = contains(g, ColorId{c}, targets[c])) return e;
    return std::nullopt;
}

template <ColoredGraph G>
std::optional<Embedding> violates(const G& g, const std::vector<Pattern>& targets) {
    return violates(g, std::span<const Pattern>(targets));
}

}  // namespace bistar
