#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bistar/errors.hpp"
#include "bistar/vertex_set.hpp"

namespace bistar {

struct ColorId {
    std::uint8_t value = 0;

    constexpr ColorId() = default;
    constexpr explicit ColorId(unsigned v) : value(static_cast<std::uint8_t>(v)) {}
    constexpr unsigned index() const noexcept { return value; }
    friend constexpr auto operator<=>(ColorId, ColorId) = default;
};

inline constexpr ColorId kRed{0};
inline constexpr ColorId kBlue{1};
inline constexpr unsigned kMaxColors = 254;

namespace detail {

inline constexpr std::uint8_t kUnassigned = 0xFF;

/// Per-(vertex, color) neighbor sets, updated as edges are (un)assigned.
class NeighborTable {
public:
    NeighborTable() = default;
    NeighborTable(std::size_t order, unsigned colors)
        : colors_(colors), sets_(order * colors, VertexSet(order)) {}

    const VertexSet& at(Vertex v, unsigned c) const { return sets_[v * colors_ + c]; }
    void link(Vertex u, Vertex v, unsigned c) {
        sets_[u * colors_ + c].insert(v);
        sets_[v * colors_ + c].insert(u);
    }
    void unlink(Vertex u, Vertex v, unsigned c) {
        sets_[u * colors_ + c].erase(v);
        sets_[v * colors_ + c].erase(u);
    }

private:
    unsigned colors_ = 0;
    std::vector<VertexSet> sets_;
};

inline void check_colors(unsigned colors) {
    if (colors < 1 || colors > kMaxColors)
        throw ArgumentError("color count must lie in [1, " + std::to_string(kMaxColors) + "]");
}

}  // namespace detail

/// Edge coloring of the complete graph K_N. Edges may be left unassigned while
/// a search is in progress; unassigned edges belong to no color class.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(std::size_t order, unsigned colors)
        : order_(order), colors_(colors),
          assignment_(order * (order ? order - 1 : 0) / 2, detail::kUnassigned),
          table_(order, colors) {
        detail::check_colors(colors);
    }

    static EdgeColoring monochrome(std::size_t order, unsigned colors, ColorId c) {
        EdgeColoring g(order, colors);
        for (Vertex u = 0; u < order; ++u)
            for (Vertex v = u + 1; v < order; ++v) g.assign(u, v, c);
        return g;
    }

    std::size_t order() const noexcept { return order_; }
    unsigned colors() const noexcept { return colors_; }
    std::size_t edge_count() const noexcept { return assignment_.size(); }
    bool admissible(Vertex u, Vertex v) const noexcept { return u != v && u < order_ && v < order_; }

    /// Index of the pair in lexicographic (min, max) order.
    std::size_t pair_index(Vertex u, Vertex v) const {
        check_pair(u, v);
        if (u > v) std::swap(u, v);
        return static_cast<std::size_t>(u) * (2 * order_ - u - 1) / 2 + (v - u - 1);
    }

    std::optional<ColorId> color(Vertex u, Vertex v) const {
        const auto raw = assignment_[pair_index(u, v)];
        if (raw == detail::kUnassigned) return std::nullopt;
        return ColorId{raw};
    }

    void assign(Vertex u, Vertex v, ColorId c) {
        check_color(c);
        auto& slot = assignment_[pair_index(u, v)];
        if (slot != detail::kUnassigned) table_.unlink(u, v, slot);
        else ++assigned_;
        slot = c.value;
        table_.link(u, v, c.value);
    }

    void unassign(Vertex u, Vertex v) {
        auto& slot = assignment_[pair_index(u, v)];
        if (slot == detail::kUnassigned) return;
        table_.unlink(u, v, slot);
        slot = detail::kUnassigned;
        --assigned_;
    }

    bool complete() const noexcept { return assigned_ == assignment_.size(); }

    const VertexSet& neighbors(Vertex v, ColorId c) const {
        check_vertex(v);
        check_color(c);
        return table_.at(v, c.value);
    }

    void check_vertex(Vertex v) const {
        if (v >= order_) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
    }
    void check_color(ColorId c) const {
        if (c.index() >= colors_) throw ArgumentError("color " + std::to_string(c.index()) + " out of range");
    }

    friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
        return a.order_ == b.order_ && a.colors_ == b.colors_ && a.assignment_ == b.assignment_;
    }

private:
    void check_pair(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw ArgumentError("self-loop " + std::to_string(u));
    }

    std::size_t order_ = 0;
    unsigned colors_ = 0;
    std::size_t assigned_ = 0;
    std::vector<std::uint8_t> assignment_;
    detail::NeighborTable table_;
};

/// Edge coloring of K_{L,R}. Vertices carry global indices: left vertex i is
/// i, right vertex j is L + j. Only cross pairs are edges.
class BipartiteColoring {
public:
    BipartiteColoring() = default;
    BipartiteColoring(std::size_t left, std::size_t right, unsigned colors)
        : left_(left), right_(right), colors_(colors),
          assignment_(left * right, detail::kUnassigned), table_(left + right, colors) {
        detail::check_colors(colors);
    }

    std::size_t left_size() const noexcept { return left_; }
    std::size_t right_size() const noexcept { return right_; }
    std::size_t order() const noexcept { return left_ + right_; }
    unsigned colors() const noexcept { return colors_; }
    std::size_t edge_count() const noexcept { return assignment_.size(); }

    Vertex left(std::size_t i) const {
        if (i >= left_) throw ArgumentError("left vertex " + std::to_string(i) + " out of range");
        return static_cast<Vertex>(i);
    }
    Vertex right(std::size_t j) const {
        if (j >= right_) throw ArgumentError("right vertex " + std::to_string(j) + " out of range");
        return static_cast<Vertex>(left_ + j);
    }
    bool is_left(Vertex v) const noexcept { return v < left_; }
    bool admissible(Vertex u, Vertex v) const noexcept {
        return u < order() && v < order() && is_left(u) != is_left(v);
    }

    /// Index of the cross pair in lexicographic (left, right) order.
    std::size_t pair_index(Vertex u, Vertex v) const {
        if (!admissible(u, v))
            throw ArgumentError("pair (" + std::to_string(u) + ", " + std::to_string(v) + ") is not a cross edge");
        if (u > v) std::swap(u, v);
        return static_cast<std::size_t>(u) * right_ + (v - left_);
    }

    std::optional<ColorId> color(Vertex u, Vertex v) const {
        const auto raw = assignment_[pair_index(u, v)];
        if (raw == detail::kUnassigned) return std::nullopt;
        return ColorId{raw};
    }
    std::optional<ColorId> color_lr(std::size_t i, std::size_t j) const { return color(left(i), right(j)); }

    void assign(Vertex u, Vertex v, ColorId c) {
        check_color(c);
        auto& slot = assignment_[pair_index(u, v)];
        if (slot != detail::kUnassigned) table_.unlink(u, v, slot);
        else ++assigned_;
        slot = c.value;
        table_.link(u, v, c.value);
    }
    void assign_lr(std::size_t i, std::size_t j, ColorId c) { assign(left(i), right(j), c); }

    void unassign(Vertex u, Vertex v) {
        auto& slot = assignment_[pair_index(u, v)];
        if (slot == detail::kUnassigned) return;
        table_.unlink(u, v, slot);
        slot = detail::kUnassigned;
        --assigned_;
    }

    bool complete() const noexcept { return assigned_ == assignment_.size(); }

    const VertexSet& neighbors(Vertex v, ColorId c) const {
        check_vertex(v);
        check_color(c);
        return table_.at(v, c.value);
    }

    void check_vertex(Vertex v) const {
        if (v >= order()) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
    }
    void check_color(ColorId c) const {
        if (c.index() >= colors_) throw ArgumentError("color " + std::to_string(c.index()) + " out of range");
    }

    friend bool operator==(const BipartiteColoring& a, const BipartiteColoring& b) {
        return a.left_ == b.left_ && a.right_ == b.right_ && a.colors_ == b.colors_ &&
               a.assignment_ == b.assignment_;
    }

private:
    std::size_t left_ = 0;
    std::size_t right_ = 0;
    unsigned colors_ = 0;
    std::size_t assigned_ = 0;
    std::vector<std::uint8_t> assignment_;
    detail::NeighborTable table_;
};

/// Anything the detectors and the search can run on.
template <class G>
concept ColoredGraph = requires(const G& g, G& mg, Vertex v, ColorId c) {
    { g.order() } -> std::convertible_to<std::size_t>;
    { g.colors() } -> std::convertible_to<unsigned>;
    { g.edge_count() } -> std::convertible_to<std::size_t>;
    { g.admissible(v, v) } -> std::same_as<bool>;
    { g.neighbors(v, c) } -> std::same_as<const VertexSet&>;
    { g.color(v, v) } -> std::same_as<std::optional<ColorId>>;
    { g.complete() } -> std::same_as<bool>;
    mg.assign(v, v, c);
    mg.unassign(v, v);
};

/// Host edges in lexicographic order: (min, max) for K_N, (left, right) for K_{L,R}.
inline std::vector<std::pair<Vertex, Vertex>> host_edges(const EdgeColoring& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(g.edge_count());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) out.emplace_back(u, v);
    return out;
}
inline std::vector<std::pair<Vertex, Vertex>> host_edges(const BipartiteColoring& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(g.edge_count());
    for (std::size_t i = 0; i < g.left_size(); ++i)
        for (std::size_t j = 0; j < g.right_size(); ++j) out.emplace_back(g.left(i), g.right(j));
    return out;
}

template <ColoredGraph G>
std::size_t degree_in_color(const G& g, Vertex v, ColorId c) {
    return g.neighbors(v, c).size();
}

enum class Extreme { min, max };

/// Minimum or maximum color-c degree over all vertices (0 on the empty graph).
template <ColoredGraph G>
std::size_t extreme_degree(const G& g, ColorId c, Extreme which) {
    if (c.index() >= g.colors()) throw ArgumentError("color out of range");
    if (g.order() == 0) return 0;
    std::size_t best = degree_in_color(g, 0, c);
    for (Vertex v = 1; v < g.order(); ++v) {
        const auto d = degree_in_color(g, v, c);
        best = which == Extreme::min ? std::min(best, d) : std::max(best, d);
    }
    return best;
}

template <ColoredGraph G>
VertexSet common_neighbors_in_color(const G& g, Vertex u, Vertex v, ColorId c) {
    if (u == v) throw ArgumentError("common neighbors need two distinct vertices");
    auto out = g.neighbors(u, c) & g.neighbors(v, c);
    out.erase(u);
    out.erase(v);
    return out;
}

}  // namespace bistar

namespace bistar {

using AnyColoring = std::variant<EdgeColoring, BipartiteColoring>;

}  // namespace bistar
