#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bistar/coloring.hpp"
#include "bistar/errors.hpp"

namespace bistar {

namespace detail {
template <class... Fs>
struct Overload : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;
}  // namespace detail

/// S_n: a center joined to n leaves.
struct Star {
    unsigned leaves = 1;
    friend bool operator==(const Star&, const Star&) = default;
};

/// B_{k,m}: adjacent centers of degree k and m (the spine), plus k+m-2 leaves.
/// Stored with k >= m.
struct Bistar {
    unsigned k = 1;
    unsigned m = 1;
    friend bool operator==(const Bistar&, const Bistar&) = default;
};

/// K_n.
struct Clique {
    unsigned n = 2;
    friend bool operator==(const Clique&, const Clique&) = default;
};

class Pattern {
public:
    using Shape = std::variant<Star, Bistar, Clique>;

    static Pattern star(unsigned n) {
        if (n < 1) throw ArgumentError("star needs at least one leaf");
        return Pattern(Star{n});
    }
    static Pattern bistar(unsigned k, unsigned m) {
        if (k < 1 || m < 1) throw ArgumentError("bistar center degrees must be >= 1");
        return Pattern(Bistar{std::max(k, m), std::min(k, m)});
    }
    static Pattern clique(unsigned n) {
        if (n < 2) throw ArgumentError("clique order must be >= 2");
        return Pattern(Clique{n});
    }

    const Shape& shape() const noexcept { return shape_; }
    template <class T>
    bool is() const noexcept { return std::holds_alternative<T>(shape_); }
    template <class T>
    const T& as() const { return std::get<T>(shape_); }

    std::size_t order() const {
        return std::visit(detail::Overload{[](const Star& s) -> std::size_t { return s.leaves + 1; },
                                   [](const Bistar& b) -> std::size_t { return b.k + b.m; },
                                   [](const Clique& q) -> std::size_t { return q.n; }},
                          shape_);
    }
    std::size_t edge_count() const {
        return std::visit(detail::Overload{[](const Star& s) -> std::size_t { return s.leaves; },
                                   [](const Bistar& b) -> std::size_t { return b.k + b.m - 1; },
                                   [](const Clique& q) -> std::size_t { return q.n * (q.n - 1) / 2; }},
                          shape_);
    }

    /// Inverse of parse_pattern.
    std::string to_string() const {
        return std::visit(detail::Overload{[](const Star& s) { return "star:" + std::to_string(s.leaves); },
                                   [](const Bistar& b) {
                                       return "bistar:" + std::to_string(b.k) + "," + std::to_string(b.m);
                                   },
                                   [](const Clique& q) { return "clique:" + std::to_string(q.n); }},
                          shape_);
    }

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    template <class T>
    explicit Pattern(T s) : shape_(std::in_place_type<T>, s) {}
    Shape shape_;
};

/// Reads "star:n", "bistar:k,m" or "clique:n". Error messages carry the
/// 1-based column of the first offending character.
inline Pattern parse_pattern(std::string_view text) {
    auto fail = [&](std::size_t col, const std::string& what) -> ParseError {
        return ParseError("pattern '" + std::string(text) + "' col " + std::to_string(col + 1) + ": " + what);
    };
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw fail(text.size(), "expected ':' after pattern kind");
    const auto kind = text.substr(0, colon);

    std::size_t pos = colon + 1;
    auto number = [&]() -> unsigned {
        unsigned value = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first) throw fail(pos, "expected a non-negative integer");
        pos += static_cast<std::size_t>(ptr - first);
        return value;
    };
    auto finish = [&]() {
        if (pos != text.size()) throw fail(pos, "unexpected trailing characters");
    };

    unsigned a = 0, b = 0;
    if (kind == "star" || kind == "clique") {
        a = number();
    } else if (kind == "bistar") {
        a = number();
        if (pos >= text.size() || text[pos] != ',') throw fail(pos, "expected ','");
        ++pos;
        b = number();
    } else {
        throw fail(0, "unknown pattern kind '" + std::string(kind) + "'");
    }
    finish();
    try {
        return kind == "star" ? Pattern::star(a) : kind == "clique" ? Pattern::clique(a) : Pattern::bistar(a, b);
    } catch (const ArgumentError& e) {
        throw fail(colon + 1, e.what());
    }
}

/// A monochromatic copy of a pattern. Role order of `vertices`:
///   star:   center, then leaves ascending;
///   bistar: spine end of degree k, spine end of degree m, the k-1 leaves of
///           the first end, then the m-1 leaves of the second (each ascending);
///   clique: vertices ascending.
struct Embedding {
    Pattern pattern = Pattern::star(1);
    ColorId color;
    std::vector<Vertex> vertices;

    /// Host edges covered by the copy. For a bistar the spine comes first.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        const auto& vs = vertices;
        if (pattern.is<Star>()) {
            for (std::size_t i = 1; i < vs.size(); ++i) out.emplace_back(vs[0], vs[i]);
        } else if (pattern.is<Bistar>()) {
            const auto& b = pattern.as<Bistar>();
            out.emplace_back(vs[0], vs[1]);
            for (std::size_t i = 0; i + 1 < b.k; ++i) out.emplace_back(vs[0], vs[2 + i]);
            for (std::size_t i = 0; i + 1 < b.m; ++i) out.emplace_back(vs[1], vs[1 + b.k + i]);
        } else {
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j) out.emplace_back(vs[i], vs[j]);
        }
        return out;
    }

    std::string to_string() const {
        std::string s = pattern.to_string() + " color " + std::to_string(color.index()) + " at";
        for (auto v : vertices) s += " " + std::to_string(v);
        return s;
    }

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Re-checks an embedding: right vertex count, injective, every pattern edge a
/// host edge of the stated color.
template <ColoredGraph G>
bool verify_embedding(const G& g, const Embedding& e) {
    if (e.vertices.size() != e.pattern.order()) return false;
    auto sorted = e.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (!sorted.empty() && sorted.back() >= g.order()) return false;
    for (auto [u, v] : e.edges()) {
        if (!g.admissible(u, v)) return false;
        if (g.color(u, v) != e.color) return false;
    }
    return true;
}

}  // namespace bistar
