#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bistar/coloring.hpp"
#include "bistar/detect.hpp"
#include "bistar/errors.hpp"
#include "bistar/pattern.hpp"

// Witness text format (LF line endings):
//
//   # bistar-witness 1
//   # host complete <N>          | # host bipartite <L> <R>
//   # colors <t>
//   # targets <pattern>...      (may be empty)
//   # provenance <tag>
//   <u> <v> <c>                  one line per host edge, lexicographic order
//
// Bipartite edge lines use side-local indices: "<left i> <right j> <c>".

namespace bistar {

struct WitnessFile {
    AnyColoring coloring;
    std::vector<Pattern> targets;
    std::string provenance = "none";
};

inline std::size_t colors_of(const AnyColoring& g) {
    return std::visit([](const auto& c) -> std::size_t { return c.colors(); }, g);
}

inline std::optional<Embedding> violates(const AnyColoring& g, const std::vector<Pattern>& targets) {
    return std::visit([&](const auto& c) { return violates(c, targets); }, g);
}

inline std::string write_witness(const WitnessFile& w) {
    std::ostringstream out;
    out << "# bistar-witness 1\n";
    std::visit(
        [&](const auto& g) {
            using G = std::decay_t<decltype(g)>;
            if (!g.complete()) throw ArgumentError("only complete colorings can be written as witnesses");
            if constexpr (std::is_same_v<G, EdgeColoring>) out << "# host complete " << g.order() << "\n";
            else out << "# host bipartite " << g.left_size() << " " << g.right_size() << "\n";
            out << "# colors " << g.colors() << "\n";
            out << "# targets";
            for (const auto& p : w.targets) out << " " << p.to_string();
            out << "\n# provenance " << (w.provenance.empty() ? "none" : w.provenance) << "\n";
            for (auto [u, v] : host_edges(g)) {
                if constexpr (std::is_same_v<G, EdgeColoring>) out << u << " " << v;
                else out << u << " " << (v - g.left_size());
                out << " " << g.color(u, v)->index() << "\n";
            }
        },
        w.coloring);
    return out.str();
}

inline WitnessFile read_witness(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& what) { return ParseError("witness line " + std::to_string(lineno) + ": " + what); };

    std::optional<AnyColoring> g;
    std::string host_kind;
    std::size_t a = 0, b = 0;
    std::optional<unsigned> colors;
    std::vector<Pattern> targets;
    std::string provenance = "none";
    bool magic = false;
    std::size_t edges_read = 0;

    auto build = [&]() {
        if (g) return;
        if (host_kind.empty() || !colors) throw fail("edge line before host and colors header");
        if (*colors < 1 || *colors > kMaxColors) throw fail("color count out of range");
        if (host_kind == "complete") g = EdgeColoring(a, *colors);
        else g = BipartiteColoring(a, b, *colors);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) throw fail("empty line");
        std::istringstream ls(line);
        if (line[0] == '#') {
            if (g) throw fail("header line after edge lines");
            std::string hash, key;
            ls >> hash >> key;
            if (hash != "#") throw fail("header lines start with '# '");
            if (key == "bistar-witness") {
                int version = 0;
                if (!(ls >> version) || version != 1) throw fail("unsupported witness version");
                magic = true;
            } else if (key == "host") {
                ls >> host_kind;
                if (host_kind == "complete") {
                    if (!(ls >> a)) throw fail("host order missing");
                } else if (host_kind == "bipartite") {
                    if (!(ls >> a >> b)) throw fail("bipartite host needs two side sizes");
                } else {
                    throw fail("unknown host kind '" + host_kind + "'");
                }
            } else if (key == "colors") {
                unsigned t = 0;
                if (!(ls >> t)) throw fail("color count missing");
                colors = t;
            } else if (key == "targets") {
                std::string tok;
                while (ls >> tok) targets.push_back(parse_pattern(tok));
            } else if (key == "provenance") {
                if (!(ls >> provenance)) throw fail("provenance tag missing");
            } else {
                throw fail("unknown header key '" + key + "'");
            }
            continue;
        }
        if (!magic) throw fail("missing '# bistar-witness 1' header");
        build();
        long long u = -1, v = -1, c = -1;
        std::string extra;
        if (!(ls >> u >> v >> c) || (ls >> extra)) throw fail("expected '<u> <v> <color>'");
        if (u < 0 || v < 0 || c < 0 || c >= static_cast<long long>(*colors)) throw fail("value out of range");
        try {
            std::visit(
                [&](auto& col) {
                    using G = std::decay_t<decltype(col)>;
                    Vertex x = static_cast<Vertex>(u), y = static_cast<Vertex>(v);
                    if constexpr (std::is_same_v<G, BipartiteColoring>) {
                        x = col.left(static_cast<std::size_t>(u));
                        y = col.right(static_cast<std::size_t>(v));
                    }
                    if (col.color(x, y)) throw fail("edge listed twice");
                    col.assign(x, y, ColorId{static_cast<unsigned>(c)});
                },
                *g);
        } catch (const ArgumentError& e) {
            throw fail(e.what());
        }
        ++edges_read;
    }
    if (!magic) throw ParseError("witness: missing '# bistar-witness 1' header");
    build();
    const bool complete = std::visit([](const auto& col) { return col.complete(); }, *g);
    if (!complete) throw ParseError("witness: edge list is incomplete (" + std::to_string(edges_read) + " edges read)");
    if (!targets.empty() && targets.size() != *colors)
        throw ParseError("witness: " + std::to_string(targets.size()) + " targets for " + std::to_string(*colors) +
                         " colors");
    return {std::move(*g), std::move(targets), std::move(provenance)};
}

namespace detail {
inline std::pair<Vertex, Vertex> ordered(Vertex u, Vertex v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }
}  // namespace detail

struct DotOptions {
    std::optional<Embedding> overlay;  ///< drawn bold; a bistar spine is drawn double
};

/// Graphviz text. Each color gets its own class ("color<i>"); overlay edges
/// get penwidth 3 and the spine a double line.
inline std::string export_dot(const AnyColoring& coloring, const DotOptions& opts = {}) {
    static constexpr const char* palette[] = {"red", "blue", "green4", "orange", "purple", "brown", "cyan4", "gray40"};
    std::set<std::pair<Vertex, Vertex>> bold;
    std::optional<std::pair<Vertex, Vertex>> spine;
    if (opts.overlay) {
        const auto es = opts.overlay->edges();
        for (auto [u, v] : es) bold.insert(detail::ordered(u, v));
        if (opts.overlay->pattern.is<Bistar>() && !es.empty()) spine = detail::ordered(es[0].first, es[0].second);
    }
    std::ostringstream out;
    std::visit(
        [&](const auto& g) {
            using G = std::decay_t<decltype(g)>;
            auto name = [&](Vertex v) -> std::string {
                if constexpr (std::is_same_v<G, BipartiteColoring>)
                    return g.is_left(v) ? "v" + std::to_string(v) : "w" + std::to_string(v - g.left_size());
                else return std::to_string(v);
            };
            out << "graph witness {\n";
            out << "  node [shape=circle];\n";
            for (Vertex v = 0; v < g.order(); ++v) out << "  " << name(v) << ";\n";
            for (auto [u, v] : host_edges(g)) {
                const auto c = g.color(u, v);
                if (!c) continue;
                const std::string col = palette[c->index() % std::size(palette)];
                const auto key = detail::ordered(u, v);
                out << "  " << name(u) << " -- " << name(v) << " [class=\"color" << c->index();
                if (spine && *spine == key) out << " spine\", color=\"" << col << ":invis:" << col << "\", penwidth=3";
                else if (bold.count(key)) out << "\", color=\"" << col << "\", penwidth=3";
                else out << "\", color=\"" << col << "\"";
                out << "];\n";
            }
            out << "}\n";
        },
        coloring);
    return out.str();
}

}  // namespace bistar
