#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unistd.h>
#include <vector>

#include "bistar/coloring.hpp"
#include "bistar/detect.hpp"
#include "bistar/errors.hpp"
#include "bistar/pattern.hpp"
#include "bistar/search.hpp"

// CNF compilation of arrowing instances, DIMACS text, and decoding of
// SAT-competition style solver transcripts. A formula is satisfiable iff the
// instance has a counterexample coloring.

namespace bistar {

/// Variable i+1 is true iff edge (u, v) carries `color`. With two colors a
/// single variable per edge is used and false means color 1.
struct VarInfo {
    Vertex u = 0;
    Vertex v = 0;
    ColorId color;
    friend bool operator==(const VarInfo&, const VarInfo&) = default;
};

struct CnfFormula {
    std::size_t num_vars = 0;
    std::vector<std::vector<int>> clauses;
    std::vector<VarInfo> var_map;           ///< empty for hand-built formulas
    std::optional<ArrowInstance> instance;  ///< set by encode_arrow
};

namespace detail {

template <class F>
void for_each_combination(const std::vector<Vertex>& pool, std::size_t r, F&& f) {
    if (r > pool.size()) return;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    std::vector<Vertex> pick(r);
    for (;;) {
        for (std::size_t i = 0; i < r; ++i) pick[i] = pool[idx[i]];
        f(pick);
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == pool.size() - r + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

template <ColoredGraph G>
class Encoder {
public:
    Encoder(const G& host, const ArrowInstance& inst) : host_(host), inst_(inst), t_(inst.colors()) {}

    CnfFormula run() {
        CnfFormula f;
        f.instance = inst_;
        edges_ = host_edges(host_);
        f.num_vars = t_ == 2 ? edges_.size() : edges_.size() * t_;
        for (const auto& [u, v] : edges_) {
            if (t_ == 2) {
                f.var_map.push_back({u, v, ColorId{0}});
            } else {
                for (unsigned c = 0; c < t_; ++c) f.var_map.push_back({u, v, ColorId{c}});
            }
        }
        if (t_ > 2) {
            for (std::size_t e = 0; e < edges_.size(); ++e) {
                std::vector<int> alo;
                for (unsigned c = 0; c < t_; ++c) alo.push_back(var(e, c));
                add(f, alo);
                for (unsigned a = 0; a < t_; ++a)
                    for (unsigned b = a + 1; b < t_; ++b) add(f, {-var(e, a), -var(e, b)});
            }
        }
        for (unsigned c = 0; c < t_; ++c) forbid(f, inst_.targets[c], ColorId{c});
        return f;
    }

private:
    int var(std::size_t edge, unsigned c) const { return static_cast<int>(edge * t_ + c + 1); }

    /// Literal asserting "edge uv has color c".
    int has_color(Vertex u, Vertex v, ColorId c) const {
        const auto e = host_.pair_index(u, v);
        if (t_ == 2) return c.index() == 0 ? static_cast<int>(e + 1) : -static_cast<int>(e + 1);
        return var(e, c.index());
    }

    void add(CnfFormula& f, std::vector<int> clause) {
        std::sort(clause.begin(), clause.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
        if (seen_.insert(clause).second) f.clauses.push_back(std::move(clause));
    }

    void forbid_edges(CnfFormula& f, const std::vector<std::pair<Vertex, Vertex>>& es, ColorId c) {
        std::vector<int> clause;
        clause.reserve(es.size());
        for (auto [a, b] : es) clause.push_back(-has_color(a, b, c));
        add(f, std::move(clause));
    }

    std::vector<Vertex> host_neighbors(Vertex x) const {
        std::vector<Vertex> out;
        for (Vertex y = 0; y < host_.order(); ++y)
            if (host_.admissible(x, y)) out.push_back(y);
        return out;
    }

    void forbid(CnfFormula& f, const Pattern& p, ColorId c) {
        std::vector<std::pair<Vertex, Vertex>> es;
        if (p.is<Star>()) {
            const auto n = p.as<Star>().leaves;
            for (Vertex x = 0; x < host_.order(); ++x) {
                for_each_combination(host_neighbors(x), n, [&](const std::vector<Vertex>& leaves) {
                    es.clear();
                    for (auto y : leaves) es.emplace_back(x, y);
                    forbid_edges(f, es, c);
                });
            }
        } else if (p.is<Bistar>()) {
            const auto& b = p.as<Bistar>();
            for (const auto& [u, v] : edges_) {
                spine(f, c, u, v, b.k, b.m, es);
                if (b.k != b.m) spine(f, c, u, v, b.m, b.k, es);
            }
        } else {
            const auto n = p.as<Clique>().n;
            std::vector<Vertex> all(host_.order());
            for (Vertex x = 0; x < host_.order(); ++x) all[x] = x;
            for_each_combination(all, n, [&](const std::vector<Vertex>& vs) {
                es.clear();
                for (std::size_t i = 0; i < vs.size(); ++i)
                    for (std::size_t j = i + 1; j < vs.size(); ++j) {
                        if (!host_.admissible(vs[i], vs[j])) return;
                        es.emplace_back(vs[i], vs[j]);
                    }
                forbid_edges(f, es, c);
            });
        }
    }

    /// Spine uv, u taking p-1 leaves and v taking q-1 leaves, disjoint.
    void spine(CnfFormula& f, ColorId c, Vertex u, Vertex v, unsigned p, unsigned q,
               std::vector<std::pair<Vertex, Vertex>>& es) {
        auto pool_u = host_neighbors(u);
        std::erase(pool_u, v);
        for_each_combination(pool_u, p - 1, [&](const std::vector<Vertex>& a) {
            auto pool_v = host_neighbors(v);
            std::erase(pool_v, u);
            std::erase_if(pool_v, [&](Vertex x) { return std::find(a.begin(), a.end(), x) != a.end(); });
            for_each_combination(pool_v, q - 1, [&](const std::vector<Vertex>& b) {
                es.clear();
                es.emplace_back(u, v);
                for (auto x : a) es.emplace_back(u, x);
                for (auto y : b) es.emplace_back(v, y);
                forbid_edges(f, es, c);
            });
        });
    }

    const G& host_;
    const ArrowInstance& inst_;
    unsigned t_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::set<std::vector<int>> seen_;
};

}  // namespace detail

/// Variables: one per edge for two colors (true = color 0), otherwise one per
/// (edge, color) with exactly-one clauses (pairwise at-most-one). For every
/// placement of targets[c] in the host there is one clause saying "not all of
/// these edges have color c". Duplicate clauses are dropped and the literals of
/// each clause are sorted by variable.
inline CnfFormula encode_arrow(const ArrowInstance& inst) {
    detail::check_instance(inst);
    if (inst.host == ArrowInstance::Host::complete) {
        const EdgeColoring host(inst.order, inst.colors());
        return detail::Encoder<EdgeColoring>(host, inst).run();
    }
    const BipartiteColoring host(inst.order, inst.order, inst.colors());
    return detail::Encoder<BipartiteColoring>(host, inst).run();
}

namespace detail {

inline std::string host_line(const ArrowInstance& inst) {
    return inst.host == ArrowInstance::Host::complete ? "complete " + std::to_string(inst.order)
                                                      : "bipartite " + std::to_string(inst.order) + " " +
                                                            std::to_string(inst.order);
}

inline std::string targets_line(const std::vector<Pattern>& targets) {
    std::string s;
    for (const auto& p : targets) s += (s.empty() ? "" : " ") + p.to_string();
    return s;
}

}  // namespace detail

/// DIMACS CNF. Encoded formulas carry comment lines, before the problem line,
/// recording the host, the targets and the variable map:
///   c host complete 5
///   c targets clique:3 clique:3
///   c var <index> <u> <v> <color>
inline std::string write_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    if (f.instance) {
        out << "c host " << detail::host_line(*f.instance) << "\n";
        out << "c targets " << detail::targets_line(f.instance->targets) << "\n";
    }
    for (std::size_t i = 0; i < f.var_map.size(); ++i) {
        const auto& m = f.var_map[i];
        out << "c var " << i + 1 << " " << m.u << " " << m.v << " " << m.color.index() << "\n";
    }
    out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out << lit << " ";
        out << "0\n";
    }
    return out.str();
}

/// Reads DIMACS text, recovering the host and variable map from write_dimacs
/// comments when present.
inline CnfFormula read_dimacs(std::string_view text) {
    CnfFormula f;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t declared_clauses = 0;
    std::optional<ArrowInstance::Host> host;
    std::size_t order = 0;
    std::vector<Pattern> targets;
    std::vector<int> current;
    auto fail = [&](const std::string& what) { return ParseError("dimacs line " + std::to_string(lineno) + ": " + what); };

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (line[0] == 'c') {
            std::string c, key;
            ls >> c >> key;
            if (key == "host") {
                std::string kind;
                ls >> kind >> order;
                if (kind == "complete") host = ArrowInstance::Host::complete;
                else if (kind == "bipartite") host = ArrowInstance::Host::bipartite;
                else throw fail("unknown host kind '" + kind + "'");
            } else if (key == "targets") {
                std::string tok;
                while (ls >> tok) targets.push_back(parse_pattern(tok));
            } else if (key == "var") {
                std::size_t idx = 0;
                unsigned u = 0, v = 0, col = 0;
                if (!(ls >> idx >> u >> v >> col) || idx != f.var_map.size() + 1) throw fail("bad variable map entry");
                f.var_map.push_back({u, v, ColorId{col}});
            }
            continue;
        }
        if (line[0] == 'p') {
            std::string p, cnf;
            if (have_header || !(ls >> p >> cnf >> f.num_vars >> declared_clauses) || cnf != "cnf")
                throw fail("bad problem line");
            have_header = true;
            continue;
        }
        if (!have_header) throw fail("clause before problem line");
        int lit = 0;
        while (ls >> lit) {
            if (lit == 0) {
                f.clauses.push_back(std::move(current));
                current.clear();
            } else {
                if (static_cast<std::size_t>(std::abs(lit)) > f.num_vars) throw fail("literal out of range");
                current.push_back(lit);
            }
        }
        if (!ls.eof()) throw fail("unexpected token");
    }
    if (!have_header) throw ParseError("dimacs: missing problem line");
    if (!current.empty()) throw ParseError("dimacs: last clause not terminated by 0");
    if (f.clauses.size() != declared_clauses) throw ParseError("dimacs: clause count differs from problem line");
    if (host) {
        f.instance = ArrowInstance{*host, order, std::move(targets)};
        if (f.var_map.size() != f.num_vars) throw ParseError("dimacs: variable map does not cover all variables");
    }
    return f;
}

struct SolverResult {
    bool satisfiable = false;
    std::vector<bool> assignment;  ///< index = variable; slot 0 unused
};

/// Parses "s SATISFIABLE" / "s UNSATISFIABLE" and "v" model lines.
inline SolverResult parse_solver_output(std::string_view text, const CnfFormula& f) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<bool> status;
    std::vector<std::int8_t> seen(f.num_vars + 1, -1);
    bool terminated = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind("s ", 0) == 0) {
            const auto word = line.substr(2);
            if (word == "SATISFIABLE") status = true;
            else if (word == "UNSATISFIABLE") status = false;
            else throw ParseError("solver status '" + word + "' is neither SATISFIABLE nor UNSATISFIABLE");
        } else if (line.rfind("v", 0) == 0 && (line.size() == 1 || line[1] == ' ')) {
            std::istringstream ls(line.substr(1));
            long long lit = 0;
            while (ls >> lit) {
                if (lit == 0) {
                    terminated = true;
                    continue;
                }
                const auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
                if (var > f.num_vars) throw ParseError("model literal " + std::to_string(lit) + " out of range");
                seen[var] = lit > 0 ? 1 : 0;
            }
            if (!ls.eof()) throw ParseError("malformed value line '" + line + "'");
        }
    }
    if (!status) throw ParseError("solver output has no status line");
    SolverResult r;
    r.satisfiable = *status;
    if (!r.satisfiable) return r;
    r.assignment.assign(f.num_vars + 1, false);
    for (std::size_t v = 1; v <= f.num_vars; ++v) {
        if (seen[v] < 0) throw ParseError("model does not assign variable " + std::to_string(v));
        r.assignment[v] = seen[v] == 1;
    }
    (void)terminated;
    return r;
}

inline bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
    if (assignment.size() != f.num_vars + 1) return false;
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const std::vector<int>& clause) {
        return std::any_of(clause.begin(), clause.end(), [&](int lit) {
            return assignment[static_cast<std::size_t>(std::abs(lit))] == (lit > 0);
        });
    });
}

namespace detail {

template <ColoredGraph G>
G decode_into(G g, const std::vector<bool>& a, const CnfFormula& f) {
    const unsigned t = g.colors();
    if (t == 2) {
        for (std::size_t i = 0; i < f.var_map.size(); ++i) {
            const auto& m = f.var_map[i];
            g.assign(m.u, m.v, a[i + 1] ? ColorId{0} : ColorId{1});
        }
    } else {
        for (std::size_t i = 0; i < f.var_map.size(); ++i) {
            const auto& m = f.var_map[i];
            if (!a[i + 1]) continue;
            if (g.color(m.u, m.v))
                throw DecodeError("edge (" + std::to_string(m.u) + ", " + std::to_string(m.v) +
                                  ") has more than one color");
            g.assign(m.u, m.v, m.color);
        }
        if (!g.complete()) throw DecodeError("some edge has no color in the model");
    }
    return g;
}

}  // namespace detail

/// Maps a total assignment back onto a coloring of the instance's host.
inline AnyColoring decode_model(const std::vector<bool>& assignment, const CnfFormula& f, const ArrowInstance& inst) {
    if (assignment.size() != f.num_vars + 1) throw DecodeError("assignment size differs from variable count");
    const std::size_t expected =
        (inst.host == ArrowInstance::Host::complete ? inst.order * (inst.order ? inst.order - 1 : 0) / 2
                                                    : inst.order * inst.order) *
        (inst.colors() == 2 ? 1 : inst.colors());
    if (f.var_map.size() != expected) throw DecodeError("variable map does not match the instance");
    if (inst.host == ArrowInstance::Host::complete)
        return detail::decode_into(EdgeColoring(inst.order, inst.colors()), assignment, f);
    return detail::decode_into(BipartiteColoring(inst.order, inst.order, inst.colors()), assignment, f);
}

inline AnyColoring decode_model(const std::vector<bool>& assignment, const CnfFormula& f) {
    if (!f.instance) throw DecodeError("formula carries no instance description");
    return decode_model(assignment, f, *f.instance);
}

/// Command of the external solver from BISTAR_SAT_SOLVER, if set and non-empty.
inline std::optional<std::string> solver_from_env() {
    const char* s = std::getenv("BISTAR_SAT_SOLVER");
    if (!s || !*s) return std::nullopt;
    return std::string(s);
}

/// Runs `command <file>` on the DIMACS text of f and parses its stdout. The
/// solver must print a SAT-competition transcript. A positive timeout wraps
/// the call in coreutils `timeout`.
inline SolverResult run_solver(const std::string& command, const CnfFormula& f, unsigned timeout_seconds = 0) {
    namespace fs = std::filesystem;
    std::string path = (fs::temp_directory_path() / "bistar-XXXXXX.cnf").string();
    const int fd = ::mkstemps(path.data(), 4);
    if (fd < 0) throw std::runtime_error("cannot create temporary CNF file");
    ::close(fd);
    {
        std::ofstream out(path);
        out << write_dimacs(f);
    }
    std::string cmd = (timeout_seconds ? "timeout " + std::to_string(timeout_seconds) + " " : std::string()) +
                      command + " '" + path + "' 2>/dev/null";
    std::string transcript;
    if (FILE* pipe = ::popen(cmd.c_str(), "r")) {
        char buf[4096];
        std::size_t n = 0;
        while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) transcript.append(buf, n);
        ::pclose(pipe);
    }
    std::error_code ec;
    fs::remove(path, ec);
    return parse_solver_output(transcript, f);
}

/// Arrowing decided by an external solver; a model becomes a re-verified
/// counterexample.
template <ColoredGraph G>
Verdict<G> sat_decide(const ArrowInstance& inst, const std::string& command, unsigned timeout_seconds = 0) {
    const auto f = encode_arrow(inst);
    const auto r = run_solver(command, f, timeout_seconds);
    Verdict<G> v;
    if (!r.satisfiable) return v;
    if (!satisfies(f, r.assignment)) throw DecodeError("solver model does not satisfy the formula");
    auto g = std::get<G>(decode_model(r.assignment, f, inst));
    if (violates(g, inst.targets)) throw DecodeError("decoded model contains a target pattern");
    v.outcome = Outcome::counterexample;
    v.counterexample = std::move(g);
    return v;
}

}  // namespace bistar
