#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bistar/coloring.hpp"
#include "bistar/detect.hpp"
#include "bistar/pattern.hpp"

// Exhaustive counterexample search for arrowing questions K_N -> (G_1..G_t)
// and K_{N,N} -> (G_1..G_t).
//
// Edges are assigned in lexicographic order. Rules (each can be switched off):
//   detectors  after coloring uv with c, look for targets[c] through uv;
//   degree     a Star(n) target in color c prunes as soon as a c-degree hits n;
//   symmetry   vertex relabeling moves any edge of the least used color onto
//              the first edge, so the first edge picks that color c and every
//              later edge is restricted to colors >= c. When all targets are
//              equal the colors can be permuted too and the first edge is
//              fixed to color 0.

namespace bistar {

struct SearchOptions {
    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();  ///< node limit
    unsigned threads = 1;
    bool prune_detectors = true;
    bool prune_degree = true;
    bool break_symmetry = true;
};

enum class Outcome { arrows, counterexample, exhausted };

inline std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::arrows: return "ARROWS";
        case Outcome::counterexample: return "COUNTEREXAMPLE";
        case Outcome::exhausted: return "EXHAUSTED";
    }
    return "?";
}

template <ColoredGraph G>
struct Verdict {
    Outcome outcome = Outcome::arrows;
    std::optional<G> counterexample;
    std::uint64_t nodes = 0;
};

struct ArrowInstance {
    enum class Host { complete, bipartite };

    Host host = Host::complete;
    std::size_t order = 0;  ///< N for K_N, side size for K_{N,N}
    std::vector<Pattern> targets;

    static ArrowInstance complete(std::size_t n, std::vector<Pattern> targets) {
        return {Host::complete, n, std::move(targets)};
    }
    static ArrowInstance bipartite(std::size_t n, std::vector<Pattern> targets) {
        return {Host::bipartite, n, std::move(targets)};
    }
    unsigned colors() const { return static_cast<unsigned>(targets.size()); }
};

namespace detail {

template <ColoredGraph G>
class Searcher {
public:
    Searcher(G graph, const std::vector<Pattern>& targets, const SearchOptions& opts,
             std::atomic<std::uint64_t>& nodes, std::atomic<bool>& stop, std::function<bool()> cancelled)
        : g_(std::move(graph)), edges_(host_edges(g_)), targets_(targets), opts_(opts), nodes_(nodes), stop_(stop),
          cancelled_(std::move(cancelled)),
          batch_(std::clamp<std::uint64_t>(opts.budget / (4 * std::max(1u, opts.threads)), 1, kBatch)) {}

    enum class Result { none, found, aborted };

    G& graph() { return g_; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    /// Colors edge `idx` with c; false if a pruning rule fires (edge left assigned).
    bool place(std::size_t idx, ColorId c) {
        const auto [u, v] = edges_[idx];
        g_.assign(u, v, c);
        const auto& p = targets_[c.index()];
        if (opts_.prune_degree && p.is<Star>()) {
            const auto n = p.as<Star>().leaves;
            if (g_.neighbors(u, c).size() >= n || g_.neighbors(v, c).size() >= n) return false;
        }
        if (opts_.prune_detectors && contains_through(g_, c, p, u, v)) return false;
        return true;
    }

    Result dfs(std::size_t idx, unsigned floor) {
        if (idx == edges_.size()) {
            if (!violates(g_, targets_)) return Result::found;
            return Result::none;
        }
        const unsigned t = g_.colors();
        unsigned first = floor, last = t;
        if (idx == 0 && opts_.break_symmetry && all_equal()) last = 1;
        for (unsigned c = first; c < last; ++c) {
            if (!tick()) return Result::aborted;
            const bool ok = place(idx, ColorId{c});
            if (ok) {
                const unsigned next_floor = idx == 0 && opts_.break_symmetry && !all_equal() ? c : floor;
                const auto r = dfs(idx + 1, next_floor);
                if (r != Result::none) return r;  // keep the counterexample in place
            }
            g_.unassign(edges_[idx].first, edges_[idx].second);
        }
        return Result::none;
    }

    bool all_equal() const {
        return std::all_of(targets_.begin(), targets_.end(), [&](const Pattern& p) { return p == targets_[0]; });
    }

    std::uint64_t local_nodes() const { return local_; }

    /// Publishes the unflushed node count.
    void flush() {
        nodes_.fetch_add(pending_, std::memory_order_relaxed);
        pending_ = 0;
    }

    /// Counts one node; false once the budget is spent or the caller cancels.
    bool tick() {
        ++local_;
        if (++pending_ >= batch_) {
            const auto total = nodes_.fetch_add(pending_, std::memory_order_relaxed) + pending_;
            pending_ = 0;
            if (total > opts_.budget) stop_.store(true);
            if (cancelled_ && cancelled_()) return false;
        }
        if (stop_.load(std::memory_order_relaxed)) return false;
        if (opts_.threads <= 1 && nodes_.load(std::memory_order_relaxed) + pending_ > opts_.budget) {
            stop_.store(true);
            return false;
        }
        return true;
    }

private:
    static constexpr std::uint64_t kBatch = 4096;

    G g_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    const std::vector<Pattern>& targets_;
    const SearchOptions& opts_;
    std::atomic<std::uint64_t>& nodes_;
    std::atomic<bool>& stop_;
    std::function<bool()> cancelled_;
    std::uint64_t batch_;
    std::uint64_t local_ = 0;
    std::uint64_t pending_ = 0;
};

template <ColoredGraph G>
Verdict<G> run_sequential(G empty, const std::vector<Pattern>& targets, const SearchOptions& opts) {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    Searcher<G> s(std::move(empty), targets, opts, nodes, stop, nullptr);
    const auto r = s.dfs(0, 0);
    s.flush();
    Verdict<G> out;
    out.nodes = nodes.load();
    if (r == Searcher<G>::Result::found) {
        out.outcome = Outcome::counterexample;
        out.counterexample = std::move(s.graph());
    } else if (r == Searcher<G>::Result::aborted) {
        out.outcome = Outcome::exhausted;
    }
    return out;
}

/// Splits the first two edge levels across workers. Prefixes are handed out
/// in DFS order and the lowest-index counterexample wins, so the verdict and
/// the counterexample match the sequential run.
template <ColoredGraph G>
Verdict<G> run_parallel(G empty, const std::vector<Pattern>& targets, const SearchOptions& opts) {
    const unsigned t = empty.colors();
    const bool equal = std::all_of(targets.begin(), targets.end(), [&](const Pattern& p) { return p == targets[0]; });
    struct Prefix {
        unsigned c0, c1, floor;
    };
    std::vector<Prefix> prefixes;
    const unsigned last0 = opts.break_symmetry && equal ? 1 : t;
    for (unsigned c0 = 0; c0 < last0; ++c0) {
        const unsigned floor = opts.break_symmetry && !equal ? c0 : 0;
        for (unsigned c1 = floor; c1 < t; ++c1) prefixes.push_back({c0, c1, floor});
    }

    enum class Status { pending, arrows, found, aborted };
    std::vector<Status> status(prefixes.size(), Status::pending);
    std::vector<std::optional<G>> found(prefixes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{prefixes.size()};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) return;
            if (i > best.load()) {
                status[i] = Status::aborted;
                continue;
            }
            Searcher<G> s(empty, targets, opts, nodes, stop, [&, i] { return i > best.load(); });
            const auto& p = prefixes[i];
            typename Searcher<G>::Result r = Searcher<G>::Result::none;
            if (!s.tick()) {
                r = Searcher<G>::Result::aborted;
            } else if (s.place(0, ColorId{p.c0})) {
                if (!s.tick()) r = Searcher<G>::Result::aborted;
                else if (s.place(1, ColorId{p.c1})) r = s.dfs(2, p.floor);
            }
            s.flush();
            if (r == Searcher<G>::Result::found) {
                found[i] = std::move(s.graph());
                status[i] = Status::found;
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            } else {
                status[i] = r == Searcher<G>::Result::aborted ? Status::aborted : Status::arrows;
            }
        }
    };

    std::vector<std::jthread> pool;
    const unsigned n = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(prefixes.size())));
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(worker);
    pool.clear();

    Verdict<G> out;
    out.nodes = nodes.load();
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        if (status[i] == Status::arrows) continue;
        if (status[i] == Status::found) {
            out.outcome = Outcome::counterexample;
            out.counterexample = std::move(found[i]);
        } else {
            out.outcome = Outcome::exhausted;
        }
        return out;
    }
    out.outcome = Outcome::arrows;
    return out;
}

template <ColoredGraph G>
Verdict<G> search(G empty, const std::vector<Pattern>& targets, const SearchOptions& opts) {
    if (opts.budget == 0) throw ArgumentError("search budget must be positive");
    if (targets.size() != empty.colors()) throw ArgumentError("one target pattern per color required");
    Verdict<G> v = opts.threads > 1 && empty.edge_count() >= 2 ? run_parallel(std::move(empty), targets, opts)
                                                               : run_sequential(std::move(empty), targets, opts);
    if (v.counterexample && violates(*v.counterexample, targets))
        throw std::logic_error("search produced a coloring that contains a target");
    return v;
}

inline void check_instance(const ArrowInstance& inst) {
    if (inst.targets.size() < 2) throw ArgumentError("arrowing needs at least two colors");
    if (inst.targets.size() > kMaxColors) throw ArgumentError("too many colors");
}

}  // namespace detail

/// Does every coloring of K_N contain targets[i] in color i for some i?
inline Verdict<EdgeColoring> arrows(const ArrowInstance& inst, const SearchOptions& opts = {}) {
    detail::check_instance(inst);
    if (inst.host != ArrowInstance::Host::complete) throw ArgumentError("arrows() needs a complete host");
    return detail::search(EdgeColoring(inst.order, inst.colors()), inst.targets, opts);
}

/// As arrows(), over the N^2 cross edges of K_{N,N}.
inline Verdict<BipartiteColoring> arrows_bipartite(const ArrowInstance& inst, const SearchOptions& opts = {}) {
    detail::check_instance(inst);
    if (inst.host != ArrowInstance::Host::bipartite) throw ArgumentError("arrows_bipartite() needs a bipartite host");
    return detail::search(BipartiteColoring(inst.order, inst.order, inst.colors()), inst.targets, opts);
}

struct RamseyResult {
    enum class Status { found, ceiling, exhausted };

    Status status = Status::ceiling;
    std::optional<std::size_t> value;         ///< least arrowing N
    std::optional<EdgeColoring> witness;      ///< counterexample on K_{value-1}
    std::vector<std::pair<std::size_t, Outcome>> log;
};

/// Least N <= max_n at which `decide` reports arrowing. A verified seed
/// witness on K_L lets the scan start at L+1.
template <class Decide>
RamseyResult ramsey_search(const std::vector<Pattern>& targets, std::size_t max_n, Decide&& decide,
                           std::optional<EdgeColoring> seed = std::nullopt) {
    if (targets.size() < 2) throw ArgumentError("Ramsey numbers need at least two targets");
    std::size_t largest = 0;
    for (const auto& p : targets) largest = std::max(largest, p.order());
    if (max_n < largest)
        throw ArgumentError("search ceiling " + std::to_string(max_n) + " is below the largest pattern order " +
                            std::to_string(largest));

    RamseyResult out;
    std::optional<EdgeColoring> last = std::move(seed);
    std::size_t start = 1;
    if (last) {
        if (last->colors() != targets.size() || !last->complete() || violates(*last, targets))
            throw ArgumentError("seed witness does not avoid the targets");
        start = last->order() + 1;
    }
    for (std::size_t n = start; n <= max_n; ++n) {
        Verdict<EdgeColoring> v = decide(n);
        out.log.emplace_back(n, v.outcome);
        if (v.outcome == Outcome::exhausted) {
            out.status = RamseyResult::Status::exhausted;
            return out;
        }
        if (v.outcome == Outcome::arrows) {
            out.status = RamseyResult::Status::found;
            out.value = n;
            out.witness = std::move(last);
            return out;
        }
        last = std::move(v.counterexample);
    }
    out.status = RamseyResult::Status::ceiling;
    return out;
}

/// DFS-backed ramsey_search.
inline RamseyResult ramsey_number(const std::vector<Pattern>& targets, std::size_t max_n,
                                  const SearchOptions& opts = {}, std::optional<EdgeColoring> seed = std::nullopt) {
    return ramsey_search(
        targets, max_n, [&](std::size_t n) { return arrows(ArrowInstance::complete(n, targets), opts); },
        std::move(seed));
}

}  // namespace bistar
