#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bistar/errors.hpp"
#include "bistar/formulas.hpp"
#include "bistar/pattern.hpp"
#include "bistar/search.hpp"

// Tabulates the closed-form bounds for parameter grids, optionally next to
// values confirmed by exhaustive search.

namespace bistar {

struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

/// "a..b" or a single integer.
inline Range parse_range(std::string_view s) {
    auto number = [&](std::string_view part) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
            throw ParseError("bad range '" + std::string(s) + "'");
        return v;
    };
    const auto dots = s.find("..");
    if (dots == std::string_view::npos) {
        const auto v = number(s);
        return {v, v};
    }
    Range r{number(s.substr(0, dots)), number(s.substr(dots + 2))};
    if (r.lo > r.hi) throw ParseError("empty range '" + std::string(s) + "'");
    return r;
}

struct TableRequest {
    std::string tag;
    std::map<std::string, Range> ranges;  ///< keys: k, m, n, l, r, colors
    bool searched = false;
    std::uint64_t budget = 2'000'000;
};

using TableRows = std::vector<std::vector<std::string>>;

namespace detail {

inline std::string strict(const BoundValue& b) { return ">" + std::to_string(b.value); }

inline std::string searched_cell(const RamseyResult& r) {
    return r.status == RamseyResult::Status::found ? std::to_string(*r.value) : "?";
}

inline std::string bipartite_searched(const std::vector<Pattern>& targets, std::size_t max_n, std::uint64_t budget) {
    SearchOptions opts;
    opts.budget = budget;
    for (std::size_t n = 1; n <= max_n; ++n) {
        const auto v = arrows_bipartite(ArrowInstance::bipartite(n, targets), opts);
        if (v.outcome == Outcome::exhausted) return "?";
        if (v.outcome == Outcome::arrows) return std::to_string(n);
    }
    return "?";
}

}  // namespace detail

/// Header row first. Tags: thm1, thm2 (alias thm3), thm8 (alias thm7),
/// thm10, thm13 (alias thm11), thm15 (alias thm16).
inline TableRows table_rows(const TableRequest& req) {
    auto range = [&](const std::string& key, Range fallback) {
        auto it = req.ranges.find(key);
        return it == req.ranges.end() ? fallback : it->second;
    };
    SearchOptions opts;
    opts.budget = req.budget;
    TableRows rows;
    auto with_search = [&](std::vector<std::string> header) {
        if (req.searched) header.push_back("searched");
        return header;
    };
    const auto& tag = req.tag;

    if (tag == "thm1") {
        rows.push_back({"n", "colors", "upper"});
        const auto n = range("n", {1, 4}), t = range("colors", {2, 3});
        for (auto a = n.lo; a <= n.hi; ++a)
            for (auto c = t.lo; c <= t.hi; ++c)
                rows.push_back({std::to_string(a), std::to_string(c), std::to_string(gyarfas_tuza_upper(a, c).value)});
    } else if (tag == "thm2" || tag == "thm3") {
        rows.push_back(with_search({"k", "m", "n", "lower", "upper"}));
        const auto K = range("k", {4, 5}), M = range("m", {4, 5}), N = range("n", {3, 4});
        for (auto k = K.lo; k <= K.hi; ++k)
            for (auto m = M.lo; m <= std::min(M.hi, k); ++m)
                for (auto n = N.lo; n <= N.hi; ++n) {
                    const auto b = bistar_star_bounds(k, m, n);
                    std::vector<std::string> row{std::to_string(k), std::to_string(m), std::to_string(n),
                                                 detail::strict(b.lower), std::to_string(b.upper.value)};
                    if (req.searched)
                        row.push_back(detail::searched_cell(ramsey_number(
                            {Pattern::bistar(unsigned(k), unsigned(m)), Pattern::star(unsigned(n))},
                            static_cast<std::size_t>(b.upper.value), opts)));
                    rows.push_back(std::move(row));
                }
    } else if (tag == "thm8" || tag == "thm7") {
        rows.push_back(with_search({"k", "m", "n", "exact"}));
        const auto K = range("k", {2, 3}), M = range("m", {2, 3}), N = range("n", {3, 3});
        for (auto k = K.lo; k <= K.hi; ++k)
            for (auto m = M.lo; m <= std::min(M.hi, k); ++m)
                for (auto n = N.lo; n <= N.hi; ++n) {
                    const auto e = bistar_clique_exact(k, m, n);
                    std::vector<std::string> row{std::to_string(k), std::to_string(m), std::to_string(n),
                                                 std::to_string(e.value)};
                    if (req.searched)
                        row.push_back(detail::searched_cell(ramsey_number(
                            {Pattern::bistar(unsigned(k), unsigned(m)), Pattern::clique(unsigned(n))},
                            static_cast<std::size_t>(e.value), opts)));
                    rows.push_back(std::move(row));
                }
    } else if (tag == "thm10") {
        rows.push_back({"k", "m", "r'", "exact"});
        const auto K = range("k", {2, 3}), M = range("m", {2, 3}), R = range("r", {6, 6});
        for (auto k = K.lo; k <= K.hi; ++k)
            for (auto m = M.lo; m <= std::min(M.hi, k); ++m)
                for (auto r = R.lo; r <= R.hi; ++r)
                    rows.push_back({std::to_string(k), std::to_string(m), std::to_string(r),
                                    std::to_string(bistar_multiclique_exact(k, m, r).value)});
    } else if (tag == "thm13" || tag == "thm11") {
        rows.push_back(with_search({"k", "m", "n", "l", "exact"}));
        const auto K = range("k", {2, 4}), M = range("m", {2, 2}), N = range("n", {2, 4}), L = range("l", {2, 2});
        for (auto k = K.lo; k <= K.hi; ++k)
            for (auto m = std::max<std::int64_t>(M.lo, 2); m <= std::min(M.hi, k); ++m)
                for (auto n = N.lo; n <= N.hi; ++n)
                    for (auto l = std::max<std::int64_t>(L.lo, 2); l <= std::min(L.hi, n); ++l) {
                        const auto e = bipartite_bistar_exact(k, m, n, l);
                        std::vector<std::string> row{std::to_string(k), std::to_string(m), std::to_string(n),
                                                     std::to_string(l), std::to_string(e.value)};
                        if (req.searched)
                            row.push_back(detail::bipartite_searched(
                                {Pattern::bistar(unsigned(k), unsigned(m)), Pattern::bistar(unsigned(n), unsigned(l))},
                                static_cast<std::size_t>(e.value), req.budget));
                        rows.push_back(std::move(row));
                    }
    } else if (tag == "thm15" || tag == "thm16") {
        rows.push_back({"colors", "m", "lower", "upper"});
        const auto T = range("colors", {2, 3}), M = range("m", {3, 4});
        for (auto t = T.lo; t <= T.hi; ++t)
            for (auto m = M.lo; m <= M.hi; ++m) {
                const auto b = bipartite_kcolor_bounds(t, m);
                rows.push_back({std::to_string(t), std::to_string(m), detail::strict(b.lower),
                                b.upper ? std::to_string(b.upper->value) : "n/a"});
            }
    } else {
        throw ArgumentError("unknown table tag '" + tag + "'");
    }
    return rows;
}

/// Left-aligned columns separated by two spaces.
inline std::string render_table(const TableRows& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << line << "\n";
    }
    return out.str();
}

}  // namespace bistar
