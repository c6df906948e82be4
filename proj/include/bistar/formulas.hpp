#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "bistar/errors.hpp"

// Closed-form Ramsey bounds and exact values. Irrational expressions are
// evaluated with integer square roots, so no reported value depends on
// floating-point rounding.

namespace bistar {

enum class BoundKind { exact, upper, lower_strict };

/// For lower_strict the Ramsey quantity is > value; otherwise <= or ==.
struct BoundValue {
    std::int64_t value = 0;
    BoundKind kind = BoundKind::exact;
    std::string source;
    friend bool operator==(const BoundValue&, const BoundValue&) = default;
};

inline std::string to_string(BoundKind k) {
    switch (k) {
        case BoundKind::exact: return "exact";
        case BoundKind::upper: return "upper";
        case BoundKind::lower_strict: return "lower";
    }
    return "?";
}

/// floor(sqrt(x)).
inline std::uint64_t isqrt(std::uint64_t x) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

/// ceil(sqrt(x)).
inline std::uint64_t ceil_sqrt(std::uint64_t x) {
    const auto r = isqrt(x);
    return r * r == x ? r : r + 1;
}

/// R_k(T) <= (n-1)(k + sqrt(k(k-1))) + 2 for a tree T with n edges. The
/// quantity is an integer, so the floor of the bound is reported.
inline BoundValue gyarfas_tuza_upper(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 1) throw ArgumentError("tree edges and colors must be >= 1");
    const auto t = static_cast<std::uint64_t>(n - 1);
    const auto root = isqrt(t * t * static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k - 1));
    return {static_cast<std::int64_t>(t) * k + static_cast<std::int64_t>(root) + 2, BoundKind::upper, "Thm1"};
}

struct BoundPair {
    BoundValue lower;
    BoundValue upper;
};

/// Bounds on R(B_{k,m}, S_n). The circulant lower bound needs k, m >= 4; below
/// that only the pattern order k+m is claimed (R > k+m-1).
inline BoundPair bistar_star_bounds(std::int64_t k, std::int64_t m, std::int64_t n) {
    if (k < 1 || m < 1 || n < 1) throw ArgumentError("k, m, n must be >= 1");
    BoundValue lower = k >= 4 && m >= 4 ? BoundValue{(k + m) / 2 + n, BoundKind::lower_strict, "Thm3"}
                                        : BoundValue{k + m - 1, BoundKind::lower_strict, "order"};
    return {lower, {k + m + n - 1, BoundKind::upper, "Thm2"}};
}

/// R(B_{k,m}, K_n) = (k+m-1)(n-1) + 1.
inline BoundValue bistar_clique_exact(std::int64_t k, std::int64_t m, std::int64_t n) {
    if (k < 1 || m < 1) throw ArgumentError("k, m must be >= 1");
    if (n < 2) throw ArgumentError("n must be >= 2");
    return {(k + m - 1) * (n - 1) + 1, BoundKind::exact, n == 3 ? "Thm7" : "Thm8"};
}

/// R(B_{k,m}, K_{n_1}, ..., K_{n_l}) = (k+m-1)(r'-1) + 1 where r' is the
/// clique Ramsey number R(K_{n_1}, ..., K_{n_l}) supplied by the caller.
inline BoundValue bistar_multiclique_exact(std::int64_t k, std::int64_t m, std::int64_t r_prime) {
    if (k < 1 || m < 1) throw ArgumentError("k, m must be >= 1");
    if (r_prime < 2) throw ArgumentError("r' must be >= 2");
    return {(k + m - 1) * (r_prime - 1) + 1, BoundKind::exact, "Thm10"};
}

/// BR(B_{k,m}, B_{n,l}) = k + n - 1 for k >= m >= 2, n >= l >= 2.
inline BoundValue bipartite_bistar_exact(std::int64_t k, std::int64_t m, std::int64_t n, std::int64_t l) {
    if (!(k >= m && m >= 2 && n >= l && l >= 2))
        throw ArgumentError("bipartite bistar value needs k >= m >= 2 and n >= l >= 2");
    return {k + n - 1, BoundKind::exact, k == m && n == l ? "Thm11" : "Thm13"};
}

struct KColorBounds {
    BoundValue lower;
    std::optional<BoundValue> upper;  ///< absent outside k >= 2, m >= 3 or for a negative radicand
};

/// BR_k(B_{m,m}) > k(m-1), and
/// BR_k(B_{m,m}) <= ceil(k(m-1) + sqrt((m-1)^2 (k^2-k) - k(2m-4))) for k >= 2, m >= 3.
inline KColorBounds bipartite_kcolor_bounds(std::int64_t k, std::int64_t m) {
    if (k < 1 || m < 1) throw ArgumentError("k, m must be >= 1");
    KColorBounds out{{k * (m - 1), BoundKind::lower_strict, "Thm16"}, std::nullopt};
    const std::int64_t radicand = (m - 1) * (m - 1) * (k * k - k) - k * (2 * m - 4);
    if (k >= 2 && m >= 3 && radicand >= 0)
        out.upper = BoundValue{k * (m - 1) + static_cast<std::int64_t>(ceil_sqrt(static_cast<std::uint64_t>(radicand))),
                               BoundKind::upper, "Thm15"};
    return out;
}

}  // namespace bistar
