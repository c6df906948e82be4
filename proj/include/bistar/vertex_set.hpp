#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace bistar {

using Vertex = std::uint32_t;

/// Dynamic bitset over vertex indices. Intersection counts and scans do not
/// allocate, which keeps the search inner loop tight.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const noexcept { return universe_; }

    bool contains(Vertex v) const noexcept {
        return v < universe_ && (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void insert(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    std::size_t size() const noexcept {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Smallest member; the set must be non-empty.
    Vertex front() const noexcept {
        std::size_t i = 0;
        while (!words_[i]) ++i;
        return static_cast<Vertex>(i * 64 + static_cast<unsigned>(std::countr_zero(words_[i])));
    }

    std::size_t intersection_size(const VertexSet& other) const noexcept {
        std::size_t n = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return n;
    }

    VertexSet& operator&=(const VertexSet& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Calls f(v) for every member in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                const auto bit = static_cast<unsigned>(std::countr_zero(w));
                f(static_cast<Vertex>(i * 64 + bit));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace bistar
