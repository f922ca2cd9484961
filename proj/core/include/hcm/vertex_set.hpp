#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hcm/errors.hpp"

namespace hcm {

using Vertex = int;

inline constexpr int max_vertices = 64;

/// Set of vertex ids in [0, 64), stored as a bitmask. Iteration is in increasing id order.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<Vertex> vertices)
    {
        for (Vertex v : vertices)
            insert(v);
    }

    static VertexSet from(const std::vector<Vertex>& vertices)
    {
        VertexSet s;
        for (Vertex v : vertices)
            s.insert(v);
        return s;
    }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet range(int n)
    {
        if (n < 0 || n > max_vertices)
            throw BoundsError("vertex count must be in [0, 64]");
        return VertexSet(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool empty() const noexcept { return bits_ == 0; }

    constexpr bool contains(Vertex v) const noexcept
    {
        return v >= 0 && v < max_vertices && ((bits_ >> v) & 1u) != 0;
    }

    constexpr void insert(Vertex v)
    {
        if (v < 0 || v >= max_vertices)
            throw BoundsError("vertex id out of range: " + std::to_string(v));
        bits_ |= std::uint64_t{1} << v;
    }

    constexpr void erase(Vertex v) noexcept
    {
        if (v >= 0 && v < max_vertices)
            bits_ &= ~(std::uint64_t{1} << v);
    }

    /// Smallest member; the set must be non-empty.
    constexpr Vertex min() const noexcept { return std::countr_zero(bits_); }
    constexpr Vertex max() const noexcept { return 63 - std::countl_zero(bits_); }

    constexpr bool is_subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const noexcept { return (bits_ & other.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const noexcept { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const noexcept { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const noexcept { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    /// Ordering by bitmask value, which is colex order for sets of equal size.
    constexpr auto operator<=>(const VertexSet& o) const noexcept { return bits_ <=> o.bits_; }

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr Vertex operator*() const noexcept { return std::countr_zero(rest_); }
        constexpr iterator& operator++() noexcept
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) noexcept
        {
            iterator t = *this;
            ++*this;
            return t;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const noexcept { return iterator(bits_); }
    constexpr iterator end() const noexcept { return iterator(0); }

    std::vector<Vertex> to_vector() const
    {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (Vertex v : *this)
            out.push_back(v);
        return out;
    }

    /// The `count` smallest members (or all of them if there are fewer).
    constexpr VertexSet lowest(int count) const noexcept
    {
        VertexSet out;
        std::uint64_t rest = bits_;
        for (int i = 0; i < count && rest != 0; ++i) {
            out.bits_ |= rest & (~rest + 1);
            rest &= rest - 1;
        }
        return out;
    }

    /// Renders as "{0,3,7}".
    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
};

/// Calls `f(VertexSet)` for every `k`-subset of `ground` in colex order. Stops early and
/// returns true as soon as `f` returns true; returns false if the enumeration completes.
template <typename F>
bool for_each_subset(VertexSet ground, int k, F&& f)
{
    const std::vector<Vertex> items = ground.to_vector();
    const int m = static_cast<int>(items.size());
    if (k < 0 || k > m)
        return false;
    if (k == 0)
        return f(VertexSet{});

    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = i;

    for (;;) {
        std::uint64_t bits = 0;
        for (int i : idx)
            bits |= std::uint64_t{1} << items[static_cast<std::size_t>(i)];
        if (f(VertexSet(bits)))
            return true;

        // Colex successor: bump the lowest index that has room, reset the ones below it.
        int i = 0;
        while (i < k) {
            int limit = (i + 1 < k) ? idx[static_cast<std::size_t>(i + 1)] : m;
            if (idx[static_cast<std::size_t>(i)] + 1 < limit)
                break;
            ++i;
        }
        if (i == k)
            return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j)
            idx[static_cast<std::size_t>(j)] = j;
    }
}

} // namespace hcm
