#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "hcm/vertex_set.hpp"

namespace hcm {

/// Binomial coefficient C(n, k) for the small arguments used here (n <= 64, k <= 6).
constexpr std::uint64_t binomial(int n, int k) noexcept
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

/// Number of triples on n vertices, C(n, 3).
constexpr std::uint64_t triple_count(int n) noexcept { return binomial(n, 3); }

/// A hyperedge {i, j, k} with i < j < k.
struct Triple {
    Vertex i = 0;
    Vertex j = 1;
    Vertex k = 2;

    constexpr Triple() = default;

    /// Requires i < j < k; throws OrderingError otherwise.
    constexpr Triple(Vertex a, Vertex b, Vertex c) : i(a), j(b), k(c)
    {
        if (!(a < b && b < c))
            throw OrderingError("triple vertices must be strictly increasing");
        if (a < 0 || c >= max_vertices)
            throw BoundsError("triple vertex out of range");
    }

    /// Builds a triple from three distinct vertices in any order.
    static constexpr Triple sorted(Vertex a, Vertex b, Vertex c)
    {
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        return Triple(a, b, c);
    }

    /// The triple formed by a 3-element vertex set.
    static Triple of(VertexSet s);

    constexpr VertexSet vertices() const noexcept
    {
        return VertexSet((std::uint64_t{1} << i) | (std::uint64_t{1} << j) | (std::uint64_t{1} << k));
    }

    constexpr std::array<Vertex, 3> as_array() const noexcept { return {i, j, k}; }

    constexpr bool operator==(const Triple&) const = default;

    /// Colex order, consistent with rank order.
    constexpr auto operator<=>(const Triple& o) const noexcept
    {
        if (auto c = k <=> o.k; c != 0)
            return c;
        if (auto c = j <=> o.j; c != 0)
            return c;
        return i <=> o.i;
    }

    std::string to_string() const;
};

/// Colex rank i + C(j,2) + C(k,3).
constexpr std::uint64_t rank_triple(Vertex i, Vertex j, Vertex k)
{
    if (!(i < j && j < k))
        throw OrderingError("rank_triple requires i < j < k");
    if (i < 0)
        throw BoundsError("rank_triple: negative vertex");
    return static_cast<std::uint64_t>(i) + binomial(j, 2) + binomial(k, 3);
}

constexpr std::uint64_t rank_triple(const Triple& t) { return rank_triple(t.i, t.j, t.k); }

/// Inverse of rank_triple on [0, C(n,3)).
Triple unrank_triple(std::uint64_t rank, int n);

} // namespace hcm
