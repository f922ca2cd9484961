#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hcm/colour.hpp"
#include "hcm/triple.hpp"

namespace hcm {

/// A 3-colouring of the complete 3-uniform hypergraph on n vertices. The colour table is
/// indexed by colex triple rank and is immutable after construction.
class Colouring {
public:
    /// All triples coloured `fill`.
    Colouring(int n, Colour fill);

    /// Table of colour values (1..3) in colex rank order; length must be C(n,3).
    Colouring(int n, std::vector<std::uint8_t> table);

    static Colouring from_function(int n, const std::function<Colour(const Triple&)>& colour_of);

    int n() const noexcept { return n_; }
    VertexSet vertices() const noexcept { return VertexSet::range(n_); }
    std::span<const std::uint8_t> table() const noexcept { return table_; }

    /// Colour of a triple; throws BoundsError if a vertex is >= n.
    Colour colour(const Triple& t) const;

    /// Unchecked lookup for sorted a < b < c < n; returns the colour value 1..3.
    int raw(Vertex a, Vertex b, Vertex c) const noexcept
    {
        return table_[static_cast<std::size_t>(a) + pair_offset(b) + triple_offset(c)];
    }

    /// Unchecked lookup for three distinct vertices in any order.
    int raw_unordered(Vertex a, Vertex b, Vertex c) const noexcept
    {
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        return raw(a, b, c);
    }

    /// Colours occurring among triples inside `s`.
    ColourSet colours_within(VertexSet s) const;

    /// Same hypergraph with every colour relabelled into `frame`'s canonical colours.
    Colouring to_canonical(const ColourFrame& frame) const;

    /// Colouring induced on `keep`, with vertices renumbered 0.. in increasing order.
    Colouring induced(VertexSet keep) const;

    bool operator==(const Colouring&) const = default;

private:
    static constexpr std::size_t pair_offset(Vertex b) noexcept
    {
        return static_cast<std::size_t>(b) * static_cast<std::size_t>(b - 1) / 2;
    }
    static constexpr std::size_t triple_offset(Vertex c) noexcept
    {
        return static_cast<std::size_t>(c) * static_cast<std::size_t>(c - 1) * static_cast<std::size_t>(c - 2) / 6;
    }

    int n_;
    std::vector<std::uint8_t> table_;
};

/// colour_of(c, t): free-function spelling of Colouring::colour.
inline Colour colour_of(const Colouring& c, const Triple& t) { return c.colour(t); }

} // namespace hcm
