#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "hcm/structure.hpp"

namespace hcm {

inline constexpr std::uint64_t default_node_budget = 100'000'000;

struct OracleResult {
    Matching matching;
    bool exact = true;
    std::uint64_t explored = 0;  // search nodes visited
    bool budget_hit = false;
};

/// Maximum matching inside `vertices` using only `allowed` colours. Branches on the lowest
/// uncovered vertex (extend by an allowed triple through it, or leave it uncovered) and
/// prunes with the floor(|uncovered|/3) bound. When the node budget runs out a greedy
/// matching is returned, flagged exact only if it leaves fewer than 3 vertices uncovered.
OracleResult max_matching_in_colours(const Colouring& c, VertexSet vertices, ColourSet allowed,
                                     std::optional<std::uint64_t> budget = {});

struct TwoColouredResult {
    ColourSet pair;
    OracleResult result;
};

/// Best of the three colour pairs {1,2}, {1,3}, {2,3}; ties go to the earlier pair.
TwoColouredResult max_two_coloured(const Colouring& c, VertexSet vertices, std::optional<std::uint64_t> budget = {});

/// Largest monochromatic matching inside a set whose triples use at most two colours.
/// Throws PreconditionError when all three colours occur.
Matching afl_mono_matching(const Colouring& c, VertexSet vertices);

/// The first perfect matching of a 12-set that uses at most two colours. Every one of the
/// 15400 perfect matchings is enumerated; `enumerated` receives the count.
Matching kozos_perfect_12(const Colouring& c, VertexSet vertices, long* enumerated = nullptr);

/// For a universal 6- or 13-set, near-perfect matchings avoiding colour 1, 2 and 3.
std::array<Matching, 3> pair_avoiding_matchings(const Colouring& c, VertexSet s);

} // namespace hcm
