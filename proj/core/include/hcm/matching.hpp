#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcm/colouring.hpp"

namespace hcm {

/// A set of pairwise disjoint triples, optionally tagged with a colour it avoids.
struct Matching {
    std::vector<Triple> triples;
    std::optional<Colour> avoided;

    int size() const noexcept { return static_cast<int>(triples.size()); }
    VertexSet covered() const;
    ColourSet colours_used(const Colouring& c) const;

    /// Appends the triples of `other` (the caller keeps the result disjoint).
    void append(const Matching& other);

    bool operator==(const Matching&) const = default;
};

struct VerificationReport {
    bool valid = true;
    int size = 0;
    ColourSet colours_used;
    std::vector<std::string> violations;
};

/// Checks disjointness, at most two colours, size >= min_size, and the avoided colour.
/// Problems are reported, never thrown.
VerificationReport verify_matching(const Colouring& c, const Matching& m, int min_size);

/// Maximal matching inside `vertices` using only `allowed` colours. Repeatedly takes the
/// lowest-colex allowed triple among uncovered vertices.
Matching greedy_matching(const Colouring& c, VertexSet vertices, ColourSet allowed);

/// Splits `vertices` into consecutive triples in increasing id order, ignoring colours.
/// Leaves |vertices| mod 3 of the largest ids uncovered.
Matching partition_into_triples(VertexSet vertices);

} // namespace hcm
