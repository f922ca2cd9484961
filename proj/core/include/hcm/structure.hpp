#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcm/matching.hpp"

namespace hcm {

/// A sextuple written as two complementary triples; `first` holds the smallest vertex.
struct Splitting {
    Triple first;
    Triple second;

    bool operator==(const Splitting&) const = default;
};

/// The 10 splittings of a 6-vertex set, ordered by the colex rank of `first`.
std::array<Splitting, 10> splittings_of(VertexSet sextuple);

/// One demonstration splitting of a spread: the dominant-colour triple and its complement.
struct DemonstrationSplit {
    Triple dominant;
    Triple partner;

    bool operator==(const DemonstrationSplit&) const = default;
};

/// A spread in `colour`: the sextuple is colour-dominated, `plus` is coloured
/// (colour, colour+1) and `minus` is coloured (colour, colour-1).
struct SpreadInfo {
    VertexSet vertices;
    Colour colour{1};
    DemonstrationSplit plus;
    DemonstrationSplit minus;
    int level = 1;          // |plus.dominant & minus.dominant|, always 1 or 2
    VertexSet dominating;   // plus.dominant & minus.dominant
    VertexSet core;         // vertices - dominating

    bool operator==(const SpreadInfo&) const = default;
};

struct SextupleClass {
    VertexSet vertices;
    ColourSet dominated;
    std::vector<SpreadInfo> spreads;
    /// Indexed by colour - 1: the first splitting whose halves both avoid that colour.
    std::array<std::optional<Splitting>, 3> avoiding_splits;

    bool universal() const noexcept { return dominated.empty(); }
};

/// Classifies a 6-vertex set by enumerating its 10 splittings. When several demonstration
/// pairs exist for a spread, a level-2 pair is preferred, then the lowest (plus, minus)
/// pair in splitting order.
SextupleClass classify_sextuple(const Colouring& c, VertexSet sextuple);

/// Lowest-colex universal sextuple inside `w`.
std::optional<std::pair<VertexSet, SextupleClass>> find_universal_sextuple(const Colouring& c, VertexSet w);

/// All spreads inside `w` in colex order of their vertex sets, optionally of one colour.
std::vector<SpreadInfo> scan_spreads(const Colouring& c, VertexSet w, std::optional<Colour> colour_filter = {});

/// Spread selection used by the extractor.
struct SpreadQuery {
    ColourSet colours = ColourSet::full();  // acceptable spread colours
    bool prefer_level2 = true;              // first level-2 spread wins over earlier level-1 ones
};

/// First spread in colex order inside `w` whose colour is in `query.colours`; with
/// `prefer_level2` the first level-2 spread is returned if any exists.
std::optional<SpreadInfo> find_spread(const Colouring& c, VertexSet w, const SpreadQuery& query);

/// Unordered vertex pairs contained in plus.dominant or minus.dominant, sorted.
std::vector<std::pair<Vertex, Vertex>> critical_pairs(const SpreadInfo& s);

/// Lowest-colex triple inside `s` whose colour is not `colour`, or nothing if `s` is a clique.
std::optional<Triple> is_clique(const Colouring& c, VertexSet s, Colour colour);

/// True iff every triple of `w` through `v` has colour `colour`.
bool is_forcing(const Colouring& c, VertexSet w, Vertex v, Colour colour);

/// Lowest-colex triple of `w` through `v` whose colour is not `colour`.
std::optional<Triple> forcing_violation(const Colouring& c, VertexSet w, Vertex v, Colour colour);

/// Calls `visit(const std::array<Triple,4>&)` for each of the 200200 sets of four disjoint
/// triples inside a 13-vertex set: the uncovered vertex ascending, then the perfect
/// matchings of the other twelve. Returning true from `visit` stops the enumeration.
/// Returns the number of packings visited.
template <typename Visit>
long for_each_packing_13(VertexSet x, Visit&& visit);

/// For each colour, a size-4 matching inside the 13-set `x` avoiding it (indexed colour-1),
/// or nothing if some colour cannot be avoided.
std::optional<std::array<Matching, 3>> check_universal_13(const Colouring& c, VertexSet x);

enum class WitnessKind { universal6, universal13, foreign_spread, level_upgrade, faithfulness };

std::string to_string(WitnessKind kind);

/// A structure whose existence contradicts an assumption of the current proof step.
struct Witness {
    WitnessKind kind = WitnessKind::faithfulness;
    VertexSet vertices;
    /// Universal witnesses: near-perfect matchings avoiding colour 1, 2, 3 in that order.
    std::vector<Matching> matchings;
    std::optional<SpreadInfo> spread;
    std::string context;
};

/// Localized search inside `s` (at most 14 vertices): universal sextuple, then universal
/// 13-set, then (when `colour_context` is given) a spread of a different colour.
std::optional<Witness> find_witness(const Colouring& c, VertexSet s, std::optional<Colour> colour_context = {});

// -- implementation of the packing enumerator ------------------------------------------

namespace detail {

template <typename Visit>
bool perfect_matchings_rec(std::uint64_t rest, std::array<Triple, 4>& acc, int depth, long& count, Visit& visit)
{
    if (rest == 0) {
        ++count;
        return visit(static_cast<const std::array<Triple, 4>&>(acc));
    }
    const Vertex v = std::countr_zero(rest);
    const std::uint64_t others = rest & (rest - 1);
    for (std::uint64_t b_rest = others; b_rest != 0; b_rest &= b_rest - 1) {
        const Vertex b = std::countr_zero(b_rest);
        for (std::uint64_t c_rest = b_rest & (b_rest - 1); c_rest != 0; c_rest &= c_rest - 1) {
            const Vertex w = std::countr_zero(c_rest);
            acc[static_cast<std::size_t>(depth)] = Triple(v, b, w);
            const std::uint64_t next = others & ~(std::uint64_t{1} << b) & ~(std::uint64_t{1} << w);
            if (perfect_matchings_rec(next, acc, depth + 1, count, visit))
                return true;
        }
    }
    return false;
}

} // namespace detail

template <typename Visit>
long for_each_packing_13(VertexSet x, Visit&& visit)
{
    if (x.size() != 13)
        throw InputError("packing enumeration needs exactly 13 vertices");
    long count = 0;
    std::array<Triple, 4> acc{};
    for (Vertex left_out : x) {
        const std::uint64_t rest = x.bits() & ~(std::uint64_t{1} << left_out);
        if (detail::perfect_matchings_rec(rest, acc, 0, count, visit))
            break;
    }
    return count;
}

} // namespace hcm
