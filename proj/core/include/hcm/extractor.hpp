#pragma once

#include <array>
#include <compare>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "hcm/structure.hpp"
#include "hcm/trace.hpp"

namespace hcm {

/// A removed universal set together with its matchings avoiding colour 1, 2 and 3.
struct PeeledSet {
    VertexSet vertices;
    std::array<Matching, 3> avoiding;
};

/// Termination measure of the restart loop, compared lexicographically.
struct RestartMeasure {
    int active_size = 0;
    int level2_deficit = 3;  // 3 before a pair of spreads is chosen, then 2 - #level-2 spreads
    int phase = 1;           // 1: full dispatch, 0: resuming the two-spread procedure

    auto operator<=>(const RestartMeasure&) const = default;
};

struct SolveState {
    /// Keeps a pointer to `c`, which must outlive the state.
    explicit SolveState(const Colouring& c);
    explicit SolveState(Colouring&&) = delete;

    const Colouring* colouring;
    VertexSet active;
    std::vector<PeeledSet> peeled6;
    std::vector<PeeledSet> peeled13;
    Trace trace;
    RestartMeasure measure;
    int restarts = 0;
};

struct SolveResult {
    Matching matching;
    Trace trace;
    int restarts = 0;
};

/// A 2-coloured matching of size >= m_bound(n), with the trace of the run. Throws
/// FaithfulnessError if a structure guaranteed by the theorem is not found.
SolveResult solve(const Colouring& c);

/// Removes universal sextuples from the active set, lowest colex first.
void peel_phase(SolveState& st);

/// `core` plus each peeled set's matching avoiding `avoided`.
Matching assemble(const SolveState& st, const Matching& core, Colour avoided);

/// A matching on the active set, or the witness that forces a restart.
using StepResult = std::variant<Matching, Witness>;

/// Routes the active set (no universal sextuples inside) to the procedure matching its
/// spread structure. Returned matchings have size >= m_bound(|active|) and carry the
/// colour they avoid.
StepResult dispatch(SolveState& st);

/// Active sets without spreads use at most two colours; any near-perfect matching works.
/// Three colours raise FaithfulnessError.
Matching case_no_spreads(const Colouring& c, VertexSet active, Trace* trace = nullptr);

/// Near-perfect matching avoiding one colour, given two disjoint spreads of different
/// colours inside `active`. Escalations come back as Universal13 / Universal6 /
/// LevelUpgrade witnesses.
StepResult proc_two_spreads(const Colouring& c, VertexSet active, const SpreadInfo& first, const SpreadInfo& second,
                            Trace* trace = nullptr);

/// The pair of hat sets grown around two disjoint spreads of colours i and i+1.
struct HatSets {
    SpreadInfo first;   // colour i
    SpreadInfo second;  // colour i+1
    VertexSet hat1;
    VertexSet hat2;
};

/// Grows the hats vertex by vertex (ascending ids). A vertex that fits neither hat yields
/// the Universal13 witness built from it.
std::variant<HatSets, Witness> grow_hats(const Colouring& c, VertexSet active, const SpreadInfo& first,
                                         const SpreadInfo& second);

/// Describes the first violated defining property of hat `side` (1 or 2), if any.
std::optional<std::string> hat_violation(const Colouring& c, const HatSets& hats, int side);

/// Near-perfect matching of u + w in the two given colours, for disjoint cliques u (first
/// colour) and w (second colour) of at least 3 vertices each.
StepResult cliques2matching(const Colouring& c, VertexSet u, VertexSet w, std::pair<Colour, Colour> colours,
                            Trace* trace = nullptr);

struct OneSpreadOutcome {
    enum class Kind { matching_avoiding, no_triples_of_colour, escalate };

    Kind kind = Kind::no_triples_of_colour;
    Colour colour{1};            // avoided colour, or the colour that has no triples
    Matching matching;           // near-perfect on the queried set when kind is matching_avoiding
    std::optional<Witness> witness;
};

/// For a set in which every spread has colour `alpha`: a near-perfect matching avoiding
/// one of the other two colours, or the report that no triple has colour `alpha`.
OneSpreadOutcome proc_one_spread(const Colouring& c, VertexSet s, Colour alpha, Trace* trace = nullptr);

/// Endgame strategies as bit flags, in the order they are tried.
enum EndgameStrategy : unsigned {
    endgame_reextend = 1u,
    endgame_perfect_12 = 2u,
    endgame_monochromatic_rest = 4u,
    endgame_mixed_cover = 8u,
    endgame_all = 15u,
};

/// Final assembly for intersecting spreads u and w of different colours, when the colour-u
/// triples all meet u and the colour-w triples all meet w. Tries the enabled strategies in
/// order and returns the first matching of size >= m_bound(|active|).
StepResult endgame(const Colouring& c, VertexSet active, const SpreadInfo& u, const SpreadInfo& w,
                   Trace* trace = nullptr, unsigned strategies = endgame_all);

} // namespace hcm
