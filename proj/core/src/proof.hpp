#pragma once

// Shared machinery of the extractor procedures: a canonical colour frame, verified colour
// claims, and escalation of failed claims into witnesses.

#include <optional>
#include <string>
#include <vector>

#include "hcm/extractor.hpp"

namespace hcm::detail {

/// Thrown inside a procedure when a claim fails and a witness explains it; converted to a
/// StepResult at the public boundary.
struct Escalation {
    Witness witness;
};

class Proof {
public:
    /// `spread_colour`: actual colour that every spread of the working set is expected to have.
    Proof(const Colouring& actual, ColourFrame frame, Trace* trace, std::optional<Colour> spread_colour = {});

    /// Colouring relabelled into the frame.
    const Colouring& c() const { return canon_; }
    const Colouring& actual() const { return actual_; }
    const ColourFrame& frame() const { return frame_; }

    int colour(Vertex a, Vertex b, Vertex k) const { return canon_.raw_unordered(a, b, k); }
    int colour(const Triple& t) const { return canon_.raw(t.i, t.j, t.k); }

    /// The triple must have canonical colour `expected`.
    void require(const Triple& t, int expected, VertexSet involved, const std::string& what);
    /// The triple must not have canonical colour `excluded`.
    void require_not(const Triple& t, int excluded, VertexSet involved, const std::string& what);
    /// Every triple inside `s` must have canonical colour `expected`.
    void require_clique(VertexSet s, int expected, VertexSet involved, const std::string& what);

    /// Searches `involved` for a witness; throws Escalation if one exists and
    /// FaithfulnessError otherwise.
    [[noreturn]] void fail(VertexSet involved, const std::string& what) const;

    Colour to_actual(int canonical) const { return frame_.to_actual(Colour(canonical)); }

    /// SpreadInfo relabelled into the frame (plus and minus swap under a reflection).
    SpreadInfo to_canonical(const SpreadInfo& s) const;
    SpreadInfo to_actual(const SpreadInfo& s) const;

    /// Matching whose avoided colour is given canonically, returned in actual colours.
    Matching finish(Matching m, int avoided_canonical) const;

    /// Appends an event carrying the claims recorded since the previous event.
    TraceEvent* emit(EventKind kind, std::string tag = {});
    Trace* trace() const { return trace_; }

private:
    void record(const Triple& t);

    const Colouring& actual_;
    ColourFrame frame_;
    Colouring canon_;
    Trace* trace_;
    std::optional<Colour> spread_colour_;
    std::vector<Claim> pending_;
};

/// Triples of `s` in increasing id order (|s| mod 3 of the largest ids stay uncovered).
inline Matching chunk(VertexSet s) { return partition_into_triples(s); }

/// Colour not used by `m` (lowest first), in the colouring's own labels.
std::optional<Colour> unused_colour(const Colouring& c, const Matching& m);

/// Converts a procedure body that may throw Escalation into a StepResult.
template <typename F>
StepResult catching_escalation(F&& body)
{
    try {
        return StepResult(body());
    } catch (Escalation& e) {
        return StepResult(std::move(e.witness));
    }
}

/// Internal versions that run inside an existing frame and throw Escalation.
Matching cliques2matching_in(Proof& proof, VertexSet u, VertexSet w, int colour_u, int colour_w);
Matching two_spreads_in(const Colouring& c, VertexSet active, const SpreadInfo& first, const SpreadInfo& second,
                        Trace* trace);

} // namespace hcm::detail
