#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hcm/matching.hpp"

namespace hcm {

enum class EventKind { peel6, peel13, case_enter, witness, restart, clique_merge, forcing, endgame_strategy, result };

/// "PEEL6", "CASE_ENTER", ...
std::string_view to_string(EventKind kind);
std::optional<EventKind> event_kind_from_string(std::string_view name);

/// A colour the run relied on, in the colours of the input colouring.
struct Claim {
    Triple triple;
    Colour colour{1};

    bool operator==(const Claim&) const = default;
};

/// One pipeline decision. Which fields are filled depends on the kind:
///   PEEL6 / PEEL13    sets[0] = peeled set, matchings = its three avoiding matchings
///   CASE_ENTER        tag = case name, sets = spreads or sets involved
///   WITNESS           tag = witness kind, sets[0] = witness set, colours[0] = spread colour
///   RESTART           values = measure before and after
///   CLIQUE_MERGE      sets = cliques, colours = their colours
///   FORCING           sets[0] = scope, values["vertex"], colours[0] = forced colour
///   ENDGAME_STRATEGY  tag = strategy, values = outcome
///   RESULT            matchings[0] = final matching
/// Every event may carry claims that replay re-checks against the colouring.
struct TraceEvent {
    EventKind kind = EventKind::case_enter;
    std::string tag;
    std::vector<VertexSet> sets;
    std::vector<Colour> colours;
    std::vector<Claim> claims;
    std::vector<Matching> matchings;
    std::vector<std::pair<std::string, std::int64_t>> values;

    std::optional<std::int64_t> value(std::string_view key) const;
    bool operator==(const TraceEvent&) const = default;
};

struct Trace {
    int n = 0;
    std::vector<TraceEvent> events;

    TraceEvent& add(EventKind kind, std::string tag = {});
    bool operator==(const Trace&) const = default;
};

struct ReplayReport {
    bool valid = true;
    std::vector<std::string> violations;
    int claims_checked = 0;
    int certified_sets = 0;  // universal sets and upgraded spreads re-verified
    int restarts = 0;
};

/// Re-validates a trace against the colouring it was produced from: every claim, every
/// peeled or witnessed universal set (by enumeration), every level upgrade, forcing vertex
/// and clique, the strict decrease of the restart measure, the restart budget (n + 2) and
/// the final matching.
ReplayReport replay_trace(const Colouring& c, const Trace& trace);

} // namespace hcm
