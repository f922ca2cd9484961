#include "hcm/trace.hpp"

#include <array>
#include <tuple>

#include "hcm/bounds.hpp"
#include "hcm/oracle.hpp"

namespace hcm {

namespace {

constexpr std::array<std::pair<EventKind, std::string_view>, 9> kind_names{{
    {EventKind::peel6, "PEEL6"},
    {EventKind::peel13, "PEEL13"},
    {EventKind::case_enter, "CASE_ENTER"},
    {EventKind::witness, "WITNESS"},
    {EventKind::restart, "RESTART"},
    {EventKind::clique_merge, "CLIQUE_MERGE"},
    {EventKind::forcing, "FORCING"},
    {EventKind::endgame_strategy, "ENDGAME_STRATEGY"},
    {EventKind::result, "RESULT"},
}};

} // namespace

std::string_view to_string(EventKind kind)
{
    for (const auto& [k, name] : kind_names)
        if (k == kind)
            return name;
    return "UNKNOWN";
}

std::optional<EventKind> event_kind_from_string(std::string_view name)
{
    for (const auto& [k, n] : kind_names)
        if (n == name)
            return k;
    return std::nullopt;
}

std::optional<std::int64_t> TraceEvent::value(std::string_view key) const
{
    for (const auto& [k, v] : values)
        if (k == key)
            return v;
    return std::nullopt;
}

TraceEvent& Trace::add(EventKind kind, std::string tag)
{
    TraceEvent& e = events.emplace_back();
    e.kind = kind;
    e.tag = std::move(tag);
    return e;
}

namespace {

class Replayer {
public:
    Replayer(const Colouring& c, ReplayReport& report) : c_(c), report_(report) {}

    void event(std::size_t index, const TraceEvent& e)
    {
        prefix_ = "event " + std::to_string(index) + " (" + std::string(to_string(e.kind)) + "): ";
        for (const Claim& claim : e.claims) {
            ++report_.claims_checked;
            if (claim.triple.k >= c_.n())
                fail("claim on " + claim.triple.to_string() + " is outside the colouring");
            else if (c_.colour(claim.triple) != claim.colour)
                fail("claim " + claim.triple.to_string() + " = " + std::to_string(claim.colour.value()) +
                     " but the colouring has " + std::to_string(c_.colour(claim.triple).value()));
        }
        switch (e.kind) {
        case EventKind::peel6:
        case EventKind::peel13:
            universal_set(e, e.kind == EventKind::peel6 ? 6 : 13);
            break;
        case EventKind::witness:
            witness(e);
            break;
        case EventKind::restart:
            restart(e);
            break;
        case EventKind::clique_merge:
            if (e.sets.size() != e.colours.size())
                fail("clique sets and colours differ in number");
            for (std::size_t i = 0; i < e.sets.size() && i < e.colours.size(); ++i)
                if (auto bad = is_clique(c_, e.sets[i], e.colours[i]))
                    fail("set " + e.sets[i].to_string() + " is not a clique: " + bad->to_string());
            break;
        case EventKind::forcing: {
            const auto v = e.value("vertex");
            if (e.sets.empty() || e.colours.empty() || !v)
                fail("forcing event without scope, colour or vertex");
            else if (!e.sets[0].contains(static_cast<Vertex>(*v)))
                fail("forcing vertex outside its scope");
            else if (auto bad = forcing_violation(c_, e.sets[0], static_cast<Vertex>(*v), e.colours[0]))
                fail("vertex " + std::to_string(*v) + " is not forcing: " + bad->to_string());
            break;
        }
        case EventKind::result:
            result(e);
            break;
        case EventKind::case_enter:
        case EventKind::endgame_strategy:
            break;
        }
    }

    void finish()
    {
        prefix_.clear();
        if (!saw_result_)
            fail("trace has no RESULT event");
        if (report_.restarts > c_.n() + 2)
            fail(std::to_string(report_.restarts) + " restarts exceed n + 2");
    }

private:
    void fail(const std::string& what)
    {
        report_.valid = false;
        report_.violations.push_back(prefix_ + what);
    }

    void universal_set(const TraceEvent& e, int size)
    {
        if (e.sets.empty() || e.sets[0].size() != size) {
            fail("expected a universal set of size " + std::to_string(size));
            return;
        }
        const VertexSet s = e.sets[0];
        try {
            pair_avoiding_matchings(c_, s);
            ++report_.certified_sets;
        } catch (const Error& err) {
            fail(std::string("set ") + s.to_string() + " failed certification: " + err.what());
        }
        if (e.matchings.size() != 3) {
            if (e.kind != EventKind::witness)
                fail("universal set event needs three matchings");
            return;
        }
        for (std::size_t g = 0; g < 3; ++g) {
            const Matching& m = e.matchings[g];
            const VerificationReport r = verify_matching(c_, m, size / 3);
            if (!r.valid || !m.avoided || m.avoided->value() != static_cast<int>(g) + 1 || !m.covered().is_subset_of(s))
                fail("matching avoiding colour " + std::to_string(g + 1) + " of " + s.to_string() + " is invalid");
        }
    }

    void witness(const TraceEvent& e)
    {
        if (e.tag == "Universal6")
            universal_set(e, 6);
        else if (e.tag == "Universal13")
            universal_set(e, 13);
        else if (e.tag == "LevelUpgrade" || e.tag == "ForeignSpread") {
            if (e.sets.empty() || e.sets[0].size() != 6 || e.colours.empty()) {
                fail("spread witness needs a sextuple and a colour");
                return;
            }
            bool ok = false;
            for (const SpreadInfo& s : classify_sextuple(c_, e.sets[0]).spreads)
                if (s.colour == e.colours[0] && (e.tag == "ForeignSpread" || s.level == 2))
                    ok = true;
            if (ok)
                ++report_.certified_sets;
            else
                fail("sextuple " + e.sets[0].to_string() + " is not the claimed spread");
        } else
            fail("unknown witness kind '" + e.tag + "'");
    }

    void restart(const TraceEvent& e)
    {
        ++report_.restarts;
        const auto b0 = e.value("before_size"), b1 = e.value("before_level2_deficit"), b2 = e.value("before_phase");
        const auto a0 = e.value("size"), a1 = e.value("level2_deficit"), a2 = e.value("phase");
        if (!b0 || !b1 || !b2 || !a0 || !a1 || !a2) {
            fail("restart event without a complete measure");
            return;
        }
        const auto before = std::tuple(*b0, *b1, *b2);
        const auto after = std::tuple(*a0, *a1, *a2);
        if (!(after < before))
            fail("restart measure did not decrease");
        if (last_after_ && before > *last_after_)
            fail("restart measure grew between restarts");
        last_after_ = after;
    }

    void result(const TraceEvent& e)
    {
        saw_result_ = true;
        if (e.matchings.empty()) {
            fail("result event without a matching");
            return;
        }
        const VerificationReport r = verify_matching(c_, e.matchings[0], static_cast<int>(m_bound(c_.n())));
        for (const std::string& v : r.violations)
            fail("final matching: " + v);
    }

    const Colouring& c_;
    ReplayReport& report_;
    std::string prefix_;
    bool saw_result_ = false;
    std::optional<std::tuple<std::int64_t, std::int64_t, std::int64_t>> last_after_;
};

} // namespace

ReplayReport replay_trace(const Colouring& c, const Trace& trace)
{
    ReplayReport report;
    if (trace.n != c.n()) {
        report.valid = false;
        report.violations.push_back("trace is for n=" + std::to_string(trace.n) + " but the colouring has n=" +
                                    std::to_string(c.n()));
        return report;
    }
    Replayer replayer(c, report);
    for (std::size_t i = 0; i < trace.events.size(); ++i)
        replayer.event(i, trace.events[i]);
    replayer.finish();
    return report;
}

} // namespace hcm
