#include "hcm/extractor.hpp"

#include "hcm/bounds.hpp"
#include "hcm/oracle.hpp"
#include "proof.hpp"

namespace hcm {

namespace {

using detail::chunk;

constexpr int max_level_upgrades = 2;

PeeledSet certify(const Colouring& c, VertexSet s)
{
    return PeeledSet{s, pair_avoiding_matchings(c, s)};
}

void emit_peel(SolveState& st, const PeeledSet& p)
{
    TraceEvent& e = st.trace.add(p.vertices.size() == 6 ? EventKind::peel6 : EventKind::peel13);
    e.sets = {p.vertices};
    e.matchings.assign(p.avoiding.begin(), p.avoiding.end());
}

void emit_witness(SolveState& st, const Witness& w)
{
    TraceEvent& e = st.trace.add(EventKind::witness, to_string(w.kind));
    e.sets = {w.vertices};
    if (w.spread)
        e.colours = {w.spread->colour};
    e.matchings = w.matchings;
    e.values = {{"size", w.vertices.size()}};
}

void restart(SolveState& st, RestartMeasure next)
{
    if (!(next < st.measure))
        throw FaithfulnessError("restart would not decrease the termination measure");
    TraceEvent& e = st.trace.add(EventKind::restart);
    e.values = {{"before_size", st.measure.active_size},
                {"before_level2_deficit", st.measure.level2_deficit},
                {"before_phase", st.measure.phase},
                {"size", next.active_size},
                {"level2_deficit", next.level2_deficit},
                {"phase", next.phase}};
    st.measure = next;
    ++st.restarts;
    if (st.restarts > st.colouring->n() + 2)
        throw FaithfulnessError("restart budget of n + 2 exhausted");
}

Matching tag_lowest_unused(const Colouring& c, Matching m)
{
    m.avoided = detail::unused_colour(c, m);
    if (!m.avoided)
        throw FaithfulnessError("matching uses all three colours");
    return m;
}

void enter(SolveState& st, const std::string& tag, std::vector<VertexSet> sets = {}, std::vector<Colour> colours = {})
{
    TraceEvent& e = st.trace.add(EventKind::case_enter, tag);
    e.sets = std::move(sets);
    e.colours = std::move(colours);
}

/// Two disjoint spreads of different colours. Level upgrades replace a spread in place and
/// restart the procedure on the same active set.
StepResult two_spread_phase(SolveState& st, SpreadInfo first, SpreadInfo second)
{
    const Colouring& c = *st.colouring;
    st.measure.level2_deficit = std::min(st.measure.level2_deficit, 2 - (first.level == 2) - (second.level == 2));
    for (int upgrades = 0;; ++upgrades) {
        StepResult r = proc_two_spreads(c, st.active, first, second, &st.trace);
        auto* w = std::get_if<Witness>(&r);
        if (!w || w->kind != WitnessKind::level_upgrade)
            return r;
        if (upgrades == max_level_upgrades || !w->spread || w->spread->level != 2)
            throw FaithfulnessError("level upgrade did not add a level-2 spread");
        SpreadInfo& replaced = w->spread->colour == first.colour ? first : second;
        if (replaced.level != 1)
            throw FaithfulnessError("level upgrade replaced a level-2 spread");
        replaced = *w->spread;
        emit_witness(st, *w);
        restart(st, RestartMeasure{st.measure.active_size, st.measure.level2_deficit - 1, 0});
    }
}

/// Matching on `rest` avoiding d (from the one-spread procedure) completed by the splitting
/// of spread `s` that also avoids d.
Matching complete_with_splitting(const SpreadInfo& s, Matching m)
{
    const Colour d = *m.avoided;
    if (d == s.colour.next())
        m.triples.insert(m.triples.end(), {s.minus.dominant, s.minus.partner});
    else if (d == s.colour.prev())
        m.triples.insert(m.triples.end(), {s.plus.dominant, s.plus.partner});
    else
        throw FaithfulnessError("one-spread matching avoids the spread colour");
    return m;
}

/// One-spread procedure on `s` with every spread coloured `alpha`. A matching comes back as
/// is; no triples of colour alpha returns nothing.
std::optional<StepResult> one_spread(SolveState& st, VertexSet s, Colour alpha)
{
    OneSpreadOutcome out = proc_one_spread(*st.colouring, s, alpha, &st.trace);
    switch (out.kind) {
    case OneSpreadOutcome::Kind::matching_avoiding:
        return StepResult(std::move(out.matching));
    case OneSpreadOutcome::Kind::escalate:
        return StepResult(std::move(*out.witness));
    case OneSpreadOutcome::Kind::no_triples_of_colour:
        break;
    }
    return std::nullopt;
}

} // namespace

SolveState::SolveState(const Colouring& c) : colouring(&c), active(c.vertices())
{
    trace.n = c.n();
    measure.active_size = active.size();
}

void peel_phase(SolveState& st)
{
    const Colouring& c = *st.colouring;
    while (auto found = find_universal_sextuple(c, st.active)) {
        PeeledSet p = certify(c, found->first);
        emit_peel(st, p);
        st.active -= p.vertices;
        st.peeled6.push_back(std::move(p));
    }
    st.measure = RestartMeasure{st.active.size(), 3, 1};
}

Matching assemble(const SolveState& st, const Matching& core, Colour avoided)
{
    Matching m = core;
    m.avoided = avoided;
    for (const auto* list : {&st.peeled6, &st.peeled13})
        for (const PeeledSet& p : *list)
            m.append(p.avoiding[static_cast<std::size_t>(avoided.value() - 1)]);
    return m;
}

Matching case_no_spreads(const Colouring& c, VertexSet active, Trace* trace)
{
    const ColourSet used = c.colours_within(active);
    if (used.size() > 2)
        throw FaithfulnessError("active set " + active.to_string() + " has no spreads but uses three colours");
    if (trace) {
        TraceEvent& e = trace->add(EventKind::case_enter, "no_spreads");
        e.sets = {active};
    }
    return tag_lowest_unused(c, chunk(active));
}

StepResult dispatch(SolveState& st)
{
    const Colouring& c = *st.colouring;
    const VertexSet active = st.active;
    if (active.size() < 9) {
        enter(st, "small", {active});
        return tag_lowest_unused(c, chunk(active));
    }

    const auto u = find_spread(c, active, SpreadQuery{});
    if (!u)
        return case_no_spreads(c, active, &st.trace);
    const Colour a = u->colour;
    ColourSet others = ColourSet::full();
    others.erase(a);

    if (auto x = find_spread(c, active - u->vertices, SpreadQuery{others, true}))
        return two_spread_phase(st, *u, *x);

    const auto y = find_spread(c, active, SpreadQuery{others, true});
    if (!y) {
        if (auto r = one_spread(st, active, a))
            return std::move(*r);
        throw FaithfulnessError("spread of colour " + std::to_string(a.value()) + " but no triple of that colour");
    }

    if (auto r = one_spread(st, active - u->vertices, a)) {
        if (auto* m = std::get_if<Matching>(&*r))
            return complete_with_splitting(*u, std::move(*m));
        return std::move(*r);
    }

    const Colour b = y->colour;
    ColourSet not_b = ColourSet::full();
    not_b.erase(b);
    if (auto x = find_spread(c, active - y->vertices, SpreadQuery{not_b, true}))
        return two_spread_phase(st, *y, *x);
    if (auto r = one_spread(st, active - y->vertices, b)) {
        if (auto* m = std::get_if<Matching>(&*r))
            return complete_with_splitting(*y, std::move(*m));
        return std::move(*r);
    }
    return endgame(c, active, *u, *y, &st.trace);
}

SolveResult solve(const Colouring& c)
{
    SolveState st(c);
    peel_phase(st);
    Matching core;
    for (;;) {
        StepResult r = dispatch(st);
        if (auto* m = std::get_if<Matching>(&r)) {
            core = std::move(*m);
            break;
        }
        Witness& w = std::get<Witness>(r);
        if (w.kind != WitnessKind::universal6 && w.kind != WitnessKind::universal13)
            throw FaithfulnessError("unexpected " + to_string(w.kind) + " witness at top level: " + w.context);
        if (!w.vertices.is_subset_of(st.active))
            throw FaithfulnessError("witness " + w.vertices.to_string() + " leaves the active set");
        PeeledSet p = certify(c, w.vertices);
        emit_witness(st, w);
        emit_peel(st, p);
        st.active -= p.vertices;
        (p.vertices.size() == 6 ? st.peeled6 : st.peeled13).push_back(std::move(p));
        restart(st, RestartMeasure{st.active.size(), 3, 1});
        peel_phase(st);
    }

    if (core.covered().intersects(c.vertices() - st.active))
        throw FaithfulnessError("core matching leaves the active set");
    if (core.size() < m_bound(st.active.size()))
        throw FaithfulnessError("core matching of size " + std::to_string(core.size()) + " is below m(" +
                                std::to_string(st.active.size()) + ")");
    if (!core.avoided)
        throw FaithfulnessError("core matching does not name an avoided colour");
    Matching full = assemble(st, core, *core.avoided);
    const VerificationReport report = verify_matching(c, full, static_cast<int>(m_bound(c.n())));
    if (!report.valid)
        throw FaithfulnessError("assembled matching fails verification: " + report.violations.front());
    TraceEvent& e = st.trace.add(EventKind::result);
    e.matchings = {full};
    e.values = {{"size", full.size()}, {"bound", m_bound(c.n())}, {"restarts", st.restarts}};
    return SolveResult{std::move(full), std::move(st.trace), st.restarts};
}

} // namespace hcm
