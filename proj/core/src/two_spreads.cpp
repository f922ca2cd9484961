// Two disjoint spreads of colours 1 and 2 (after relabelling). The dominating vertices of
// each spread are grown into "hats" until every other vertex belongs to one of them; the
// hats plus the dominant triples are cliques of colours 1 and 2, which merge into a
// near-perfect matching avoiding colour 3.

#include "hcm/bounds.hpp"
#include "hcm/oracle.hpp"
#include "proof.hpp"

namespace hcm {

namespace {

using detail::chunk;
using detail::Escalation;
using detail::Proof;

// Dominant triple with the dominating vertices replaced by `d`.
VertexSet substituted(const Triple& dominant, const SpreadInfo& s, VertexSet d)
{
    return (dominant.vertices() - s.dominating) | d;
}

struct Spoil {
    VertexSet replacement;  // the subset standing in for the dominating vertices
    Triple triple;          // critical pair + the new vertex, with the wrong colour
};

// First way in which `w` breaks the hat property: some replacement of the dominating vertices
// by vertices of `hat` and some critical pair of the modified sextuple form a triple with w
// whose colour is not the spread colour.
std::optional<Spoil> spoil(const Colouring& c, const SpreadInfo& s, VertexSet hat, Vertex w)
{
    std::optional<Spoil> found;
    const int colour = s.colour.value();
    for_each_subset(hat, s.level, [&](VertexSet d) {
        for (const Triple& dominant : {s.plus.dominant, s.minus.dominant}) {
            const auto m = substituted(dominant, s, d).to_vector();
            for (std::size_t b = 1; b < m.size(); ++b)
                for (std::size_t a = 0; a < b; ++a)
                    if (c.raw_unordered(m[a], m[b], w) != colour) {
                        found = Spoil{d, Triple::sorted(m[a], m[b], w)};
                        return true;
                    }
        }
        return false;
    });
    return found;
}

void order_by_orientation(const SpreadInfo*& first, const SpreadInfo*& second)
{
    if (first->colour == second->colour)
        throw InputError("two-spread procedure needs spreads of different colours");
    if (first->vertices.intersects(second->vertices))
        throw InputError("two-spread procedure needs disjoint spreads");
    if (first->colour.next() != second->colour)
        std::swap(first, second);
}

// Hats for canonical spreads (colours 1 and 2); throws Escalation on a Universal13 witness.
HatSets grow_hats_in(Proof& proof, VertexSet active, const SpreadInfo& first, const SpreadInfo& second)
{
    HatSets hats{first, second, first.dominating, second.dominating};
    const VertexSet candidates = active - first.vertices - second.vertices;
    for (Vertex w : candidates) {
        const auto spoil1 = spoil(proof.c(), first, hats.hat1, w);
        if (!spoil1) {
            hats.hat1.insert(w);
            continue;
        }
        const auto spoil2 = spoil(proof.c(), second, hats.hat2, w);
        if (!spoil2) {
            hats.hat2.insert(w);
            continue;
        }
        const VertexSet x = first.core | spoil1->replacement | second.core | spoil2->replacement | VertexSet{w};
        if (x.size() == 13)
            if (auto matchings = check_universal_13(proof.actual(), x)) {
                Witness wit;
                wit.kind = WitnessKind::universal13;
                wit.vertices = x;
                wit.matchings.assign(matchings->begin(), matchings->end());
                wit.context = "vertex " + std::to_string(w) + " spoils both spreads";
                throw Escalation{std::move(wit)};
            }
        proof.fail(x, "vertex " + std::to_string(w) + " spoils both spreads but " + x.to_string() + " is not universal");
    }
    return hats;
}

std::optional<std::string> hat_violation_in(const Colouring& c, const SpreadInfo& s, const SpreadInfo& other,
                                            VertexSet hat, VertexSet other_hat)
{
    if (!s.dominating.is_subset_of(hat))
        return "hat " + hat.to_string() + " misses a dominating vertex";
    if (hat.intersects(s.core) || hat.intersects(other.vertices))
        return "hat " + hat.to_string() + " meets its own core or the other spread";
    if (hat.intersects(other_hat))
        return "hats " + hat.to_string() + " and " + other_hat.to_string() + " intersect";
    const int colour = s.colour.value();
    std::optional<std::string> problem;
    for_each_subset(hat, s.level, [&](VertexSet d) {
        for (const Triple& dominant : {s.plus.dominant, s.minus.dominant}) {
            const VertexSet m = substituted(dominant, s, d);
            const Triple t = Triple::of(m);
            if (c.colour(t) != s.colour) {
                problem = "modified dominant triple " + t.to_string() + " lost the spread colour";
                return true;
            }
            const auto mv = m.to_vector();
            for (Vertex w : hat - d)
                for (std::size_t b = 1; b < mv.size(); ++b)
                    for (std::size_t a = 0; a < b; ++a)
                        if (c.raw_unordered(mv[a], mv[b], w) != colour) {
                            problem = "critical pair {" + std::to_string(mv[a]) + "," + std::to_string(mv[b]) +
                                      "} with hat vertex " + std::to_string(w) + " lost the spread colour";
                            return true;
                        }
        }
        return false;
    });
    return problem;
}

Matching two_spreads_body(Proof& proof, VertexSet active, const SpreadInfo& first, const SpreadInfo& second)
{
    const HatSets hats = grow_hats_in(proof, active, first, second);
    const Colouring& c = proof.c();
    for (int side : {1, 2}) {
        const SpreadInfo& s = side == 1 ? first : second;
        const SpreadInfo& o = side == 1 ? second : first;
        const VertexSet hat = side == 1 ? hats.hat1 : hats.hat2;
        const VertexSet other_hat = side == 1 ? hats.hat2 : hats.hat1;
        if (auto problem = hat_violation_in(c, s, o, hat, other_hat))
            throw FaithfulnessError("hat of the colour-" + std::to_string(proof.to_actual(side).value()) +
                                    " spread: " + *problem);
    }
    if (!(active - first.core - second.core).is_subset_of(hats.hat1 | hats.hat2))
        throw FaithfulnessError("hats do not cover the active set outside the cores");

    // Each hat is a clique in its spread colour; a level-1 spread may instead reveal a
    // level-2 spread of the same colour next to its core.
    for (int side : {1, 2}) {
        const SpreadInfo& s = side == 1 ? first : second;
        const VertexSet hat = side == 1 ? hats.hat1 : hats.hat2;
        const auto bad = is_clique(c, hat, Colour(side));
        if (!bad)
            continue;
        if (s.level == 1) {
            for (Vertex x : bad->vertices()) {
                const VertexSet candidate = s.core | VertexSet{x};
                for (const SpreadInfo& found : classify_sextuple(proof.actual(), candidate).spreads)
                    if (found.colour == proof.to_actual(side) && found.level == 2) {
                        Witness w;
                        w.kind = WitnessKind::level_upgrade;
                        w.vertices = candidate;
                        w.spread = found;
                        w.context = "hat triple " + bad->to_string() + " is not a clique triple";
                        throw Escalation{std::move(w)};
                    }
            }
        }
        proof.fail(s.core | bad->vertices(), "hat " + hat.to_string() + " is not a clique");
    }

    const VertexSet k1 = hats.hat1 | first.plus.dominant.vertices();
    const VertexSet k2 = hats.hat2 | second.minus.dominant.vertices();
    proof.require_clique(k1, 1, first.vertices, "hat with the plus dominant triple");
    proof.require_clique(k2, 2, second.vertices, "hat with the minus dominant triple");
    proof.require(first.plus.partner, 2, first.vertices, "plus partner of the colour-1 spread");
    proof.require(second.minus.partner, 1, second.vertices, "minus partner of the colour-2 spread");
    if (TraceEvent* e = proof.emit(EventKind::clique_merge, "hats")) {
        e->sets = {k1, k2};
        e->colours = {proof.to_actual(1), proof.to_actual(2)};
    }

    Matching m = detail::cliques2matching_in(proof, k1, k2, 1, 2);
    m.triples.push_back(first.plus.partner);
    m.triples.push_back(second.minus.partner);
    if (m.covered().size() != 3 * m.size() || m.size() != active.size() / 3)
        throw FaithfulnessError("two-spread matching is not near-perfect on " + active.to_string());
    return proof.finish(std::move(m), 3);
}

} // namespace

namespace detail {

Matching cliques2matching_in(Proof& proof, VertexSet u, VertexSet w, int colour_u, int colour_w)
{
    if (u.intersects(w) || u.size() < 3 || w.size() < 3)
        throw PreconditionError("clique merge needs disjoint sets of at least 3 vertices");
    proof.require_clique(u, colour_u, VertexSet{}, "first clique");
    proof.require_clique(w, colour_w, VertexSet{}, "second clique");

    Matching m;
    const int ru = u.size() % 3, rw = w.size() % 3;
    if (ru + rw <= 2) {
        m = chunk(u);
        m.append(chunk(w));
        return m;
    }
    // One side has residue 2; a cross triple with two vertices there fixes the residues.
    const bool u_heavy = ru == 2;
    const VertexSet heavy = u_heavy ? u : w;
    const VertexSet light = u_heavy ? w : u;
    const auto hv = heavy.to_vector();
    std::optional<Triple> cross;  // lowest colex candidate
    for (Vertex l : light)
        for (std::size_t b = 1; b < hv.size(); ++b)
            for (std::size_t a = 0; a < b; ++a) {
                const Triple t = Triple::sorted(hv[a], hv[b], l);
                const int col = proof.colour(t);
                if ((col == colour_u || col == colour_w) && (!cross || t < *cross))
                    cross = t;
            }
    if (!cross) {
        const VertexSet x = heavy.lowest(4) | light.lowest(2);
        const VertexSet y = heavy.lowest(3) | light.lowest(3);
        for (VertexSet s : {x, y})
            if (classify_sextuple(proof.actual(), s).universal()) {
                Witness wit;
                wit.kind = WitnessKind::universal6;
                wit.vertices = s;
                const auto matchings = pair_avoiding_matchings(proof.actual(), s);
                wit.matchings.assign(matchings.begin(), matchings.end());
                wit.context = "no cross triple between cliques " + u.to_string() + " and " + w.to_string();
                throw Escalation{std::move(wit)};
            }
        proof.fail(x | y, "no cross triple between the cliques and no universal sextuple");
    }
    proof.require_not(*cross, 6 - colour_u - colour_w, VertexSet{}, "cross triple between the cliques");
    m.triples.push_back(*cross);
    m.append(chunk(u - cross->vertices()));
    m.append(chunk(w - cross->vertices()));
    if (m.size() != (u.size() + w.size()) / 3)
        throw FaithfulnessError("clique merge is not near-perfect");
    return m;
}

Matching two_spreads_in(const Colouring& c, VertexSet active, const SpreadInfo& first, const SpreadInfo& second,
                        Trace* trace)
{
    const SpreadInfo* a = &first;
    const SpreadInfo* b = &second;
    order_by_orientation(a, b);
    if (!a->vertices.is_subset_of(active) || !b->vertices.is_subset_of(active))
        throw InputError("spreads must lie inside the active set");
    Proof proof(c, ColourFrame::rotation(a->colour), trace);
    if (TraceEvent* e = proof.emit(EventKind::case_enter, "two_spreads")) {
        e->sets = {a->vertices, b->vertices};
        e->colours = {a->colour, b->colour};
        e->values = {{"level_first", a->level}, {"level_second", b->level}};
    }
    return two_spreads_body(proof, active, proof.to_canonical(*a), proof.to_canonical(*b));
}

} // namespace detail

StepResult proc_two_spreads(const Colouring& c, VertexSet active, const SpreadInfo& first, const SpreadInfo& second,
                            Trace* trace)
{
    return detail::catching_escalation([&] { return detail::two_spreads_in(c, active, first, second, trace); });
}

std::variant<HatSets, Witness> grow_hats(const Colouring& c, VertexSet active, const SpreadInfo& first,
                                         const SpreadInfo& second)
{
    const SpreadInfo* a = &first;
    const SpreadInfo* b = &second;
    order_by_orientation(a, b);
    Proof proof(c, ColourFrame::rotation(a->colour), nullptr);
    try {
        HatSets hats = grow_hats_in(proof, active, proof.to_canonical(*a), proof.to_canonical(*b));
        hats.first = *a;
        hats.second = *b;
        return hats;
    } catch (Escalation& e) {
        return std::move(e.witness);
    }
}

std::optional<std::string> hat_violation(const Colouring& c, const HatSets& hats, int side)
{
    if (side != 1 && side != 2)
        throw InputError("hat side must be 1 or 2");
    return side == 1 ? hat_violation_in(c, hats.first, hats.second, hats.hat1, hats.hat2)
                     : hat_violation_in(c, hats.second, hats.first, hats.hat2, hats.hat1);
}

StepResult cliques2matching(const Colouring& c, VertexSet u, VertexSet w, std::pair<Colour, Colour> colours,
                            Trace* trace)
{
    if (colours.first == colours.second)
        throw InputError("clique merge needs two different colours");
    Proof proof(c, ColourFrame(), trace);
    return detail::catching_escalation([&] {
        Matching m = detail::cliques2matching_in(proof, u, w, colours.first.value(), colours.second.value());
        m.avoided = Colour(6 - colours.first.value() - colours.second.value());
        return m;
    });
}

} // namespace hcm
