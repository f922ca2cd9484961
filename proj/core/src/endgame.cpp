// Intersecting spreads u (colour 1) and w (colour 2) after relabelling, where every colour-1
// triple meets u and every colour-2 triple meets w. The rest of the active set is a colour-3
// clique; a colour-3 matching covers all but at most 10 vertices and the strategies below
// finish the job.

#include <algorithm>

#include "hcm/bounds.hpp"
#include "hcm/oracle.hpp"
#include "proof.hpp"

namespace hcm {

namespace {

using detail::chunk;
using detail::Proof;

// Largest vertex count handed to the exact search in the re-extension strategy.
constexpr int exact_limit = 17;
// Cap on the number of left-out subsets tried per size in the re-extension strategy.
constexpr std::uint64_t subset_cap = 5000;

struct Endgame {
    Proof& proof;
    VertexSet active;
    SpreadInfo u;
    SpreadInfo w;
    VertexSet outside;  // active - (u + w), a colour-3 clique
    int target;
    unsigned enabled;

    void record(const std::string& strategy, bool success, int size)
    {
        if (TraceEvent* e = proof.emit(EventKind::endgame_strategy, strategy))
            e->values = {{"success", success ? 1 : 0}, {"size", size}, {"target", target}};
    }

    static Matching with(Matching base, const Matching& extra)
    {
        base.append(extra);
        return base;
    }

    // s1: leave a different set of clique vertices out of the colour-3 cover and search the
    // spreads plus those vertices exactly.
    std::optional<Matching> reextend()
    {
        const VertexSet spreads = u.vertices | w.vertices;
        std::optional<Matching> best;
        for (int left_out = outside.size() % 3; left_out <= outside.size(); left_out += 3) {
            if (spreads.size() + left_out > exact_limit)
                break;
            if (binomial(outside.size(), left_out) > subset_cap)
                continue;
            for_each_subset(outside, left_out, [&](VertexSet q) {
                const VertexSet z = spreads | q;
                const Matching base = chunk(outside - q);
                std::vector<ColourSet> pairs{ColourSet{Colour(1), Colour(3)}, ColourSet{Colour(2), Colour(3)}};
                if (base.size() == 0)
                    pairs.insert(pairs.begin(), ColourSet{Colour(1), Colour(2)});
                for (const ColourSet& pair : pairs) {
                    const OracleResult r = max_matching_in_colours(proof.c(), z, pair);
                    if (base.size() + r.matching.size() >= target) {
                        best = with(base, r.matching);
                        return true;
                    }
                }
                return false;
            });
            if (best)
                break;
        }
        return best;
    }

    // s2: perfect-matching enumeration on 12 vertices covers every active set of 12 to 14 vertices.
    std::optional<Matching> perfect_12()
    {
        if (active.size() < 12 || active.size() > 14)
            return std::nullopt;
        return kozos_perfect_12(proof.c(), active.lowest(12));
    }

    // s3: colour-3 cover plus the largest monochromatic matching of the uncovered vertices.
    std::optional<Matching> monochromatic_rest(const Matching& cover, VertexSet left)
    {
        if (proof.c().colours_within(left).contains(Colour(3)))
            throw FaithfulnessError("vertices left by a maximal colour-3 matching still span a colour-3 triple");
        const Matching mono = afl_mono_matching(proof.c(), left);
        Matching m = with(cover, mono);
        if (m.size() >= target)
            return m;
        return std::nullopt;
    }

    // s4: when 10 vertices are left and the spreads share one vertex, cover everything
    // except (optionally) a splitting of one spread by triples mixing spread-side vertices
    // with clique vertices.
    std::optional<Matching> mixed_cover(int left)
    {
        const VertexSet shared = u.vertices & w.vertices;
        if (left != 10 || shared.size() != 1)
            return std::nullopt;
        struct Option {
            VertexSet side_u, side_w;
            Matching split;
        };
        std::vector<Option> options;
        options.push_back({u.vertices - w.vertices, w.vertices - u.vertices, {}});
        auto two_coloured_split = [&](const SpreadInfo& s) -> std::optional<Matching> {
            for (const Splitting& sp : splittings_of(s.vertices))
                if (proof.colour(sp.first) != 3 && proof.colour(sp.second) != 3)
                    return Matching{{sp.first, sp.second}, std::nullopt};
            return std::nullopt;
        };
        if (auto split = two_coloured_split(u))
            options.push_back({VertexSet{}, w.vertices - u.vertices, *split});
        if (auto split = two_coloured_split(w))
            options.push_back({u.vertices - w.vertices, VertexSet{}, *split});

        const auto xs = outside.to_vector();
        for (const Option& opt : options) {
            const int su = opt.side_u.size(), sw = opt.side_w.size();
            for (int pu = 0; 2 * pu <= su; ++pu)
                for (int pw = 0; 2 * pw <= sw; ++pw) {
                    const int singles = su - 2 * pu + sw - 2 * pw;
                    if (2 * singles + pu + pw != static_cast<int>(xs.size()))
                        continue;
                    Matching m = opt.split;
                    std::size_t next = 0;
                    bool ok = true;
                    auto place = [&](VertexSet side, int pairs) {
                        const auto v = side.to_vector();
                        std::size_t i = 0;
                        for (int p = 0; p < pairs; ++p, i += 2)
                            m.triples.push_back(Triple::sorted(v[i], v[i + 1], xs[next++]));
                        for (; i < v.size(); ++i) {
                            m.triples.push_back(Triple::sorted(v[i], xs[next], xs[next + 1]));
                            next += 2;
                        }
                    };
                    place(opt.side_u, pu);
                    place(opt.side_w, pw);
                    for (const Triple& t : m.triples)
                        ok = ok && proof.colour(t) != 3;
                    if (ok && m.size() >= target)
                        return m;
                }
        }
        return std::nullopt;
    }

    Matching run()
    {
        proof.require_clique(outside, 3, VertexSet{}, "vertices outside both spreads");
        Matching cover = chunk(outside);
        const VertexSet leftover_outside = outside - cover.covered();
        cover.append(greedy_matching(proof.c(), (u.vertices | w.vertices) | leftover_outside, ColourSet{Colour(3)}));
        const VertexSet left = active - cover.covered();
        if (TraceEvent* e = proof.emit(EventKind::case_enter, "endgame")) {
            e->sets = {u.vertices, w.vertices, outside, left};
            e->colours = {proof.to_actual(1), proof.to_actual(2)};
            e->values = {{"left", left.size()}, {"target", target}};
        }

        std::optional<Matching> found;
        auto attempt = [&](const std::string& name, unsigned flag, auto&& strategy) {
            if (found || (enabled & flag) == 0)
                return;
            found = strategy();
            record(name, found.has_value(), found ? found->size() : 0);
        };
        attempt("reextend", endgame_reextend, [&] { return reextend(); });
        attempt("perfect_12", endgame_perfect_12, [&] { return perfect_12(); });
        attempt("monochromatic_rest", endgame_monochromatic_rest, [&] { return monochromatic_rest(cover, left); });
        attempt("mixed_cover", endgame_mixed_cover, [&] { return mixed_cover(left.size()); });
        if (!found)
            throw FaithfulnessError("every endgame strategy fell short of " + std::to_string(target) + " on " +
                                    active.to_string());

        const ColourSet used = found->colours_used(proof.c());
        if (used.size() > 2)
            throw FaithfulnessError("endgame matching uses three colours");
        int avoided = 3;
        for (int g : {3, 2, 1})
            if (!used.contains(Colour(g)))
                avoided = g;
        return proof.finish(std::move(*found), avoided);
    }
};

} // namespace

StepResult endgame(const Colouring& c, VertexSet active, const SpreadInfo& u, const SpreadInfo& w, Trace* trace,
                   unsigned strategies)
{
    if (u.colour == w.colour)
        throw InputError("endgame needs spreads of different colours");
    if (!u.vertices.intersects(w.vertices))
        throw InputError("endgame needs intersecting spreads");
    if (!(u.vertices | w.vertices).is_subset_of(active))
        throw InputError("endgame spreads must lie inside the active set");
    Proof proof(c, ColourFrame::mapping(u.colour, w.colour), trace);
    return detail::catching_escalation([&] {
        Endgame g{proof,
                  active,
                  proof.to_canonical(u),
                  proof.to_canonical(w),
                  active - u.vertices - w.vertices,
                  static_cast<int>(m_bound(active.size())),
                  strategies};
        return g.run();
    });
}

} // namespace hcm
