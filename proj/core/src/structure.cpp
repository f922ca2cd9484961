#include "hcm/structure.hpp"

#include <algorithm>

namespace hcm {

namespace {

// Positions (within the sorted sextuple) of the two partners of the smallest vertex,
// in colex order of the resulting first half.
constexpr std::array<std::pair<int, int>, 10> partner_positions{{
    {1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5},
}};

Matching matching_of(const Splitting& s, Colour avoided)
{
    Matching m;
    m.triples = {s.first, s.second};
    m.avoided = avoided;
    return m;
}

} // namespace

std::array<Splitting, 10> splittings_of(VertexSet sextuple)
{
    if (sextuple.size() != 6)
        throw InputError("a sextuple needs exactly 6 vertices, got " + sextuple.to_string());
    const auto v = sextuple.to_vector();
    std::array<Splitting, 10> out;
    for (std::size_t s = 0; s < partner_positions.size(); ++s) {
        const auto [p, q] = partner_positions[s];
        const VertexSet first{v[0], v[static_cast<std::size_t>(p)], v[static_cast<std::size_t>(q)]};
        out[s] = Splitting{Triple::of(first), Triple::of(sextuple - first)};
    }
    return out;
}

SextupleClass classify_sextuple(const Colouring& c, VertexSet sextuple)
{
    if (!sextuple.is_subset_of(c.vertices()))
        throw BoundsError("sextuple " + sextuple.to_string() + " outside the colouring");
    const auto splits = splittings_of(sextuple);
    std::array<std::pair<int, int>, 10> colours;
    for (std::size_t s = 0; s < splits.size(); ++s)
        colours[s] = {c.colour(splits[s].first).value(), c.colour(splits[s].second).value()};

    SextupleClass out;
    out.vertices = sextuple;
    for (Colour g : Colour::all()) {
        for (std::size_t s = 0; s < splits.size(); ++s) {
            if (colours[s].first != g.value() && colours[s].second != g.value()) {
                out.avoiding_splits[static_cast<std::size_t>(g.value() - 1)] = splits[s];
                break;
            }
        }
        if (!out.avoiding_splits[static_cast<std::size_t>(g.value() - 1)])
            out.dominated.insert(g);
    }

    out.dominated.for_each([&](Colour alpha) {
        // Demonstration candidates: splittings with one half alpha and the other alpha+1 / alpha-1.
        auto candidates = [&](Colour partner) {
            std::vector<DemonstrationSplit> found;
            for (std::size_t s = 0; s < splits.size(); ++s) {
                const auto [x, y] = colours[s];
                if (x == alpha.value() && y == partner.value())
                    found.push_back({splits[s].first, splits[s].second});
                else if (y == alpha.value() && x == partner.value())
                    found.push_back({splits[s].second, splits[s].first});
            }
            return found;
        };
        const auto plus = candidates(alpha.next());
        const auto minus = candidates(alpha.prev());
        if (plus.empty() || minus.empty())
            return;

        std::optional<std::pair<std::size_t, std::size_t>> chosen;
        for (std::size_t p = 0; p < plus.size() && !chosen; ++p)
            for (std::size_t m = 0; m < minus.size() && !chosen; ++m)
                if ((plus[p].dominant.vertices() & minus[m].dominant.vertices()).size() == 2)
                    chosen = {p, m};
        if (!chosen)
            chosen = {0, 0};

        SpreadInfo info;
        info.vertices = sextuple;
        info.colour = alpha;
        info.plus = plus[chosen->first];
        info.minus = minus[chosen->second];
        info.dominating = info.plus.dominant.vertices() & info.minus.dominant.vertices();
        info.level = info.dominating.size();
        info.core = sextuple - info.dominating;
        if (info.level != 1 && info.level != 2)
            throw FaithfulnessError("spread " + sextuple.to_string() + " has impossible level " + std::to_string(info.level));
        out.spreads.push_back(info);
    });
    return out;
}

namespace {

bool is_universal_fast(const Colouring& c, const std::array<Vertex, 6>& v)
{
    unsigned avoidable = 0; // bit g-1 set once a splitting avoids colour g
    for (const auto& [p, q] : partner_positions) {
        std::array<Vertex, 3> rest{};
        std::size_t r = 0;
        for (int x = 1; x < 6; ++x)
            if (x != p && x != q)
                rest[r++] = v[static_cast<std::size_t>(x)];
        const int a = c.raw(v[0], v[static_cast<std::size_t>(p)], v[static_cast<std::size_t>(q)]);
        const int b = c.raw(rest[0], rest[1], rest[2]);
        avoidable |= 0b111u & ~((1u << (a - 1)) | (1u << (b - 1)));
        if (avoidable == 0b111u)
            return true;
    }
    return false;
}

} // namespace

std::optional<std::pair<VertexSet, SextupleClass>> find_universal_sextuple(const Colouring& c, VertexSet w)
{
    std::optional<std::pair<VertexSet, SextupleClass>> found;
    for_each_subset(w, 6, [&](VertexSet s) {
        std::array<Vertex, 6> v{};
        std::size_t i = 0;
        for (Vertex x : s)
            v[i++] = x;
        if (!is_universal_fast(c, v))
            return false;
        found.emplace(s, classify_sextuple(c, s));
        return true;
    });
    return found;
}

std::vector<SpreadInfo> scan_spreads(const Colouring& c, VertexSet w, std::optional<Colour> colour_filter)
{
    std::vector<SpreadInfo> out;
    for_each_subset(w, 6, [&](VertexSet s) {
        for (SpreadInfo& info : classify_sextuple(c, s).spreads)
            if (!colour_filter || info.colour == *colour_filter)
                out.push_back(std::move(info));
        return false;
    });
    return out;
}

namespace {

// Cheap pre-filter: a spread needs all three colours among its 20 triples.
bool has_all_colours(const Colouring& c, VertexSet s)
{
    const auto v = s.to_vector();
    unsigned bits = 0;
    for (std::size_t k = 2; k < 6; ++k)
        for (std::size_t j = 1; j < k; ++j)
            for (std::size_t i = 0; i < j; ++i)
                bits |= 1u << (c.raw(v[i], v[j], v[k]) - 1);
    return bits == 0b111u;
}

} // namespace

std::optional<SpreadInfo> find_spread(const Colouring& c, VertexSet w, const SpreadQuery& query)
{
    std::optional<SpreadInfo> first;
    for_each_subset(w, 6, [&](VertexSet s) {
        if (!has_all_colours(c, s))
            return false;
        for (const SpreadInfo& info : classify_sextuple(c, s).spreads) {
            if (!query.colours.contains(info.colour))
                continue;
            if (!first)
                first = info;
            if (!query.prefer_level2 || info.level == 2) {
                first = info;
                return true;
            }
        }
        return false;
    });
    return first;
}

std::vector<std::pair<Vertex, Vertex>> critical_pairs(const SpreadInfo& s)
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const Triple& t : {s.plus.dominant, s.minus.dominant})
        for (auto p : {std::pair{t.i, t.j}, std::pair{t.i, t.k}, std::pair{t.j, t.k}})
            out.push_back(p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Triple> is_clique(const Colouring& c, VertexSet s, Colour colour)
{
    const auto v = s.to_vector();
    for (std::size_t k = 2; k < v.size(); ++k)
        for (std::size_t j = 1; j < k; ++j)
            for (std::size_t i = 0; i < j; ++i)
                if (c.raw(v[i], v[j], v[k]) != colour.value())
                    return Triple(v[i], v[j], v[k]);
    return std::nullopt;
}

std::optional<Triple> forcing_violation(const Colouring& c, VertexSet w, Vertex v, Colour colour)
{
    if (!w.contains(v))
        throw InputError("forcing check: vertex " + std::to_string(v) + " not in " + w.to_string());
    const auto others = (w - VertexSet{v}).to_vector();
    std::optional<Triple> lowest;
    for (std::size_t b = 1; b < others.size(); ++b)
        for (std::size_t a = 0; a < b; ++a)
            if (c.raw_unordered(v, others[a], others[b]) != colour.value()) {
                const Triple t = Triple::sorted(v, others[a], others[b]);
                if (!lowest || t < *lowest)
                    lowest = t;
            }
    return lowest;
}

bool is_forcing(const Colouring& c, VertexSet w, Vertex v, Colour colour)
{
    return !forcing_violation(c, w, v, colour).has_value();
}

std::optional<std::array<Matching, 3>> check_universal_13(const Colouring& c, VertexSet x)
{
    if (x.size() != 13)
        throw InputError("universal 13-set check needs exactly 13 vertices, got " + x.to_string());
    if (!x.is_subset_of(c.vertices()))
        throw BoundsError("13-set " + x.to_string() + " outside the colouring");
    std::array<std::optional<Matching>, 3> found;
    int missing = 3;
    for_each_packing_13(x, [&](const std::array<Triple, 4>& packing) {
        unsigned used = 0;
        for (const Triple& t : packing)
            used |= 1u << (c.raw(t.i, t.j, t.k) - 1);
        for (Colour g : Colour::all()) {
            auto& slot = found[static_cast<std::size_t>(g.value() - 1)];
            if (!slot && (used & (1u << (g.value() - 1))) == 0) {
                slot = Matching{{packing.begin(), packing.end()}, g};
                --missing;
            }
        }
        return missing == 0;
    });
    if (missing != 0)
        return std::nullopt;
    return std::array<Matching, 3>{*found[0], *found[1], *found[2]};
}

std::string to_string(WitnessKind kind)
{
    switch (kind) {
    case WitnessKind::universal6: return "Universal6";
    case WitnessKind::universal13: return "Universal13";
    case WitnessKind::foreign_spread: return "ForeignSpread";
    case WitnessKind::level_upgrade: return "LevelUpgrade";
    case WitnessKind::faithfulness: return "Faithfulness";
    }
    return "Unknown";
}

std::optional<Witness> find_witness(const Colouring& c, VertexSet s, std::optional<Colour> colour_context)
{
    if (s.size() > 14)
        throw ScopeError("find_witness is limited to 14 vertices, got " + std::to_string(s.size()));

    if (auto u = find_universal_sextuple(c, s)) {
        Witness w;
        w.kind = WitnessKind::universal6;
        w.vertices = u->first;
        for (Colour g : Colour::all())
            w.matchings.push_back(matching_of(*u->second.avoiding_splits[static_cast<std::size_t>(g.value() - 1)], g));
        w.context = "universal sextuple inside " + s.to_string();
        return w;
    }

    if (s.size() >= 13) {
        std::optional<Witness> found;
        for_each_subset(s, 13, [&](VertexSet x) {
            auto matchings = check_universal_13(c, x);
            if (!matchings)
                return false;
            Witness w;
            w.kind = WitnessKind::universal13;
            w.vertices = x;
            w.matchings.assign(matchings->begin(), matchings->end());
            w.context = "universal 13-set inside " + s.to_string();
            found = std::move(w);
            return true;
        });
        if (found)
            return found;
    }

    if (colour_context) {
        SpreadQuery query;
        query.colours = ColourSet::full();
        query.colours.erase(*colour_context);
        query.prefer_level2 = false;
        if (auto spread = find_spread(c, s, query)) {
            Witness w;
            w.kind = WitnessKind::foreign_spread;
            w.vertices = spread->vertices;
            w.spread = spread;
            w.context = "spread in colour " + std::to_string(spread->colour.value()) + " where only colour " +
                        std::to_string(colour_context->value()) + " was expected";
            return w;
        }
    }
    return std::nullopt;
}

} // namespace hcm
