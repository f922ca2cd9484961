#include "hcm/oracle.hpp"

#include <unordered_map>

namespace hcm {

namespace {

struct BudgetExhausted {};

class MatchingSearch {
public:
    MatchingSearch(const Colouring& c, ColourSet allowed, std::uint64_t budget)
        : c_(c), allowed_(allowed.bits()), budget_(budget)
    {
    }

    // Exact maximum number of disjoint allowed triples inside `rest`.
    int best(std::uint64_t rest)
    {
        const int bound = std::popcount(rest) / 3;
        if (bound == 0)
            return 0;
        if (auto it = memo_.find(rest); it != memo_.end())
            return it->second;
        if (++explored_ > budget_)
            throw BudgetExhausted{};

        const Vertex v = std::countr_zero(rest);
        const std::uint64_t others = rest & (rest - 1);
        int value = 0;
        for (std::uint64_t bs = others; bs != 0 && value < bound; bs &= bs - 1) {
            const Vertex b = std::countr_zero(bs);
            for (std::uint64_t ks = bs & (bs - 1); ks != 0 && value < bound; ks &= ks - 1) {
                const Vertex k = std::countr_zero(ks);
                if (!allowed(v, b, k))
                    continue;
                const std::uint64_t next = others & ~(std::uint64_t{1} << b) & ~(std::uint64_t{1} << k);
                value = std::max(value, 1 + best(next));
            }
        }
        // Leaving v uncovered can only help when it might beat the current value.
        if (value < std::popcount(others) / 3)
            value = std::max(value, best(others));
        memo_.emplace(rest, value);
        return value;
    }

    Matching reconstruct(std::uint64_t rest)
    {
        Matching m;
        while (best(rest) > 0) {
            const int target = best(rest);
            const Vertex v = std::countr_zero(rest);
            const std::uint64_t others = rest & (rest - 1);
            bool extended = false;
            for (std::uint64_t bs = others; bs != 0 && !extended; bs &= bs - 1) {
                const Vertex b = std::countr_zero(bs);
                for (std::uint64_t ks = bs & (bs - 1); ks != 0 && !extended; ks &= ks - 1) {
                    const Vertex k = std::countr_zero(ks);
                    if (!allowed(v, b, k))
                        continue;
                    const std::uint64_t next = others & ~(std::uint64_t{1} << b) & ~(std::uint64_t{1} << k);
                    if (1 + best(next) == target) {
                        m.triples.emplace_back(v, b, k);
                        rest = next;
                        extended = true;
                    }
                }
            }
            if (!extended)
                rest = others;
        }
        return m;
    }

    std::uint64_t explored() const { return explored_; }

private:
    bool allowed(Vertex a, Vertex b, Vertex k) const { return (allowed_ >> (c_.raw(a, b, k) - 1)) & 1u; }

    const Colouring& c_;
    unsigned allowed_;
    std::uint64_t budget_;
    std::uint64_t explored_ = 0;
    std::unordered_map<std::uint64_t, int> memo_;
};

void tag_avoided(const Colouring& c, Matching& m)
{
    const ColourSet used = m.colours_used(c);
    m.avoided.reset();
    for (Colour g : Colour::all())
        if (!used.contains(g)) {
            m.avoided = g;
            break;
        }
}

} // namespace

OracleResult max_matching_in_colours(const Colouring& c, VertexSet vertices, ColourSet allowed,
                                     std::optional<std::uint64_t> budget)
{
    if (allowed.empty())
        throw InputError("oracle needs at least one allowed colour");
    if (!vertices.is_subset_of(c.vertices()))
        throw BoundsError("oracle vertex set " + vertices.to_string() + " outside the colouring");

    OracleResult out;
    MatchingSearch search(c, allowed, budget.value_or(default_node_budget));
    try {
        out.matching = search.reconstruct(vertices.bits());
    } catch (const BudgetExhausted&) {
        out.budget_hit = true;
        out.matching = greedy_matching(c, vertices, allowed);
        // A matching covering all but |vertices| mod 3 vertices is maximum regardless.
        out.exact = out.matching.size() == vertices.size() / 3;
    }
    out.explored = search.explored();
    tag_avoided(c, out.matching);
    return out;
}

TwoColouredResult max_two_coloured(const Colouring& c, VertexSet vertices, std::optional<std::uint64_t> budget)
{
    const std::array<ColourSet, 3> pairs{ColourSet{Colour(1), Colour(2)}, ColourSet{Colour(1), Colour(3)},
                                         ColourSet{Colour(2), Colour(3)}};
    const int ceiling = vertices.size() / 3;
    std::optional<TwoColouredResult> best;
    bool all_exact = true;
    std::uint64_t explored = 0;
    for (const ColourSet& pair : pairs) {
        OracleResult r = max_matching_in_colours(c, vertices, pair, budget);
        explored += r.explored;
        all_exact = all_exact && r.exact;
        if (!best || r.matching.size() > best->result.matching.size())
            best = TwoColouredResult{pair, std::move(r)};
        if (best->result.matching.size() == ceiling)
            break;  // later pairs cannot do strictly better
    }
    best->result.explored = explored;
    best->result.exact = all_exact || best->result.matching.size() == ceiling;
    best->result.budget_hit = !all_exact;
    return *best;
}

Matching afl_mono_matching(const Colouring& c, VertexSet vertices)
{
    const ColourSet present = c.colours_within(vertices);
    if (present.size() == 3)
        throw PreconditionError("afl_mono_matching needs a set whose triples use at most two colours");
    Matching best;
    present.for_each([&](Colour g) {
        OracleResult r = max_matching_in_colours(c, vertices, ColourSet{g});
        if (r.matching.size() > best.size())
            best = std::move(r.matching);
    });
    tag_avoided(c, best);
    return best;
}

Matching kozos_perfect_12(const Colouring& c, VertexSet vertices, long* enumerated)
{
    if (vertices.size() != 12)
        throw InputError("kozos_perfect_12 needs exactly 12 vertices, got " + vertices.to_string());
    if (!vertices.is_subset_of(c.vertices()))
        throw BoundsError("vertex set " + vertices.to_string() + " outside the colouring");
    std::optional<Matching> first;
    long count = 0;
    std::array<Triple, 4> acc{};
    auto visit = [&](const std::array<Triple, 4>& m) {
        if (!first) {
            unsigned used = 0;
            for (const Triple& t : m)
                used |= 1u << (c.raw(t.i, t.j, t.k) - 1);
            if (used != 0b111u)
                first = Matching{{m.begin(), m.end()}, std::nullopt};
        }
        return false;
    };
    detail::perfect_matchings_rec(vertices.bits(), acc, 0, count, visit);
    if (enumerated)
        *enumerated = count;
    if (!first)
        throw FaithfulnessError("no perfect matching with at most two colours on " + vertices.to_string());
    tag_avoided(c, *first);
    return *first;
}

std::array<Matching, 3> pair_avoiding_matchings(const Colouring& c, VertexSet s)
{
    if (s.size() == 6) {
        const SextupleClass cls = classify_sextuple(c, s);
        if (!cls.universal())
            throw WitnessError("sextuple " + s.to_string() + " is not universal (dominated by " +
                               cls.dominated.to_string() + ")");
        std::array<Matching, 3> out;
        for (Colour g : Colour::all()) {
            const Splitting& split = *cls.avoiding_splits[static_cast<std::size_t>(g.value() - 1)];
            out[static_cast<std::size_t>(g.value() - 1)] = Matching{{split.first, split.second}, g};
        }
        return out;
    }
    if (s.size() == 13) {
        auto m = check_universal_13(c, s);
        if (!m)
            throw WitnessError("13-set " + s.to_string() + " is not universal");
        return *m;
    }
    throw InputError("universal sets have 6 or 13 vertices, got " + std::to_string(s.size()));
}

} // namespace hcm
