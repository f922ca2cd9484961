// All spreads of the working set share one colour, relabelled to 1 here. Either some
// colour-1 triple is covered by a colour-2 and a colour-3 triple (explicit matchings follow),
// or vertices whose triples are all colour 1 ("forcing" vertices) can be set aside one by
// one until the remainder has no colour-1 triple.

#include <array>
#include <string>

#include "hcm/bounds.hpp"
#include "hcm/oracle.hpp"
#include "proof.hpp"

namespace hcm {

namespace {

using detail::chunk;
using detail::Proof;

struct Forcing {
    Vertex vertex;
    VertexSet scope;
};

struct Covering {
    Triple a;  // colour 1
    Triple b;  // colour beta, shares two vertices with a
    Triple c;  // colour gamma, contains v1
    Vertex v1;
};

int other_of(int beta) { return 5 - beta; }  // the non-1 colour different from beta

class OneSpread {
public:
    OneSpread(Proof& proof, VertexSet s) : p_(proof), s_(s), cur_(s) {}

    OneSpreadOutcome run()
    {
        for (;;) {
            count_incidences();
            if (auto cov = find_covering())
                return matching(covering_matching(*cov));
            if (has_disjoint_covering())
                p_.fail(disjoint_.b.vertices() | disjoint_.c.vertices(),
                        "colour-1 triple covered by two disjoint triples of the other colours");

            const auto adjacent = find_adjacent_pair();
            if (!adjacent) {
                if (colour_count_[1] == 0) {
                    if (forcing_.empty()) {
                        emit("one_spread/no_colour");
                        OneSpreadOutcome out;
                        out.kind = OneSpreadOutcome::Kind::no_triples_of_colour;
                        out.colour = p_.to_actual(1);
                        return out;
                    }
                    return matching(terminal());
                }
                // every triple left is colour 1
                return matching({complete(chunk(cur_), 2), 2, "one_spread/monochromatic"});
            }

            const auto [a, b] = *adjacent;
            const int beta = p_.colour(b);
            const int gamma = other_of(beta);
            const Vertex v1 = (a.vertices() - b.vertices()).min();
            const VertexSet ab = a.vertices() | b.vertices();

            std::optional<Triple> c = first_triple_of_colour(cur_ - ab, gamma);
            if (!c) {
                // No gamma triple avoids a+b and none contains v1: a matching through b avoids gamma.
                Matching m;
                m.triples.push_back(b);
                const Matching rest = chunk(cur_ - b.vertices());
                for (const Triple& t : rest.triples)
                    p_.require_not(t, gamma, ab | t.vertices(), "triple beside the adjacent pair");
                m.append(rest);
                return matching({complete(std::move(m), gamma), gamma, "one_spread/adjacent_pair"});
            }

            const VertexSet involved = ab | c->vertices();
            const Vertex x = c->i;
            const Triple d = Triple::of((a.vertices() & b.vertices()) | VertexSet{x});
            p_.require_not(d, 1, involved, "triple covered by disjoint colour-2 and colour-3 triples");
            if (p_.colour(d) == beta) {
                const VertexSet e = VertexSet{v1} | (c->vertices() - VertexSet{x});
                p_.require(Triple::of(e), 1, involved, "complement of a non-1 triple in a 1-dominated sextuple");
            }
            if (auto bad = forcing_violation(p_.c(), cur_, v1, Colour(1)))
                p_.fail(involved | bad->vertices(), "vertex " + std::to_string(v1) + " should be forcing");

            if (TraceEvent* e = p_.emit(EventKind::forcing, "one_spread")) {
                e->sets = {cur_};
                e->colours = {p_.to_actual(1)};
                e->values = {{"vertex", v1}};
            }
            forcing_.push_back({v1, cur_});
            cur_.erase(v1);
        }
    }

private:
    struct Partial {
        Matching m;   // near-perfect on s
        int avoided;  // canonical
        std::string tag;
    };

    OneSpreadOutcome matching(Partial part)
    {
        emit(part.tag);
        OneSpreadOutcome out;
        out.kind = OneSpreadOutcome::Kind::matching_avoiding;
        out.colour = p_.to_actual(part.avoided);
        out.matching = p_.finish(std::move(part.m), part.avoided);
        return out;
    }

    void emit(const std::string& tag)
    {
        if (TraceEvent* e = p_.emit(EventKind::case_enter, tag)) {
            e->sets = {s_, cur_};
            e->colours = {p_.to_actual(1)};
        }
    }

    // Colour counts per vertex and per vertex pair inside cur.
    void count_incidences()
    {
        vertex_count_ = {};
        pair_count_.assign(64 * 64, {});
        colour_count_ = {};
        const auto v = cur_.to_vector();
        for (std::size_t k = 2; k < v.size(); ++k)
            for (std::size_t j = 1; j < k; ++j)
                for (std::size_t i = 0; i < j; ++i) {
                    const int col = p_.colour(v[i], v[j], v[k]);
                    ++colour_count_[static_cast<std::size_t>(col)];
                    for (Vertex x : {v[i], v[j], v[k]})
                        ++vertex_count_[static_cast<std::size_t>(x)][static_cast<std::size_t>(col)];
                    for (auto [x, y] : {std::pair{v[i], v[j]}, std::pair{v[i], v[k]}, std::pair{v[j], v[k]}}) {
                        ++pair_count_[static_cast<std::size_t>(x * 64 + y)][static_cast<std::size_t>(col)];
                        ++pair_count_[static_cast<std::size_t>(y * 64 + x)][static_cast<std::size_t>(col)];
                    }
                }
    }

    template <typename F>
    std::optional<Covering> scan_colour_one_pairs(F&& pick_c)
    {
        const auto v = cur_.to_vector();
        for (std::size_t k = 2; k < v.size(); ++k)
            for (std::size_t j = 1; j < k; ++j)
                for (std::size_t i = 0; i < j; ++i) {
                    const Triple a(v[i], v[j], v[k]);
                    if (p_.colour(a) != 1)
                        continue;
                    for (Vertex v1 : {a.k, a.j, a.i}) {
                        const VertexSet pair = a.vertices() - VertexSet{v1};
                        for (Vertex v4 : cur_ - a.vertices()) {
                            const Triple b = Triple::of(pair | VertexSet{v4});
                            const int beta = p_.colour(b);
                            if (beta == 1)
                                continue;
                            const int gamma = other_of(beta);
                            if (vertex_count_[static_cast<std::size_t>(v1)][static_cast<std::size_t>(gamma)] == 0)
                                continue;
                            if (auto c = pick_c(a, b, v1, gamma))
                                return Covering{a, b, *c, v1};
                        }
                    }
                }
        return std::nullopt;
    }

    // Covering with |c & b| >= 1, preferring |c & b| = 2 for the same (a, b).
    std::optional<Covering> find_covering()
    {
        return scan_colour_one_pairs([&](const Triple& a, const Triple& b, Vertex v1, int gamma) -> std::optional<Triple> {
            const Vertex v4 = (b.vertices() - a.vertices()).min();
            for (Vertex p : b.vertices() & a.vertices()) {
                const Triple c = Triple::sorted(v1, p, v4);
                if (p_.colour(c) == gamma)
                    return c;
            }
            const VertexSet ab = a.vertices() | b.vertices();
            for (Vertex q : b.vertices()) {
                // gamma triples through v1 and q whose third vertex lies outside a+b
                int count = pair_count_[static_cast<std::size_t>(v1 * 64 + q)][static_cast<std::size_t>(gamma)];
                for (Vertex inside : ab - VertexSet{v1, q})
                    if (p_.colour(v1, q, inside) == gamma)
                        --count;
                if (count == 0)
                    continue;
                for (Vertex w : cur_ - ab)
                    if (p_.colour(v1, q, w) == gamma)
                        return Triple::sorted(v1, q, w);
            }
            return std::nullopt;
        });
    }

    bool has_disjoint_covering()
    {
        auto found = scan_colour_one_pairs([&](const Triple& a, const Triple& b, Vertex v1, int gamma) -> std::optional<Triple> {
            const auto outside = (cur_ - (a.vertices() | b.vertices())).to_vector();
            for (std::size_t y = 1; y < outside.size(); ++y)
                for (std::size_t x = 0; x < y; ++x)
                    if (p_.colour(v1, outside[x], outside[y]) == gamma)
                        return Triple::sorted(v1, outside[x], outside[y]);
            return std::nullopt;
        });
        if (found)
            disjoint_ = *found;
        return found.has_value();
    }

    Partial covering_matching(const Covering& cov)
    {
        const int beta = p_.colour(cov.b);
        const int gamma = other_of(beta);
        const VertexSet a = cov.a.vertices(), b = cov.b.vertices(), c = cov.c.vertices();
        const VertexSet span = a | b | c;
        const VertexSet rest = cur_ - span;
        Matching m = chunk(rest);
        for (const Triple& t : m.triples)
            p_.require(t, 1, span | t.vertices(), "triple disjoint from a rainbow cover");
        const auto left = (rest - m.covered()).to_vector();
        int avoided = 2;

        if (span.size() == 4) {
            // c lies inside a + b: c = {v1, s, v4}; t is the vertex of a & b outside c
            if (left.size() <= 1) {
                m.triples.push_back(cov.a);
            } else {
                const Vertex x = left[0], y = left[1];
                m.triples.push_back(cov.b);
                const Triple closing = Triple::sorted(x, y, cov.v1);
                p_.require(closing, 1, span | VertexSet{x, y}, "complement of b in a 1-dominated sextuple");
                m.triples.push_back(closing);
                avoided = gamma;
            }
        } else {
            const VertexSet off_b = span - b;  // {v1, w}
            const VertexSet off_c = span - c;
            if (left.empty()) {
                m.triples.push_back(cov.a);
            } else if (left.size() == 1) {
                const Triple closing = Triple::of(off_b | VertexSet{left[0]});
                p_.require(closing, 1, span | closing.vertices(), "complement of b in a 1-dominated sextuple");
                m.triples.push_back(closing);
                m.triples.push_back(cov.b);
                avoided = gamma;
            } else {
                const Triple first = Triple::of(off_b | VertexSet{left[0]});
                const Triple second = Triple::of(off_c | VertexSet{left[1]});
                p_.require(first, 1, span | first.vertices(), "complement of b in a 1-dominated sextuple");
                p_.require(second, 1, span | second.vertices(), "complement of c in a 1-dominated sextuple");
                m.triples.push_back(first);
                m.triples.push_back(second);
            }
        }
        if (m.size() != cur_.size() / 3)
            throw FaithfulnessError("rainbow-cover recipe did not give a near-perfect matching of " + cur_.to_string());
        const char* tag = span.size() == 4 ? "one_spread/cover_inside" : "one_spread/cover_overlapping";
        return {complete(std::move(m), avoided), avoided, tag};
    }

    std::optional<std::pair<Triple, Triple>> find_adjacent_pair() const
    {
        if (colour_count_[1] == 0 || colour_count_[1] == static_cast<int>(triple_count(cur_.size())))
            return std::nullopt;
        const auto v = cur_.to_vector();
        for (std::size_t k = 2; k < v.size(); ++k)
            for (std::size_t j = 1; j < k; ++j)
                for (std::size_t i = 0; i < j; ++i) {
                    const Triple a(v[i], v[j], v[k]);
                    if (p_.colour(a) != 1)
                        continue;
                    for (Vertex v1 : {a.k, a.j, a.i}) {
                        const VertexSet pair = a.vertices() - VertexSet{v1};
                        for (Vertex v4 : cur_ - a.vertices()) {
                            const Triple b = Triple::of(pair | VertexSet{v4});
                            if (p_.colour(b) != 1)
                                return std::pair{a, b};
                        }
                    }
                }
        return std::nullopt;
    }

    std::optional<Triple> first_triple_of_colour(VertexSet s, int colour) const
    {
        const auto v = s.to_vector();
        for (std::size_t k = 2; k < v.size(); ++k)
            for (std::size_t j = 1; j < k; ++j)
                for (std::size_t i = 0; i < j; ++i)
                    if (p_.colour(v[i], v[j], v[k]) == colour)
                        return Triple(v[i], v[j], v[k]);
        return std::nullopt;
    }

    // cur has no colour-1 triple and at least one forcing vertex was set aside.
    Partial terminal()
    {
        std::vector<VertexSet> pairs;  // 4-sets holding triples of both colours 2 and 3
        VertexSet used;
        while (pairs.size() < 3) {
            std::optional<VertexSet> found;
            for_each_subset(cur_ - used, 4, [&](VertexSet q) {
                unsigned seen = 0;
                for_each_subset(q, 3, [&](VertexSet t) {
                    seen |= 1u << p_.colour(Triple::of(t));
                    return false;
                });
                if ((seen & 0b1100u) == 0b1100u) {
                    found = q;
                    return true;
                }
                return false;
            });
            if (!found)
                break;
            pairs.push_back(*found);
            used |= *found;
        }

        if (pairs.size() == 3) {
            const VertexSet x = pairs[0] | pairs[1] | pairs[2] | VertexSet{forcing_.front().vertex};
            if (auto matchings = check_universal_13(p_.actual(), x)) {
                Witness w;
                w.kind = WitnessKind::universal13;
                w.vertices = x;
                w.matchings.assign(matchings->begin(), matchings->end());
                w.context = "three disjoint mixed 4-sets and a forcing vertex";
                throw detail::Escalation{std::move(w)};
            }
            p_.fail(x, "three mixed 4-sets and a forcing vertex should form a universal 13-set");
        }

        const VertexSet clique = cur_ - used;
        int delta = 2;
        if (clique.size() >= 3) {
            delta = p_.colour(Triple::of(clique.lowest(3)));
            p_.require_clique(clique, delta, used, "remainder after the mixed 4-sets");
        }
        Matching m;
        for (VertexSet q : pairs) {
            std::optional<Triple> t;
            for_each_subset(q, 3, [&](VertexSet s) {
                if (p_.colour(Triple::of(s)) == delta) {
                    t = Triple::of(s);
                    return true;
                }
                return false;
            });
            if (!t)
                p_.fail(q | clique.lowest(3), "mixed 4-set without a triple in the clique colour");
            p_.require(*t, delta, q, "mixed 4-set triple");
            m.triples.push_back(*t);
        }
        m.append(chunk(clique));
        const int avoided = other_of(delta);
        return {complete(std::move(m), avoided), avoided, "one_spread/terminal"};
    }

    // Adds triples anchored at forcing vertices to a matching on cur and checks that the
    // result is near-perfect on s. Each added triple lies in the scope of its earliest
    // forcing vertex, so it has colour 1.
    Matching complete(Matching m, int avoided)
    {
        std::vector<Vertex> loose = (cur_ - m.covered()).to_vector();
        std::size_t next_loose = 0, next_forcing = 0;
        while (next_forcing < forcing_.size()) {
            const std::size_t remaining = (loose.size() - next_loose) + (forcing_.size() - next_forcing);
            if (remaining < 3)
                break;
            std::array<Vertex, 3> t{forcing_[next_forcing++].vertex, -1, -1};
            for (std::size_t slot = 1; slot < 3; ++slot)
                t[slot] = next_loose < loose.size() ? loose[next_loose++] : forcing_[next_forcing++].vertex;
            const Triple triple = Triple::sorted(t[0], t[1], t[2]);
            p_.require(triple, 1, triple.vertices(), "triple through a forcing vertex");
            m.triples.push_back(triple);
        }
        if (m.size() != s_.size() / 3)
            throw FaithfulnessError("one-spread matching on " + s_.to_string() + " has " + std::to_string(m.size()) +
                                    " triples instead of " + std::to_string(s_.size() / 3));
        for (const Triple& t : m.triples)
            if (p_.colour(t) == avoided)
                throw FaithfulnessError("one-spread matching uses the colour it should avoid: " + t.to_string());
        return m;
    }

    Proof& p_;
    VertexSet s_;
    VertexSet cur_;
    std::vector<Forcing> forcing_;
    std::array<std::array<int, 4>, 64> vertex_count_{};
    std::vector<std::array<int, 4>> pair_count_;
    std::array<int, 4> colour_count_{};
    Covering disjoint_{};
};

} // namespace

OneSpreadOutcome proc_one_spread(const Colouring& c, VertexSet s, Colour alpha, Trace* trace)
{
    if (!s.is_subset_of(c.vertices()))
        throw BoundsError("proc_one_spread: " + s.to_string() + " outside the colouring");
    Proof proof(c, ColourFrame::rotation(alpha), trace, alpha);
    if (TraceEvent* e = proof.emit(EventKind::case_enter, "one_spread")) {
        e->sets = {s};
        e->colours = {alpha};
    }
    try {
        return OneSpread(proof, s).run();
    } catch (detail::Escalation& e) {
        OneSpreadOutcome out;
        out.kind = OneSpreadOutcome::Kind::escalate;
        out.witness = std::move(e.witness);
        return out;
    }
}

} // namespace hcm
