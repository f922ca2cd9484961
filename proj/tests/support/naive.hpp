#pragma once

// Independent reference implementations used as test oracles. They share only the
// Colouring lookup with the library and are deliberately slow and simple.

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <vector>

#include "hcm/colouring.hpp"
#include "hcm/matching.hpp"

namespace naive {

using hcm::Colouring;
using hcm::Triple;
using hcm::VertexSet;

/// All triples inside `s`, listed by nested loops in colex order.
inline std::vector<Triple> triples_in(VertexSet s)
{
    const auto v = s.to_vector();
    std::vector<Triple> out;
    for (std::size_t k = 2; k < v.size(); ++k)
        for (std::size_t j = 1; j < k; ++j)
            for (std::size_t i = 0; i < j; ++i)
                out.emplace_back(v[i], v[j], v[k]);
    return out;
}

/// Position of (i,j,k) in the nested-loop listing of all triples on max(k)+1 vertices.
inline std::uint64_t position(int i, int j, int k)
{
    std::uint64_t pos = 0;
    for (int c = 2; c <= k; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a) {
                if (a == i && b == j && c == k)
                    return pos;
                ++pos;
            }
    return pos;
}

inline int colour(const Colouring& c, const Triple& t) { return c.colour(t).value(); }

/// Maximum matching by plain include/exclude recursion over the allowed triples.
inline int max_matching(const Colouring& c, VertexSet s, unsigned allowed_mask)
{
    std::vector<Triple> ts;
    for (const Triple& t : triples_in(s))
        if (allowed_mask & (1u << colour(c, t)))
            ts.push_back(t);
    int best = 0;
    auto rec = [&](auto&& self, std::size_t idx, std::uint64_t used, int size) -> void {
        best = std::max(best, size);
        if (best == s.size() / 3)
            return;
        for (std::size_t i = idx; i < ts.size(); ++i)
            if ((ts[i].vertices().bits() & used) == 0)
                self(self, i + 1, used | ts[i].vertices().bits(), size + 1);
    };
    rec(rec, 0, 0, 0);
    return best;
}

inline int max_two_coloured(const Colouring& c, VertexSet s)
{
    return std::max({max_matching(c, s, 0b0110), max_matching(c, s, 0b1010), max_matching(c, s, 0b1100)});
}

struct SplitColours {
    Triple a, b;
    int ca, cb;
};

/// The 10 splittings: every triple through the smallest vertex with its complement.
inline std::vector<SplitColours> splittings(const Colouring& c, VertexSet s)
{
    std::vector<SplitColours> out;
    const int lo = s.min();
    for (const Triple& t : triples_in(s))
        if (t.i == lo) {
            const Triple rest = Triple::of(s - t.vertices());
            out.push_back({t, rest, colour(c, t), colour(c, rest)});
        }
    return out;
}

struct Classification {
    std::set<int> dominated;
    bool universal = false;
    std::set<int> spread_colours;
    std::set<std::pair<int, int>> levels;  // (colour, level) over all demonstration pairs
};

inline int next(int a) { return a % 3 + 1; }
inline int prev(int a) { return (a + 1) % 3 + 1; }

inline Classification classify(const Colouring& c, VertexSet s)
{
    Classification out;
    const auto sp = splittings(c, s);
    for (int a = 1; a <= 3; ++a) {
        bool dom = true;
        for (const auto& x : sp)
            dom = dom && (x.ca == a || x.cb == a);
        if (dom)
            out.dominated.insert(a);
    }
    out.universal = out.dominated.empty();
    for (int a : out.dominated) {
        // Dominant triples of demonstration splittings coloured (a, a+1) and (a, a-1).
        std::vector<Triple> plus, minus;
        for (const auto& x : sp) {
            if (x.ca == a && x.cb == next(a)) plus.push_back(x.a);
            if (x.cb == a && x.ca == next(a)) plus.push_back(x.b);
            if (x.ca == a && x.cb == prev(a)) minus.push_back(x.a);
            if (x.cb == a && x.ca == prev(a)) minus.push_back(x.b);
        }
        for (const Triple& p : plus)
            for (const Triple& m : minus) {
                out.spread_colours.insert(a);
                out.levels.insert({a, (p.vertices() & m.vertices()).size()});
            }
    }
    return out;
}

/// All sets of four pairwise disjoint triples inside a 13-set, by choosing triple indices
/// in increasing order. Returns the count and, per colour, whether one avoids it.
struct Packings13 {
    long count = 0;
    std::array<bool, 3> avoidable{false, false, false};
};

inline Packings13 packings_13(const Colouring& c, VertexSet x)
{
    Packings13 out;
    const auto ts = triples_in(x);
    std::vector<int> cols;
    for (const Triple& t : ts)
        cols.push_back(colour(c, t));
    const std::size_t m = ts.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            if (ts[a].vertices().intersects(ts[b].vertices()))
                continue;
            const VertexSet ab = ts[a].vertices() | ts[b].vertices();
            for (std::size_t d = b + 1; d < m; ++d) {
                if (ab.intersects(ts[d].vertices()))
                    continue;
                const VertexSet abd = ab | ts[d].vertices();
                for (std::size_t e = d + 1; e < m; ++e) {
                    if (abd.intersects(ts[e].vertices()))
                        continue;
                    ++out.count;
                    for (int g = 1; g <= 3; ++g)
                        if (cols[a] != g && cols[b] != g && cols[d] != g && cols[e] != g)
                            out.avoidable[static_cast<std::size_t>(g - 1)] = true;
                }
            }
        }
    return out;
}

} // namespace naive
