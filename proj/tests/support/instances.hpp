#pragma once

// Instance builders shared by the test binaries.

#include <algorithm>
#include <array>
#include <random>
#include <string_view>
#include <vector>

#include "hcm/generators.hpp"

namespace fixtures {

using namespace hcm;

inline Colouring uniform(int n, int colour) { return Colouring(n, Colour(colour)); }

/// `base` with the 20 triples of the 6 vertices `at` recoloured like fixture `name`, each
/// colour shifted cyclically by `shift`.
inline Colouring with_fixture(const Colouring& base, std::string_view name, const std::array<int, 6>& at, int shift = 0)
{
    const Colouring f = fixture(name);
    std::vector<std::uint8_t> table(base.table().begin(), base.table().end());
    for (std::uint64_t r = 0; r < 20; ++r) {
        const Triple t = unrank_triple(r, 6);
        table[rank_triple(Triple::sorted(at[t.i], at[t.j], at[t.k]))] =
            static_cast<std::uint8_t>(f.colour(t).shifted(shift).value());
    }
    return Colouring(base.n(), std::move(table));
}

inline Colouring from_digits(int n, std::string_view digits)
{
    std::vector<std::uint8_t> table;
    for (char ch : digits)
        table.push_back(static_cast<std::uint8_t>(ch - '0'));
    return Colouring(n, std::move(table));
}

/// Vertex groups that colour a triple by the group holding two of its vertices, with fixture
/// gadgets planted on top and a little noise. Reaches the spread procedures far more often
/// than uniform colourings, which almost always peel down to fewer than 9 vertices.
inline Colouring planted(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<int> group(static_cast<std::size_t>(n));
    const int groups = 1 + static_cast<int>(rng() % 3);
    for (int& g : group)
        g = static_cast<int>(rng() % static_cast<std::uint64_t>(groups));
    const int gadgets = static_cast<int>(rng() % 5);
    const double noise = std::array<double, 6>{0, 0, 0, 0.003, 0.01, 0.03}[rng() % 6];
    int mixed = static_cast<int>(rng() % 7);
    if (mixed > 3)
        mixed -= 4;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::uint8_t> table(triple_count(n));
    for (std::uint64_t r = 0; r < table.size(); ++r) {
        const Triple t = unrank_triple(r, n);
        const int a = group[static_cast<std::size_t>(t.i)], b = group[static_cast<std::size_t>(t.j)],
                  c = group[static_cast<std::size_t>(t.k)];
        int col;
        if (a == b || a == c)
            col = a + 1;
        else if (b == c)
            col = b + 1;
        else
            col = mixed == 3 ? 1 + static_cast<int>(rng() % 3) : mixed + 1;
        if (unit(rng) < noise)
            col = 1 + static_cast<int>(rng() % 3);
        table[r] = static_cast<std::uint8_t>(col);
    }
    static constexpr std::array<std::string_view, 3> names{"FIX-A", "FIX-C", "FIX-A"};
    for (int g = 0; g < gadgets; ++g) {
        const int shift = static_cast<int>(rng() % 3);
        const bool aligned = rng() % 2;
        std::vector<int> candidates;
        for (int v = 0; v < n; ++v)
            if (!aligned || group[static_cast<std::size_t>(v)] == shift)
                candidates.push_back(v);
        if (candidates.size() < 6)
            continue;
        std::shuffle(candidates.begin(), candidates.end(), rng);
        std::array<int, 6> at{};
        std::copy_n(candidates.begin(), 6, at.begin());
        std::sort(at.begin(), at.end());
        const Colouring f = fixture(names[rng() % 3]);
        for (std::uint64_t r = 0; r < 20; ++r) {
            const Triple t = unrank_triple(r, 6);
            table[rank_triple(at[static_cast<std::size_t>(t.i)], at[static_cast<std::size_t>(t.j)],
                              at[static_cast<std::size_t>(t.k)])] =
                static_cast<std::uint8_t>(f.colour(t).shifted(shift).value());
        }
    }
    return Colouring(n, std::move(table));
}

/// FIX-A on 0..5 and its copy with colours 1 and 2 swapped on 6..11: disjoint spreads of
/// colours 1 and 2. Every other triple gets colour `filler`, or when `filler` is 0 a colour
/// drawn with integer weights chosen from `seed`.
inline Colouring spread_pair(int n, int filler, std::uint64_t seed = 0)
{
    std::mt19937_64 rng(seed);
    const std::array<std::uint64_t, 3> w{rng() % 5, rng() % 5, 1 + rng() % 5};
    const std::uint64_t total = w[0] + w[1] + w[2];
    const Colouring a = fixture("FIX-A");
    return Colouring::from_function(n, [&](const Triple& t) {
        if (t.k < 6)
            return a.colour(t);
        if (t.i >= 6 && t.k < 12) {
            const int v = a.colour(Triple(t.i - 6, t.j - 6, t.k - 6)).value();
            return Colour(v == 3 ? 3 : 3 - v);
        }
        if (filler != 0)
            return Colour(filler);
        std::uint64_t x = rng() % total;
        int col = 1;
        for (; x >= w[static_cast<std::size_t>(col - 1)]; ++col)
            x -= w[static_cast<std::size_t>(col - 1)];
        return Colour(col);
    });
}

/// Candidate endgame shape on 13, 16 or 19 vertices: triples meeting 0..5 prefer colour 1,
/// triples meeting 5..10 prefer colour 2, a few of either are colour 3, and the vertices
/// from 11 on form a colour-3 clique. Whether the two sextuples are spreads of colours 1
/// and 2 is up to the caller to check.
inline Colouring endgame_shape(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const VertexSet u = VertexSet::range(6), w = VertexSet::range(11) - VertexSet::range(5);
    const int n = 13 + 3 * static_cast<int>(rng() % 3);
    const std::uint64_t rare = 2 + rng() % 30;
    return Colouring::from_function(n, [&](const Triple& t) {
        const bool mu = t.vertices().intersects(u), mw = t.vertices().intersects(w);
        if (!mu && !mw)
            return Colour(3);
        if (rng() % rare == 0)
            return Colour(3);
        if (mu && mw)
            return Colour(1 + static_cast<int>(rng() % 2));
        return Colour(mu ? 1 : 2);
    });
}

} // namespace fixtures
