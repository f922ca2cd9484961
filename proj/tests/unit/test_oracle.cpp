#include "doctest.h"

#include "hcm/bounds.hpp"
#include "hcm/generators.hpp"
#include "hcm/oracle.hpp"
#include "hcm/structure.hpp"
#include "instances.hpp"
#include "naive.hpp"

using namespace hcm;

TEST_CASE("max_matching_in_colours examples")
{
    const Colouring ones(9, Colour(1));
    const OracleResult r = max_matching_in_colours(ones, ones.vertices(), ColourSet{Colour(1)});
    CHECK(r.matching.size() == 3);
    CHECK(r.exact);
    CHECK_FALSE(r.budget_hit);
    CHECK(max_matching_in_colours(ones, ones.vertices(), ColourSet{Colour(2)}).matching.size() == 0);

    const OracleResult empty = max_matching_in_colours(ones, VertexSet{}, ColourSet{Colour(1)});
    CHECK(empty.matching.size() == 0);
    CHECK(empty.exact);

    const Colouring sharp = sharpness_instance(4);
    REQUIRE(sharp.n() == 11);
    int best = 0;
    for (unsigned bits : {0b011u, 0b101u, 0b110u})
        best = std::max(best, max_matching_in_colours(sharp, sharp.vertices(), ColourSet::from_bits(bits)).matching.size());
    CHECK(best == 3);
    const auto caps = layered_upper_bounds(sharpness_layers(4));
    CHECK(best == std::max({caps[0], caps[1], caps[2]}));
}

TEST_CASE("max_two_coloured examples")
{
    const Colouring layered = layered_lowest_colour({1, 3, 9});
    CHECK(max_two_coloured(layered, layered.vertices()).result.matching.size() == 4);
    CHECK(naive::max_two_coloured(layered, layered.vertices()) == 4);

    const Colouring sharp = sharpness_instance(4);
    CHECK(max_two_coloured(sharp, sharp.vertices()).result.matching.size() == 3);
    CHECK(naive::max_two_coloured(sharp, sharp.vertices()) == 3);

    const Colouring ones(14, Colour(1));
    const TwoColouredResult r = max_two_coloured(ones, ones.vertices());
    CHECK(r.result.matching.size() == 4);
    CHECK(r.pair == ColourSet{Colour(1), Colour(2)});
    CHECK(r.result.exact);
}

TEST_CASE("branch and bound equals naive recursion for n <= 9")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 7);
        const std::array<double, 3> w{1.0 + static_cast<double>(rng() % 5), static_cast<double>(rng() % 5),
                                      static_cast<double>(rng() % 5)};
        const Colouring c = random_colouring(n, rng(), w);
        const VertexSet s(rng() & c.vertices().bits());
        for (unsigned mask = 1; mask < 8; ++mask) {
            const OracleResult r = max_matching_in_colours(c, s, ColourSet::from_bits(mask));
            REQUIRE(r.exact);
            REQUIRE(r.matching.size() == naive::max_matching(c, s, mask << 1));
            REQUIRE(r.matching.covered().size() == 3 * r.matching.size());
            REQUIRE(r.matching.covered().is_subset_of(s));
            REQUIRE(r.matching.colours_used(c).bits() == (r.matching.colours_used(c).bits() & mask));
        }
        REQUIRE(max_two_coloured(c, s).result.matching.size() == naive::max_two_coloured(c, s));
    }
}

TEST_CASE("max_two_coloured is monotone in the vertex set")
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 7);
        const Colouring c = random_colouring(n, rng(), {1, 1, 1});
        int previous = 0;
        VertexSet s;
        for (Vertex v = 0; v < n; ++v) {
            s.insert(v);
            const int size = max_two_coloured(c, s).result.matching.size();
            REQUIRE(size >= previous);
            REQUIRE(size <= s.size() / 3);
            previous = size;
        }
    }
}

TEST_CASE("max_two_coloured reaches the bound on small instances")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 11);
        const Colouring c = random_colouring(n, rng(), {1, 1, 1});
        REQUIRE(max_two_coloured(c, c.vertices()).result.matching.size() >= m_bound(n));
    }
}

TEST_CASE("node budget")
{
    const Colouring c = random_colouring(18, 1, {3, 3, 1});
    const OracleResult r = max_matching_in_colours(c, c.vertices(), ColourSet{Colour(1), Colour(2)}, 1);
    CHECK(r.budget_hit);
    CHECK_FALSE(r.exact);
    CHECK(r.matching.size() < 6);
    CHECK(verify_matching(c, r.matching, 0).valid);

    const OracleResult full = max_matching_in_colours(c, c.vertices(), ColourSet{Colour(1), Colour(2)});
    CHECK(full.exact);
    CHECK(full.explored > r.explored);
    CHECK(full.matching.size() >= r.matching.size());

    CHECK(max_two_coloured(c, c.vertices(), 1).result.budget_hit);

    // A budget-limited answer that covers everything is still exact.
    const Colouring ones(18, Colour(1));
    const OracleResult full_cover = max_matching_in_colours(ones, ones.vertices(), ColourSet{Colour(1)}, 1);
    CHECK(full_cover.matching.size() == 6);
    CHECK(full_cover.exact);
}

TEST_CASE("afl_mono_matching examples")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const Colouring three = random_colouring(3, rng(), {1, 1, 0});
        CHECK(afl_mono_matching(three, three.vertices()).size() == 1);
        const Colouring seven = random_colouring(7, rng(), {1, 0, 1});
        const Matching m = afl_mono_matching(seven, seven.vertices());
        CHECK(m.size() >= 2);
        CHECK(m.colours_used(seven).size() == 1);
    }
    CHECK(afl_mono_matching(Colouring(10, Colour(1)), VertexSet::range(10)).size() == 3);
    CHECK(afl_mono_matching(Colouring(2, Colour(1)), VertexSet::range(2)).size() == 0);
    CHECK_THROWS_AS(afl_mono_matching(fixture("FIX-B"), VertexSet::range(6)), PreconditionError);
    // Three colours outside the queried set do not matter.
    CHECK(afl_mono_matching(fixture("FIX-A"), VertexSet{0, 1, 2}).size() == 1);
}

TEST_CASE("afl_mono_matching meets the guarantee on random two-coloured sets")
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        std::array<double, 3> w{0, 0, 0};
        w[rng() % 3] = 1.0 + static_cast<double>(rng() % 4);
        w[rng() % 3] += 1.0;
        const Colouring c = random_colouring(n, rng(), w);
        const Matching m = afl_mono_matching(c, c.vertices());
        REQUIRE(m.size() >= (n + 1) / 4);
        REQUIRE(m.colours_used(c).size() <= 1);
        REQUIRE(verify_matching(c, m, 0).valid);
    }
}

TEST_CASE("kozos_perfect_12")
{
    const Colouring ones(12, Colour(1));
    long count = 0;
    const Matching m = kozos_perfect_12(ones, ones.vertices(), &count);
    CHECK(m.size() == 4);
    CHECK(m.colours_used(ones) == ColourSet{Colour(1)});
    CHECK(count == 15400);

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const Colouring c = random_colouring(12, rng(), {1, 1, 1});
        const Matching p = kozos_perfect_12(c, c.vertices());
        REQUIRE(p.size() == 4);
        REQUIRE(p.covered() == c.vertices());
        REQUIRE(verify_matching(c, p, 4).valid);
    }
    const Colouring big = random_colouring(16, 3, {1, 1, 1});
    const VertexSet twelve{0, 2, 3, 5, 6, 7, 9, 10, 11, 13, 14, 15};
    CHECK(kozos_perfect_12(big, twelve).covered() == twelve);
    CHECK_THROWS_AS(kozos_perfect_12(big, VertexSet::range(11)), InputError);
}

TEST_CASE("pair_avoiding_matchings")
{
    const Colouring b = fixture("FIX-B");
    const auto ms = pair_avoiding_matchings(b, VertexSet::range(6));
    CHECK(ms[0].triples == std::vector<Triple>{Triple(0, 1, 3), Triple(2, 4, 5)});
    CHECK(ms[1].triples == std::vector<Triple>{Triple(0, 1, 2), Triple(3, 4, 5)});
    CHECK(ms[2].triples == std::vector<Triple>{Triple(0, 1, 2), Triple(3, 4, 5)});
    for (int g = 0; g < 3; ++g)
        CHECK(ms[static_cast<std::size_t>(g)].avoided == Colour(g + 1));

    CHECK_THROWS_AS(pair_avoiding_matchings(fixture("FIX-A"), VertexSet::range(6)), WitnessError);

    const Colouring layered = layered_lowest_colour({1, 3, 9});
    const auto via_check = check_universal_13(layered, layered.vertices());
    REQUIRE(via_check);
    const auto via_pairs = pair_avoiding_matchings(layered, layered.vertices());
    for (std::size_t g = 0; g < 3; ++g) {
        CHECK(via_pairs[g].triples == (*via_check)[g].triples);
        CHECK(verify_matching(layered, via_pairs[g], 4).valid);
    }
    CHECK_THROWS_AS(pair_avoiding_matchings(Colouring(13, Colour(1)), VertexSet::range(13)), WitnessError);
    CHECK_THROWS(pair_avoiding_matchings(b, VertexSet::range(5)));
}
