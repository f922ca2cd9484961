#include "doctest.h"

#include "hcm/bounds.hpp"
#include "hcm/generators.hpp"
#include "hcm/matching.hpp"
#include "naive.hpp"

using namespace hcm;

TEST_CASE("colour shifts are cyclic and invertible")
{
    for (Colour a : Colour::all()) {
        CHECK(a.next().prev() == a);
        CHECK(a.shifted(3) == a);
        CHECK(a.shifted(-4) == a.prev());
    }
    CHECK(Colour(3).next() == Colour(1));
    CHECK(Colour(1).prev() == Colour(3));
    CHECK_THROWS_AS(Colour(0), InputError);
    CHECK_THROWS_AS(Colour(4), InputError);
}

TEST_CASE("colour sets")
{
    ColourSet s{Colour(1), Colour(3)};
    CHECK(s.size() == 2);
    CHECK(s.to_string() == "{1,3}");
    CHECK(s.complement() == ColourSet{Colour(2)});
    CHECK(ColourSet::full().complement().empty());
}

TEST_CASE("colour frames relabel and restore")
{
    const ColourFrame f = ColourFrame::mapping(Colour(3), Colour(1));
    CHECK(f.to_canonical(Colour(3)) == Colour(1));
    CHECK(f.to_canonical(Colour(1)) == Colour(2));
    CHECK(f.to_canonical(Colour(2)) == Colour(3));
    for (Colour a : Colour::all())
        CHECK(f.to_actual(f.to_canonical(a)) == a);
    CHECK(f.preserves_orientation());
    CHECK_FALSE(ColourFrame::mapping(Colour(1), Colour(3)).preserves_orientation());
    CHECK_THROWS_AS(ColourFrame::mapping(Colour(2), Colour(2)), InputError);
}

TEST_CASE("rank_triple examples")
{
    CHECK(rank_triple(0, 1, 2) == 0);
    CHECK(rank_triple(1, 2, 3) == 3);
    CHECK(rank_triple(0, 1, 4) == 4);
    CHECK_THROWS_AS(rank_triple(2, 1, 3), OrderingError);
    CHECK_THROWS_AS(rank_triple(1, 1, 3), OrderingError);
    CHECK_THROWS_AS(Triple(0, 2, 2), OrderingError);
}

TEST_CASE("unrank_triple examples")
{
    CHECK(unrank_triple(0, 5) == Triple(0, 1, 2));
    CHECK(unrank_triple(3, 5) == Triple(1, 2, 3));
    for (int n = 3; n <= 20; ++n)
        CHECK(unrank_triple(triple_count(n) - 1, n) == Triple(n - 3, n - 2, n - 1));
    CHECK_THROWS_AS(unrank_triple(triple_count(6), 6), BoundsError);
}

TEST_CASE("rank and unrank are inverse and match the nested-loop order")
{
    for (int n = 3; n <= 12; ++n) {
        const std::uint64_t total = triple_count(n);
        std::uint64_t expected = 0;
        for (const Triple& t : naive::triples_in(VertexSet::range(n))) {
            CHECK(rank_triple(t) == expected);
            CHECK(unrank_triple(expected, n) == t);
            ++expected;
        }
        CHECK(expected == total);
    }
    for (std::uint64_t r : {0ull, 1ull, 999ull, 41663ull})
        CHECK(rank_triple(unrank_triple(r, 64)) == r);
    CHECK(naive::position(5, 9, 17) == rank_triple(5, 9, 17));
}

TEST_CASE("bound formulas")
{
    CHECK(m_bound(12) == 4);
    CHECK(m_bound(0) == 0);
    CHECK(m_bound(38) == 12);
    CHECK(smallest_n_for(4) == 12);
    CHECK(smallest_n_for(1) == 3);
    CHECK(smallest_n_for(12) == 38);
    CHECK(near_perfect_size(13) == 4);
    CHECK(near_perfect_size(0) == 0);
    CHECK(near_perfect_size(12) == 4);
}

TEST_CASE("bound properties")
{
    for (std::int64_t n = 0; n <= 100000; ++n) {
        REQUIRE(m_bound(n) <= near_perfect_size(n));
        if (n >= 6)
            REQUIRE(m_bound(n) - m_bound(n - 6) <= 2);
        if (n >= 13)
            REQUIRE(m_bound(n) - m_bound(n - 13) == 4);
    }
    for (std::int64_t k = 1; k <= 10000; ++k) {
        const std::int64_t n = smallest_n_for(k);
        REQUIRE(m_bound(n) >= k);
        REQUIRE(m_bound(n - 1) < k);
    }
}

TEST_CASE("vertex sets")
{
    const VertexSet s{1, 4, 7};
    CHECK(s.size() == 3);
    CHECK(s.to_string() == "{1,4,7}");
    CHECK(s.min() == 1);
    CHECK(s.max() == 7);
    CHECK(s.lowest(2) == VertexSet{1, 4});
    CHECK((s - VertexSet{4}) == VertexSet{1, 7});
    CHECK_THROWS_AS(VertexSet{64}, BoundsError);

    for (int m = 0; m <= 10; ++m)
        for (int k = 0; k <= m + 1; ++k) {
            std::uint64_t count = 0;
            std::optional<VertexSet> last;
            for_each_subset(VertexSet::range(m), k, [&](VertexSet sub) {
                CHECK(sub.size() == k);
                if (last)
                    CHECK(*last < sub);
                last = sub;
                ++count;
                return false;
            });
            CHECK(count == binomial(m, k));
        }
}

TEST_CASE("colour_of")
{
    CHECK(colour_of(Colouring(9, Colour(1)), Triple(0, 1, 2)) == Colour(1));
    const Colouring a = fixture("FIX-A");
    CHECK(colour_of(a, Triple(3, 4, 5)) == Colour(2));
    CHECK(colour_of(a, Triple(1, 2, 5)) == Colour(3));
    CHECK(colour_of(a, Triple(0, 1, 2)) == Colour(1));
    CHECK_THROWS_AS(colour_of(a, Triple(0, 1, 6)), BoundsError);
}

TEST_CASE("colouring construction and views")
{
    CHECK_THROWS_AS(Colouring(5, std::vector<std::uint8_t>(9, 1)), InputError);
    CHECK_THROWS_AS(Colouring(4, std::vector<std::uint8_t>{1, 2, 4, 1}), InputError);
    const Colouring a = fixture("FIX-A");
    CHECK(a.colours_within(VertexSet::range(6)) == ColourSet::full());
    CHECK(a.colours_within(VertexSet{0, 1, 2, 3}) == ColourSet{Colour(1)});

    const Colouring canon = a.to_canonical(ColourFrame::mapping(Colour(2), Colour(3)));
    CHECK(canon.colour(Triple(3, 4, 5)) == Colour(1));
    CHECK(canon.colour(Triple(1, 2, 5)) == Colour(2));
    CHECK(canon.colour(Triple(0, 1, 2)) == Colour(3));

    const Colouring sub = a.induced(VertexSet{1, 2, 3, 4, 5});
    CHECK(sub.n() == 5);
    CHECK(sub.colour(Triple(2, 3, 4)) == Colour(2));  // (3,4,5) renumbered
    CHECK(sub.colour(Triple(0, 1, 4)) == Colour(3));  // (1,2,5) renumbered
}

TEST_CASE("verify_matching examples")
{
    const Colouring c(9, Colour(1));
    Matching m{{Triple(0, 1, 2), Triple(3, 4, 5), Triple(6, 7, 8)}, std::nullopt};
    const VerificationReport ok = verify_matching(c, m, 3);
    CHECK(ok.valid);
    CHECK(ok.size == 3);
    CHECK(ok.colours_used == ColourSet{Colour(1)});

    const VerificationReport small = verify_matching(c, m, 4);
    CHECK_FALSE(small.valid);
    REQUIRE(small.violations.size() == 1);
    CHECK(small.violations[0].find("size") != std::string::npos);

    Matching overlap{{Triple(0, 1, 2), Triple(2, 3, 4)}, std::nullopt};
    const VerificationReport bad = verify_matching(c, overlap, 0);
    CHECK_FALSE(bad.valid);
    CHECK(bad.violations[0].find("overlaps") != std::string::npos);

    Matching avoids{{Triple(0, 1, 2)}, Colour(1)};
    CHECK_FALSE(verify_matching(c, avoids, 0).valid);

    Matching outside{{Triple(6, 7, 9)}, std::nullopt};
    CHECK_FALSE(verify_matching(c, outside, 0).valid);
}

TEST_CASE("verify_matching rejects three colours")
{
    const Colouring c = Colouring::from_function(9, [](const Triple& t) { return Colour(t.i / 3 + 1); });
    Matching m{{Triple(0, 1, 2), Triple(3, 4, 5), Triple(6, 7, 8)}, std::nullopt};
    const VerificationReport r = verify_matching(c, m, 0);
    CHECK_FALSE(r.valid);
    CHECK(r.colours_used.size() == 3);
}

TEST_CASE("greedy_matching examples")
{
    const Colouring c(9, Colour(1));
    CHECK(greedy_matching(c, c.vertices(), ColourSet{Colour(1)}).size() == 3);
    CHECK(greedy_matching(c, c.vertices(), ColourSet{Colour(2)}).size() == 0);
    const Colouring clique(7, Colour(2));
    CHECK(greedy_matching(clique, clique.vertices(), ColourSet{Colour(2)}).size() == 2);
    CHECK(greedy_matching(c, c.vertices(), ColourSet{Colour(1)}).triples.front() == Triple(0, 1, 2));
}

TEST_CASE("greedy_matching is maximal")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 6 + static_cast<int>(seed % 9);
        const Colouring c = random_colouring(n, seed, {1, 1, 1});
        const ColourSet allowed = ColourSet::from_bits(1 + static_cast<unsigned>(seed % 7));
        const Matching m = greedy_matching(c, c.vertices(), allowed);
        CHECK(verify_matching(c, m, 0).violations.empty() == (m.colours_used(c).size() <= 2));
        const VertexSet left = c.vertices() - m.covered();
        for (const Triple& t : naive::triples_in(left))
            REQUIRE_FALSE(allowed.contains(c.colour(t)));
    }
}

TEST_CASE("partition_into_triples")
{
    const Matching m = partition_into_triples(VertexSet{0, 2, 3, 5, 8, 9, 11, 12});
    REQUIRE(m.size() == 2);
    CHECK(m.triples[0] == Triple(0, 2, 3));
    CHECK(m.triples[1] == Triple(5, 8, 9));
}
