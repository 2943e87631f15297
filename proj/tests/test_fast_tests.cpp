#include "stargenus/fast_tests.hpp"
#include "stargenus/formats.hpp"
#include "stargenus/generators.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace stargenus {
namespace {

using testing::free_diagram;

const SignedChordDiagram& g3_expansion()
{
    static const SignedChordDiagram d(4, {{0, 1, Sign::Negative, 0}, {2, 3, Sign::Negative, 0}},
                                      {{GroupKind::TriadPair, "v"}});
    return d;
}

TEST(Rp2, Examples)
{
    EXPECT_TRUE(rp2_embeddable(testing::g1()).embeddable);
    EXPECT_FALSE(rp2_embeddable(testing::g3()).embeddable);
    const auto linked = rp2_embeddable(free_diagram({{0, 2, true}, {1, 3, true}}));
    EXPECT_TRUE(linked.embeddable);
    EXPECT_EQ(linked.witness, (std::vector<Side>{Side::W, Side::W}));
}

TEST(Rp2, GateAndWitness)
{
    EXPECT_THROW(rp2_embeddable(testing::orientable_variant()), OrientableGateError);
    const auto r = rp2_embeddable(free_diagram({{0, 3, true}, {1, 2, false}}));
    ASSERT_TRUE(r.embeddable);
    EXPECT_EQ(genus_of_partition(free_diagram({{0, 3, true}, {1, 2, false}}), {*r.witness}), 1);
}

TEST(KleinMobius, Examples)
{
    const auto two = free_diagram({{0, 1, true}, {2, 3, true}});
    const auto r = klein_case_mobius(two);
    EXPECT_TRUE(r.embeddable);
    ASSERT_TRUE(r.witness);
    EXPECT_NE((*r.witness)[0], (*r.witness)[1]);
    EXPECT_FALSE(klein_case_mobius(g3_expansion()).embeddable);
    EXPECT_FALSE(klein_case_mobius(free_diagram({{0, 1, true}})).embeddable);
}

TEST(KleinDisc, Examples)
{
    EXPECT_FALSE(klein_case_disc(free_diagram({{0, 1, true}})).embeddable);
    const auto d = free_diagram({{0, 3, true}, {1, 4, false}, {2, 5, false}});
    const auto r = klein_case_disc(d);
    EXPECT_TRUE(r.embeddable);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(genus_of_partition(d, {*r.witness}), 2);
    const auto g3 = klein_case_disc(g3_expansion());
    EXPECT_TRUE(g3.embeddable);
    EXPECT_EQ(genus_of_partition(g3_expansion(), {*g3.witness}), 2);
    EXPECT_THROW(klein_case_disc(free_diagram({{0, 1, false}})), Error);
}

TEST(Klein, Examples)
{
    EXPECT_TRUE(klein_embeddable(testing::g3()).embeddable);
    EXPECT_FALSE(klein_embeddable(testing::g1()).embeddable);
    EXPECT_TRUE(klein_embeddable(free_diagram({{0, 1, true}, {2, 3, true}})).embeddable);
    EXPECT_THROW(klein_embeddable(testing::orientable_variant()), OrientableGateError);
}

TEST(Klein, LiteralTransformIsNotExact)
{
    KleinOptions literal;
    literal.literal_transform = true;
    EXPECT_FALSE(klein_embeddable(g3_expansion(), literal).embeddable);
    const auto three = free_diagram({{0, 1, true}, {2, 3, true}, {4, 5, true}});
    EXPECT_TRUE(klein_embeddable(three, literal).embeddable);
    EXPECT_FALSE(klein_embeddable(three).embeddable);
}

TEST(KleinSurgery, PreservesRankSums)
{
    Rng rng(17);
    for (int k = 0; k < 300; ++k) {
        const auto d = random_chord_diagram(rng, 1 + k % 8, 0.5, k % 3 != 0);
        for (int c = 0; c < d.size(); ++c) {
            if (d.chord(c).sign != Sign::Negative)
                continue;
            const auto t = klein_surgery_transform(d, c);
            ASSERT_TRUE(check_diagram(t).empty());
            for_each_permissible_partition(t, false, [&](const std::vector<Side>& s) {
                // same chord at the same lower endpoint keeps its identity
                std::vector<Side> back(d.size());
                for (int i = 0; i < d.size(); ++i) {
                    const Chord& x = d.chord(i);
                    const int lo = (x.p > d.chord(c).p && x.p < d.chord(c).q) ? d.chord(c).p + d.chord(c).q - x.p
                                                                               : x.p;
                    const int hi = (x.q > d.chord(c).p && x.q < d.chord(c).q) ? d.chord(c).p + d.chord(c).q - x.q
                                                                               : x.q;
                    for (int j = 0; j < t.size(); ++j)
                        if (t.chord(j).p == std::min(lo, hi) && t.chord(j).q == std::max(lo, hi))
                            back[i] = s[j];
                }
                back[c] = other(back[c]);
                ASSERT_EQ(genus_of_partition(d, {back}), genus_of_partition(t, {s}));
            });
        }
    }
}

TEST(RankClass, MatchesGf2Rank)
{
    Rng rng(23);
    std::bernoulli_distribution keep(0.5);
    for (int k = 0; k < 500; ++k) {
        const auto d = random_chord_diagram(rng, 1 + k % 10, 0.3);
        std::vector<int> side;
        for (int i = 0; i < d.size(); ++i)
            if (keep(rng))
                side.push_back(i);
        const int rank = principal_submatrix(intersection_matrix(d), side).rank();
        EXPECT_EQ(rank_class(d, side), std::min(rank, 2));
    }
}

// Arbitrary grouped diagrams, not only expansions of graphs.
TEST(FastTests, AgreeWithEnumerationOnRandomDiagrams)
{
    Rng rng(99);
    for (int k = 0; k < 2000; ++k) {
        const auto d = random_chord_diagram(rng, 1 + k % 9, k % 2 ? 0.3 : 0.6, k % 4 != 0);
        if (source_sink_gate(d) == Orientability::Orientable)
            continue;
        const auto spectrum = genus_spectrum(d).spectrum;
        const auto rp2 = rp2_embeddable(d);
        ASSERT_EQ(rp2.embeddable, spectrum.contains(1)) << format_diagram(d);
        const auto kb = klein_embeddable(d);
        ASSERT_EQ(kb.embeddable, spectrum.contains(2)) << format_diagram(d);
        if (kb.witness)
            EXPECT_EQ(genus_of_partition(d, {*kb.witness}), 2);
    }
}

TEST(PairCounter, Quadratic)
{
    Rng rng(4);
    for (int n : {20, 40, 80}) {
        const auto d = random_chord_diagram(rng, n, 0.5, true);
        PairCounter rp2, mobius;
        rp2_embeddable(d, &rp2);
        klein_case_mobius(d, &mobius);
        const auto n2 = static_cast<std::uint64_t>(n) * n;
        EXPECT_GE(rp2.visits, n2 / 2);
        EXPECT_LE(rp2.visits, 2 * n2);
        EXPECT_LE(mobius.visits, 2 * n2);
    }
}

} // namespace
} // namespace stargenus
