#include <gtest/gtest.h>

#include "beckline/generators.hpp"
#include "oracle.hpp"

using namespace beckline;

namespace {

GenSpec spec(Family f, std::size_t n, std::uint64_t seed = 1) { return GenSpec{f, n, seed, 1'000'000, {}}; }

} // namespace

TEST(Generate, AllCollinear) {
    const ColoredConfig c = generate(spec(Family::AllCollinear, 4, 7));
    ASSERT_EQ(c.size(), 8u);
    for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(c.point(i).y, 0);
    EXPECT_EQ(max_richness(c), 8u);
}

TEST(Generate, GeneralPositionHasNoCollinearTriple) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const ColoredConfig c = generate(spec(Family::GeneralPosition, 4, seed));
        EXPECT_EQ(oracle::summarize(c).r, 2u);
    }
}

TEST(Generate, GeneralPositionOnTinyBoxStillExact) {
    // 6 points in a 5x5 box: collinear triples are common, so rejection really runs
    GenSpec s = spec(Family::GeneralPosition, 3, 9);
    s.coord_bound = 4;
    EXPECT_EQ(oracle::summarize(generate(s)).r, 2u);
}

TEST(Generate, CollinearPlusRandomRichestLineIsTheRedLine) {
    const ColoredConfig c = generate(spec(Family::CollinearPlusRandom, 8, 5));
    const auto lines = induced_lines(c);
    EXPECT_EQ(max_richness(lines), 8u);
    EXPECT_EQ(k_rich_count(lines, 3), 1u);
    for (const auto& p : c.red) EXPECT_EQ(p.y, 0);
    for (const auto& p : c.blue) EXPECT_GT(p.y, 0);
}

TEST(Generate, GridLayout) {
    const ColoredConfig c = generate(spec(Family::Grid, 8));
    ASSERT_EQ(c.size(), 16u);
    std::set<ExactPoint> cells;
    for (std::size_t i = 0; i < 16; ++i) {
        cells.insert(c.point(i));
        EXPECT_TRUE(c.point(i).x >= 0 && c.point(i).x < 4 && c.point(i).y >= 0 && c.point(i).y < 4);
    }
    EXPECT_EQ(cells.size(), 16u);
    // 3 points per color on 3 rows of a ceil(sqrt(6)) = 3 side grid
    EXPECT_EQ(generate(spec(Family::Grid, 3)).size(), 6u);
}

TEST(Generate, TwoLinesCross) {
    GenSpec s = spec(Family::TwoLines, 6, 3);
    s.family_params["cross"] = 2;
    const ColoredConfig c = generate(s);
    std::size_t red_on_blue_line = 0;
    for (const auto& p : c.red) red_on_blue_line += p.y == 0;
    EXPECT_EQ(red_on_blue_line, 2u);
    EXPECT_EQ(max_richness(c), 6u);
}

TEST(Generate, Errors) {
    EXPECT_THROW(generate(spec(Family::Grid, 0)), invalid_spec_error);
    GenSpec bad = spec(Family::TwoLines, 3);
    bad.family_params["cross"] = 5;
    EXPECT_THROW(generate(bad), invalid_spec_error);
    GenSpec unknown = spec(Family::Grid, 3);
    unknown.family_params["fraction"] = 1;
    EXPECT_THROW(generate(unknown), invalid_spec_error);
    GenSpec cramped = spec(Family::AllCollinear, 5);
    cramped.coord_bound = 3;  // only 4 distinct x values for 10 points
    EXPECT_THROW(generate(cramped), sampling_exhausted_error);
    GenSpec crowded = spec(Family::GeneralPosition, 10);
    crowded.coord_bound = 2;  // the 3x3 box holds at most 6 points in general position
    EXPECT_THROW(generate(crowded), sampling_exhausted_error);
}

TEST(Generate, Determinism) {
    for (Family f : kAllFamilies) EXPECT_EQ(generate(spec(f, 6, 77)), generate(spec(f, 6, 77))) << family_name(f);
    EXPECT_FALSE(generate(spec(Family::GeneralPosition, 6, 1)) == generate(spec(Family::GeneralPosition, 6, 2)));
}

TEST(Generate, FrozenStream) {
    // pins the documented generator (mt19937_64 + rejection range reduction)
    const ColoredConfig c = generate(spec(Family::AllCollinear, 1, 0));
    Rng rng(0);
    const auto a = rng.uniform(0, 1'000'000);
    auto b = rng.uniform(0, 1'000'000);
    while (b == a) b = rng.uniform(0, 1'000'000);
    EXPECT_EQ(c.red[0].x, a);
    EXPECT_EQ(c.blue[0].x, b);
    std::mt19937_64 reference(0);
    EXPECT_EQ(Rng(0).next(), reference());
}

TEST(EnumerateSuite, CrossProduct) {
    const auto suite = enumerate_suite({4}, 1);
    ASSERT_EQ(suite.size(), 5u);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(suite[i].spec.family, kAllFamilies[i]);

    const auto again = enumerate_suite({4}, 1);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(suite[i].config, again[i].config);
}

TEST(EnumerateSuite, InvariantsHold) {
    for (const auto& entry : enumerate_suite({8, 16}, 2)) {
        const auto& c = entry.config;
        EXPECT_EQ(c.red.size(), entry.spec.n);
        EXPECT_EQ(c.blue.size(), entry.spec.n);
        EXPECT_NO_THROW(check_distinct(c));
        const std::size_t r = max_richness(c);
        switch (entry.spec.family) {
        case Family::GeneralPosition: EXPECT_EQ(r, 2u); break;
        case Family::AllCollinear: EXPECT_EQ(r, 2 * entry.spec.n); break;
        case Family::CollinearPlusRandom:
        case Family::TwoLines: EXPECT_EQ(r, entry.spec.n); break;
        case Family::Grid: EXPECT_LT(r, 2 * entry.spec.n); break;
        }
    }
    EXPECT_THROW(enumerate_suite({}, 1), invalid_spec_error);
}
