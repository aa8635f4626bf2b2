#include <gtest/gtest.h>

#include <set>

#include "beckline/incidence.hpp"
#include "oracle.hpp"

using namespace beckline;
using oracle::pt;

namespace {

std::set<std::vector<std::size_t>> members_of(const std::vector<LineRecord>& lines) {
    std::set<std::vector<std::size_t>> out;
    for (const auto& l : lines) out.insert(l.members);
    return out;
}

ColoredConfig three_by_three() { return oracle::grid(3); }

std::size_t choose2(std::size_t k) { return k * (k - 1) / 2; }

} // namespace

TEST(InducedLines, ThreeCollinear) {
    const auto lines = induced_lines(ColoredConfig({pt(0, 0), pt(1, 1)}, {pt(2, 2)}));
    ASSERT_EQ(lines.size(), 1u);
    EXPECT_EQ(lines[0].richness, 3u);
    EXPECT_EQ(lines[0].red_count, 2u);
    EXPECT_EQ(lines[0].blue_count, 1u);
}

TEST(InducedLines, Triangle) {
    const auto lines = induced_lines(ColoredConfig({pt(0, 0)}, {pt(1, 0), pt(0, 1)}));
    ASSERT_EQ(lines.size(), 3u);
    for (const auto& l : lines) EXPECT_EQ(l.richness, 2u);
    EXPECT_EQ(richness_spectrum(lines).counts, (std::map<std::size_t, std::size_t>{{2, 3}}));
}

TEST(InducedLines, GridMatchesTripleOracle) {
    const ColoredConfig g = three_by_three();
    // The triple oracle is only exact when no line carries 4 points.
    ASSERT_TRUE(oracle::no_four_collinear(g.points()));
    const auto frozen = std::map<std::size_t, std::size_t>{{2, 12}, {3, 8}};
    ASSERT_EQ(oracle::spectrum_from_triples(g.points()), frozen);

    const auto lines = induced_lines(g);
    EXPECT_EQ(lines.size(), 20u);
    EXPECT_EQ(richness_spectrum(lines).counts, frozen);
    EXPECT_EQ(max_richness(lines), 3u);
    EXPECT_EQ(k_rich_count(lines, 3), 8u);
    EXPECT_EQ(k_rich_count(lines, 2), lines.size());
}

TEST(InducedLines, Errors) {
    EXPECT_THROW(induced_lines(ColoredConfig({pt(0, 0)}, {})), too_few_points_error);
    EXPECT_THROW(induced_lines(ColoredConfig({pt(0, 0), pt(1, 1)}, {pt(1, 1)})), duplicate_point_error);
    EXPECT_THROW(k_rich_count(three_by_three(), 1), domain_error);
}

TEST(BichromaticLines, Examples) {
    EXPECT_EQ(bichromatic_lines(ColoredConfig({pt(0, 0)}, {pt(1, 0), pt(0, 1)})).size(), 2u);
    EXPECT_EQ(bichromatic_lines(ColoredConfig({pt(0, 0), pt(1, 0)}, {pt(2, 0), pt(3, 0)})).size(), 1u);

    const ColoredConfig four({pt(0, 0), pt(1, 0)}, {pt(0, 1), pt(1, 2)});
    ASSERT_EQ(oracle::summarize(four).r, 2u);  // general position
    EXPECT_EQ(bichromatic_lines(four).size(), 4u);
}

TEST(MaxRichness, Examples) {
    EXPECT_EQ(max_richness(ColoredConfig({pt(0, 0), pt(1, 0)}, {pt(2, 0), pt(5, 0)})), 4u);
    EXPECT_EQ(max_richness(ColoredConfig({pt(0, 0), pt(1, 0)}, {pt(0, 1), pt(1, 2)})), 2u);
    EXPECT_EQ(max_richness(three_by_three()), 3u);
    EXPECT_EQ(k_rich_count(ColoredConfig({pt(0, 0), pt(1, 0)}, {pt(0, 1), pt(1, 2)}), 3), 0u);
}

TEST(InducedLines, RationalAndLargeCoordinatesUseExactPath) {
    // (0,0), (1/3,1/3), (2^40, 2^40) share y = x; large values bypass the int64 path
    const Rational big(Integer(1) << 40);
    const auto lines = induced_lines(ColoredConfig({pt(0, 0), pt(Rational(1, 3), Rational(1, 3))}, {pt(big, big), pt(1, 0)}));
    EXPECT_EQ(lines.size(), 4u);
    EXPECT_EQ(max_richness(lines), 3u);
}

TEST(EngineProperties, OracleEquivalenceAndConservation) {
    Rng rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t total = 2 + rng.index(30);
        const std::size_t reds = rng.index(total + 1);
        const long long max_den = trial % 3 == 0 ? 3 : 1;
        const ColoredConfig c = oracle::random_config(rng, total, 3, max_den, reds);
        const auto lines = induced_lines(c);
        ASSERT_EQ(members_of(lines), oracle::naive_line_members(c)) << "trial " << trial;

        std::size_t pairs = 0, bi_pairs = 0;
        for (const auto& l : lines) {
            ASSERT_EQ(l.richness, l.red_count + l.blue_count);
            ASSERT_GE(l.richness, 2u);
            for (std::size_t m : l.members) ASSERT_TRUE(incident(l.line, c.point(m)));
            pairs += choose2(l.richness);
            bi_pairs += l.red_count * l.blue_count;
        }
        EXPECT_EQ(pairs, choose2(total));
        EXPECT_EQ(bi_pairs, c.red.size() * c.blue.size());
        EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end(), [](const auto& a, const auto& b) { return a.line < b.line; }));
    }
}

TEST(EngineProperties, ColorSwapAndAffineInvariance) {
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t total = 4 + rng.index(20);
        const ColoredConfig c = oracle::random_config(rng, total, 3, 1, total / 2);
        const auto base = induced_lines(c);

        const auto swapped = induced_lines(c.color_swapped());
        EXPECT_EQ(swapped.size(), base.size());
        EXPECT_EQ(count_bichromatic(swapped), count_bichromatic(base));
        EXPECT_EQ(richness_spectrum(swapped), richness_spectrum(base));

        // (x, y) -> (2x + y/3 + 1, -x + y - 1/2), determinant 7/3
        auto affine = [](const ExactPoint& p) {
            return pt(Rational(2 * p.x + p.y / 3 + 1), Rational(-p.x + p.y - Rational(1, 2)));
        };
        std::vector<ExactPoint> red, blue;
        for (const auto& p : c.red) red.push_back(affine(p));
        for (const auto& p : c.blue) blue.push_back(affine(p));
        const auto moved = induced_lines(ColoredConfig(red, blue));
        EXPECT_EQ(moved.size(), base.size());
        EXPECT_EQ(count_bichromatic(moved), count_bichromatic(base));
        EXPECT_EQ(max_richness(moved), max_richness(base));
        EXPECT_EQ(richness_spectrum(moved), richness_spectrum(base));
    }
}
