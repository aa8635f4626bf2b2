#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "incidence.hpp"
#include "random.hpp"

namespace beckline {

enum class Family { GeneralPosition, Grid, CollinearPlusRandom, TwoLines, AllCollinear };

inline constexpr std::array<Family, 5> kAllFamilies{Family::GeneralPosition, Family::Grid, Family::CollinearPlusRandom,
                                                    Family::TwoLines, Family::AllCollinear};

inline const char* family_name(Family f) noexcept {
    switch (f) {
    case Family::GeneralPosition: return "general-position";
    case Family::Grid: return "grid";
    case Family::CollinearPlusRandom: return "collinear-plus-random";
    case Family::TwoLines: return "two-lines";
    case Family::AllCollinear: return "all-collinear";
    }
    return "?";
}

inline std::optional<Family> parse_family(std::string_view name) {
    for (Family f : kAllFamilies)
        if (name == family_name(f)) return f;
    return std::nullopt;
}

/// Generation request. Random families draw integer coordinates from [0, coord_bound]^2.
///
/// Family parameters: TwoLines reads "cross" (integer, default 1): the number of
/// points of each color moved onto the other color's line.
struct GenSpec {
    Family family = Family::GeneralPosition;
    std::size_t n = 1;
    std::uint64_t seed = 0;
    std::int64_t coord_bound = 1'000'000;
    std::map<std::string, Rational> family_params;

    friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

namespace detail {

class Sampler {
public:
    Sampler(std::uint64_t seed, std::size_t n, std::int64_t bound)
        : rng_(seed), budget_(1000 * n * n), bound_(bound) {}

    std::int64_t draw(std::int64_t lo, std::int64_t hi) {
        if (budget_ == 0) throw sampling_exhausted_error("rejection sampling exceeded its draw budget");
        --budget_;
        return rng_.uniform(lo, hi);
    }

    std::int64_t bound() const noexcept { return bound_; }

    /// `count` distinct integers from [lo, hi] in draw order.
    std::vector<std::int64_t> distinct(std::size_t count, std::int64_t lo, std::int64_t hi) {
        std::vector<std::int64_t> out;
        std::unordered_set<std::int64_t> seen;
        while (out.size() < count) {
            const std::int64_t v = draw(lo, hi);
            if (seen.insert(v).second) out.push_back(v);
        }
        return out;
    }

private:
    Rng rng_;
    std::size_t budget_;
    std::int64_t bound_;
};

struct IntPoint {
    std::int64_t x, y;
};

// Primitive direction from `from` to `to`, sign-normalized so opposite rays coincide.
inline std::pair<std::int64_t, std::int64_t> primitive_direction(const IntPoint& from, const IntPoint& to) {
    std::int64_t dx = to.x - from.x, dy = to.y - from.y;
    const std::int64_t g = std::gcd(dx, dy);
    dx /= g;
    dy /= g;
    if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
    }
    return {dx, dy};
}

struct PairHash {
    std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& p) const noexcept {
        return static_cast<std::size_t>(mix_seed(static_cast<std::uint64_t>(p.first) * 31 + static_cast<std::uint64_t>(p.second)));
    }
};

// True when c is distinct from every accepted point and on no line through two of them.
inline bool extends_general_position(const std::vector<IntPoint>& accepted, const IntPoint& c) {
    std::unordered_set<std::pair<std::int64_t, std::int64_t>, PairHash> directions;
    directions.reserve(accepted.size() * 2);
    for (const auto& p : accepted) {
        if (p.x == c.x && p.y == c.y) return false;
        if (!directions.insert(primitive_direction(c, p)).second) return false;
    }
    return true;
}

inline void sample_general_position(Sampler& s, std::vector<IntPoint>& accepted, std::size_t count,
                                    std::int64_t y_lo) {
    const std::size_t target = accepted.size() + count;
    while (accepted.size() < target) {
        IntPoint c{0, 0};
        c.x = s.draw(0, s.bound());
        c.y = s.draw(y_lo, s.bound());
        if (extends_general_position(accepted, c)) accepted.push_back(c);
    }
}

inline ExactPoint to_exact(const IntPoint& p) { return ExactPoint(Rational(p.x), Rational(p.y)); }

inline std::size_t cross_param(const GenSpec& spec) {
    auto it = spec.family_params.find("cross");
    if (it == spec.family_params.end()) return std::min<std::size_t>(1, spec.n);
    if (!is_integer(it->second) || it->second < 0 || it->second > spec.n)
        throw invalid_spec_error("two-lines: cross must be an integer in [0, n]");
    return it->second.convert_to<std::size_t>();
}

inline ColoredConfig build(const GenSpec& spec, std::uint64_t seed) {
    const std::size_t n = spec.n;
    Sampler s(seed, n, spec.coord_bound);
    std::vector<ExactPoint> red, blue;

    switch (spec.family) {
    case Family::GeneralPosition: {
        std::vector<IntPoint> pts;
        sample_general_position(s, pts, 2 * n, 0);
        for (std::size_t i = 0; i < 2 * n; ++i) (i < n ? red : blue).push_back(to_exact(pts[i]));
        break;
    }
    case Family::Grid: {
        std::size_t side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(2 * n))));
        while (side * side < 2 * n) ++side;
        while (side > 1 && (side - 1) * (side - 1) >= 2 * n) --side;
        for (std::size_t i = 0; i < 2 * n; ++i) {
            ExactPoint p(Rational(static_cast<long long>(i / side)), Rational(static_cast<long long>(i % side)));
            (i % 2 == 0 ? red : blue).push_back(p);
        }
        break;
    }
    case Family::CollinearPlusRandom: {
        std::vector<IntPoint> pts;
        for (std::int64_t x : s.distinct(n, 0, s.bound())) pts.push_back({x, 0});
        sample_general_position(s, pts, n, 1);
        for (std::size_t i = 0; i < 2 * n; ++i) (i < n ? red : blue).push_back(to_exact(pts[i]));
        break;
    }
    case Family::TwoLines: {
        // blue line y = 0, red line x = 0; neither contains the origin
        const std::size_t cross = cross_param(spec);
        const auto xs = s.distinct(n, 1, s.bound());
        const auto ys = s.distinct(n, 1, s.bound());
        for (std::size_t i = 0; i < n; ++i) {
            ExactPoint on_blue_line(Rational(xs[i]), Rational(0));
            ExactPoint on_red_line(Rational(0), Rational(ys[i]));
            if (i < n - cross) {
                blue.push_back(on_blue_line);
                red.push_back(on_red_line);
            } else {
                red.push_back(on_blue_line);
                blue.push_back(on_red_line);
            }
        }
        break;
    }
    case Family::AllCollinear: {
        const auto xs = s.distinct(2 * n, 0, s.bound());
        for (std::size_t i = 0; i < 2 * n; ++i) (i < n ? red : blue).push_back(ExactPoint(Rational(xs[i]), Rational(0)));
        break;
    }
    }
    return ColoredConfig(std::move(red), std::move(blue));
}

// Structural claim each family makes about the maximum richness.
inline std::optional<std::size_t> expected_richness(const GenSpec& spec) {
    const std::size_t n = spec.n;
    switch (spec.family) {
    case Family::GeneralPosition: return 2;
    case Family::AllCollinear: return 2 * n;
    case Family::CollinearPlusRandom:
    case Family::TwoLines: return std::max<std::size_t>(n, 2);
    case Family::Grid: return std::nullopt;
    }
    return std::nullopt;
}

} // namespace detail

inline void validate(const GenSpec& spec) {
    if (spec.n < 1) throw invalid_spec_error("n must be at least 1");
    if (spec.coord_bound < 1 || spec.coord_bound > detail::kSmallCoordLimit)
        throw invalid_spec_error("coord_bound must lie in [1, 2^30]");
    for (const auto& [key, value] : spec.family_params)
        if (!(spec.family == Family::TwoLines && key == "cross"))
            throw invalid_spec_error("unknown family parameter '" + key + "' for " + family_name(spec.family));
}

/// Deterministic construction; the result is re-checked by the incidence engine
/// against the family's richness claim and redrawn (from a derived seed) on violation.
inline ColoredConfig generate(const GenSpec& spec) {
    validate(spec);
    constexpr int kAttempts = 8;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        const std::uint64_t seed = attempt == 0 ? spec.seed : derive_seed(spec.seed, static_cast<std::uint64_t>(attempt));
        ColoredConfig config = detail::build(spec, seed);
        check_distinct(config);
        const auto expected = detail::expected_richness(spec);
        if (!expected || max_richness(induced_lines(config)) == *expected) return config;
    }
    throw sampling_exhausted_error(std::string("could not satisfy the structural claim of ") + family_name(spec.family));
}

struct SuiteEntry {
    GenSpec spec;
    ColoredConfig config;
};

/// Seed used for seed index `s` of (family, n): derive_seed(s, family_index << 32 | n).
inline std::uint64_t suite_seed(Family family, std::size_t n, std::uint64_t s) {
    return derive_seed(s, (static_cast<std::uint64_t>(family) << 32) | static_cast<std::uint64_t>(n));
}

/// families x n_values x seeds, family-major.
inline std::vector<SuiteEntry> enumerate_suite(const std::vector<std::size_t>& n_values, std::size_t seeds_per_family,
                                               std::int64_t coord_bound = 1'000'000) {
    if (n_values.empty() || seeds_per_family == 0) throw invalid_spec_error("enumerate_suite: empty inputs");
    std::vector<SuiteEntry> out;
    for (Family f : kAllFamilies)
        for (std::size_t n : n_values)
            for (std::uint64_t s = 0; s < seeds_per_family; ++s) {
                GenSpec spec;
                spec.family = f;
                spec.n = n;
                spec.seed = suite_seed(f, n, s);
                spec.coord_bound = coord_bound;
                out.push_back({spec, generate(spec)});
            }
    return out;
}

} // namespace beckline
