#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <unordered_map>
#include <vector>

#include "config.hpp"
#include "geometry.hpp"

namespace beckline {

/// One induced line with its exact membership.
struct LineRecord {
    CanonicalLine line;
    std::size_t richness = 0;
    std::size_t red_count = 0;
    std::size_t blue_count = 0;
    /// Combined indices (see ColoredConfig) of the incident points, ascending.
    std::vector<std::size_t> members;

    bool bichromatic() const noexcept { return red_count > 0 && blue_count > 0; }
    std::size_t bichromatic_pairs() const noexcept { return red_count * blue_count; }

    friend bool operator==(const LineRecord&, const LineRecord&) = default;
};

struct RichnessSpectrum {
    std::map<std::size_t, std::size_t> counts;

    std::size_t num_lines() const {
        std::size_t total = 0;
        for (const auto& [k, c] : counts) total += c;
        return total;
    }

    friend bool operator==(const RichnessSpectrum&, const RichnessSpectrum&) = default;
};

/// A canonical line together with the points it carries, before colors are attached.
struct LineGroup {
    CanonicalLine line;
    std::vector<std::size_t> members;
};

namespace detail {

// Integer coordinates up to this magnitude keep x1*y2 - x2*y1 inside int64.
inline constexpr std::int64_t kSmallCoordLimit = std::int64_t{1} << 30;

struct SmallLine {
    std::int64_t a, b, c;
    friend bool operator==(const SmallLine&, const SmallLine&) = default;
    friend auto operator<=>(const SmallLine&, const SmallLine&) = default;
};

struct SmallLineHash {
    std::size_t operator()(const SmallLine& l) const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(l.a) * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::uint64_t>(l.b) + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(l.c) + 0x85EBCA77C2B2AE63ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

inline SmallLine small_line_through(std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2) {
    std::int64_t a = y1 - y2;
    std::int64_t b = x2 - x1;
    std::int64_t c = x1 * y2 - x2 * y1;
    std::int64_t g = std::gcd(std::gcd(a, b), c);
    a /= g;
    b /= g;
    c /= g;
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
        c = -c;
    }
    return {a, b, c};
}

inline bool small_integer(const Rational& q, std::int64_t& out) {
    if (!is_integer(q)) return false;
    const Integer& v = boost::multiprecision::numerator(q);
    if (v > kSmallCoordLimit || v < -kSmallCoordLimit) return false;
    out = v.convert_to<std::int64_t>();
    return true;
}

template <class Key>
struct PendingGroup {
    Key key;
    std::size_t first;
    std::vector<std::size_t> members;
};

// Single pass over the pairs (i, j), i < j. A line's group is opened by its
// lowest-index point i0; every other point on it has a larger index and is appended
// while i0 is scanned. Later scans that hit the same key skip it.
template <class Key, class Hash, class KeyFn>
std::vector<PendingGroup<Key>> group_pairs(std::size_t n, KeyFn&& key_of) {
    std::vector<PendingGroup<Key>> groups;
    std::unordered_map<Key, std::size_t, Hash> index;
    index.reserve(n * (n - 1) / 2 + 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            auto [it, inserted] = index.try_emplace(key_of(i, j), groups.size());
            if (inserted) {
                groups.push_back({it->first, i, {i, j}});
            } else if (groups[it->second].first == i) {
                groups[it->second].members.push_back(j);
            }
        }
    }
    return groups;
}

} // namespace detail

/// Groups the points into induced lines; the result is sorted by line.
/// Points must be pairwise distinct (not checked here).
inline std::vector<LineGroup> line_groups(std::span<const ExactPoint> pts) {
    const std::size_t n = pts.size();
    std::vector<LineGroup> out;
    if (n < 2) return out;

    std::vector<std::int64_t> xs(n), ys(n);
    bool small = true;
    for (std::size_t i = 0; i < n && small; ++i)
        small = detail::small_integer(pts[i].x, xs[i]) && detail::small_integer(pts[i].y, ys[i]);

    if (small) {
        auto groups = detail::group_pairs<detail::SmallLine, detail::SmallLineHash>(
            n, [&](std::size_t i, std::size_t j) { return detail::small_line_through(xs[i], ys[i], xs[j], ys[j]); });
        std::sort(groups.begin(), groups.end(), [](const auto& l, const auto& r) { return l.key < r.key; });
        out.reserve(groups.size());
        for (auto& g : groups)
            out.push_back({CanonicalLine{Integer(g.key.a), Integer(g.key.b), Integer(g.key.c)}, std::move(g.members)});
    } else {
        auto groups = detail::group_pairs<CanonicalLine, CanonicalLineHash>(
            n, [&](std::size_t i, std::size_t j) { return line_through(pts[i], pts[j]); });
        std::sort(groups.begin(), groups.end(), [](const auto& l, const auto& r) { return l.key < r.key; });
        out.reserve(groups.size());
        for (auto& g : groups) out.push_back({std::move(g.key), std::move(g.members)});
    }
    return out;
}

/// Every line through at least two points of the configuration, sorted by line.
inline std::vector<LineRecord> induced_lines(const ColoredConfig& config) {
    check_engine_input(config);
    const std::vector<ExactPoint> pts = config.points();
    std::vector<LineGroup> groups = line_groups(pts);
    std::vector<LineRecord> records;
    records.reserve(groups.size());
    const std::size_t n_red = config.red.size();
    for (auto& g : groups) {
        LineRecord rec;
        rec.line = std::move(g.line);
        rec.members = std::move(g.members);
        rec.richness = rec.members.size();
        // members ascend, so the red ones form a prefix
        rec.red_count = static_cast<std::size_t>(
            std::lower_bound(rec.members.begin(), rec.members.end(), n_red) - rec.members.begin());
        rec.blue_count = rec.richness - rec.red_count;
        records.push_back(std::move(rec));
    }
    return records;
}

inline std::vector<LineRecord> bichromatic_lines(std::span<const LineRecord> lines) {
    std::vector<LineRecord> out;
    std::copy_if(lines.begin(), lines.end(), std::back_inserter(out), [](const LineRecord& l) { return l.bichromatic(); });
    return out;
}

inline std::vector<LineRecord> bichromatic_lines(const ColoredConfig& config) {
    return bichromatic_lines(induced_lines(config));
}

inline std::size_t count_bichromatic(std::span<const LineRecord> lines) {
    return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [](const LineRecord& l) { return l.bichromatic(); }));
}

inline std::size_t max_richness(std::span<const LineRecord> lines) {
    std::size_t r = 0;
    for (const auto& l : lines) r = std::max(r, l.richness);
    return r;
}

inline std::size_t max_richness(const ColoredConfig& config) { return max_richness(induced_lines(config)); }

/// Number of lines with richness >= k.
inline std::size_t k_rich_count(std::span<const LineRecord> lines, std::size_t k) {
    if (k < 2) throw domain_error("k_rich_count: k must be at least 2");
    return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [k](const LineRecord& l) { return l.richness >= k; }));
}

inline std::size_t k_rich_count(const ColoredConfig& config, std::size_t k) {
    return k_rich_count(induced_lines(config), k);
}

inline RichnessSpectrum richness_spectrum(std::span<const LineRecord> lines) {
    RichnessSpectrum s;
    for (const auto& l : lines) ++s.counts[l.richness];
    return s;
}

inline RichnessSpectrum richness_spectrum(const ColoredConfig& config) { return richness_spectrum(induced_lines(config)); }

} // namespace beckline
