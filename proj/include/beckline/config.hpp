#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"

namespace beckline {

/// Disjoint red and blue point lists.
///
/// Points are addressed by a combined index: reds first in list order, then blues.
/// This is the canonical input order used wherever a deterministic point order matters.
struct ColoredConfig {
    std::vector<ExactPoint> red;
    std::vector<ExactPoint> blue;

    ColoredConfig() = default;
    ColoredConfig(std::vector<ExactPoint> reds, std::vector<ExactPoint> blues)
        : red(std::move(reds)), blue(std::move(blues)) {
        for (auto& p : red) p.color = Color::Red;
        for (auto& p : blue) p.color = Color::Blue;
    }

    std::size_t size() const noexcept { return red.size() + blue.size(); }

    const ExactPoint& point(std::size_t i) const { return i < red.size() ? red[i] : blue[i - red.size()]; }

    Color color_of(std::size_t i) const noexcept { return i < red.size() ? Color::Red : Color::Blue; }

    bool balanced() const noexcept { return red.size() == blue.size(); }

    std::vector<ExactPoint> points() const {
        std::vector<ExactPoint> all(red);
        all.insert(all.end(), blue.begin(), blue.end());
        return all;
    }

    ColoredConfig color_swapped() const { return ColoredConfig(blue, red); }

    friend bool operator==(const ColoredConfig& l, const ColoredConfig& r) {
        return l.red == r.red && l.blue == r.blue;
    }
};

/// Throws duplicate_point_error if two points (of any colors) coincide.
inline void check_distinct(const ColoredConfig& config) {
    std::vector<ExactPoint> all = config.points();
    std::sort(all.begin(), all.end());
    auto dup = std::adjacent_find(all.begin(), all.end());
    if (dup != all.end()) {
        std::ostringstream os;
        os << "duplicate point " << dup->x << ' ' << dup->y;
        throw duplicate_point_error(os.str());
    }
}

/// Engine precondition: at least two points, pairwise distinct.
inline void check_engine_input(const ColoredConfig& config) {
    if (config.size() < 2) throw too_few_points_error("need at least 2 points, got " + std::to_string(config.size()));
    check_distinct(config);
}

/// Analysis precondition: |red| == |blue| >= 1, throws unequal_colors_error otherwise.
inline std::size_t require_balanced(const ColoredConfig& config) {
    if (!config.balanced())
        throw unequal_colors_error("unequal color classes: " + std::to_string(config.red.size()) + " red, " +
                                   std::to_string(config.blue.size()) + " blue");
    if (config.red.empty()) throw too_few_points_error("empty color classes");
    return config.red.size();
}

} // namespace beckline
