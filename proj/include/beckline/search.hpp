#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "incidence.hpp"
#include "random.hpp"

namespace beckline {

struct MoveSet {
    bool color_swap = true;
    bool point_nudge = false;

    friend bool operator==(const MoveSet&, const MoveSet&) = default;
};

/// T_k = (1/10) * (1/2)^k for k = 0..levels-1.
inline std::vector<Rational> geometric_schedule(std::size_t levels = 10, Rational start = Rational(1, 10),
                                                 Rational factor = Rational(1, 2)) {
    std::vector<Rational> out;
    for (std::size_t k = 0; k < levels; ++k) {
        out.push_back(start);
        start *= factor;
    }
    return out;
}

struct SearchSpec {
    ColoredConfig base;
    MoveSet moves;
    std::size_t iterations = 1000;
    std::size_t restarts = 1;
    /// Spread evenly over the iterations: iteration i (1-based) uses entry
    /// floor((i-1) * size / iterations).
    std::vector<Rational> temperature_schedule = geometric_schedule();
    std::uint64_t seed = 0;
    std::int64_t nudge_radius = 1;
};

struct TrajectorySample {
    std::size_t iteration = 0;
    ExtendedRatio ratio;
};

struct SearchResult {
    ColoredConfig best_config;
    ExtendedRatio best_ratio;
    std::vector<TrajectorySample> trajectory;
    std::size_t restart_index = 0;
    ExtendedRatio initial_ratio;
};

inline void validate(const SearchSpec& spec) {
    require_balanced(spec.base);
    check_distinct(spec.base);
    if (spec.iterations < 1) throw invalid_spec_error("iterations must be at least 1");
    if (spec.restarts < 1) throw invalid_spec_error("restarts must be at least 1");
    if (!spec.moves.color_swap && !spec.moves.point_nudge) throw invalid_spec_error("no moves enabled");
    if (spec.temperature_schedule.empty()) throw invalid_spec_error("empty temperature schedule");
    for (std::size_t i = 0; i < spec.temperature_schedule.size(); ++i) {
        if (spec.temperature_schedule[i] <= 0) throw invalid_spec_error("temperatures must be positive");
        if (i > 0 && spec.temperature_schedule[i] > spec.temperature_schedule[i - 1])
            throw invalid_spec_error("temperature schedule must be nonincreasing");
    }
    if (spec.moves.point_nudge && spec.nudge_radius < 1)
        throw move_inapplicable_error("point-nudge needs nudge_radius >= 1");
}

/// Annealing acceptance. Exact comparisons decide every non-uphill case; an uphill
/// step is taken iff draw < exp(-(candidate - current) / temperature) in double precision.
/// Moves into an all-collinear (infinite-ratio) state are refused from a finite state.
inline bool accept_move(const ExtendedRatio& current, const ExtendedRatio& candidate, const Rational& temperature, Rng& rng) {
    if (candidate.is_infinite() && !current.is_infinite()) return false;
    if (candidate <= current) return true;
    const Rational scaled = (candidate.value() - current.value()) / temperature;
    return rng.unit() < std::exp(-scaled.convert_to<double>());
}

namespace detail {

class SearchState {
public:
    SearchState(const ColoredConfig& base, bool geometry_fixed)
        : points_(base.points()), is_red_(base.size(), 0), n_(base.red.size()), geometry_fixed_(geometry_fixed) {
        std::fill(is_red_.begin(), is_red_.begin() + static_cast<std::ptrdiff_t>(n_), 1);
        if (geometry_fixed_) refresh_lines();
    }

    ExtendedRatio ratio() {
        if (!geometry_fixed_) refresh_lines();
        std::size_t bichromatic = 0;
        for (const auto& g : *groups_) {
            bool red = false, blue = false;
            for (std::size_t m : g.members) (is_red_[m] ? red : blue) = true;
            bichromatic += red && blue;
        }
        return beck_ratio(n_, r_, bichromatic);
    }

    void recolor(Rng& rng) {
        std::vector<std::size_t> order(points_.size());
        std::iota(order.begin(), order.end(), 0);
        for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
        std::fill(is_red_.begin(), is_red_.end(), 0);
        for (std::size_t i = 0; i < n_; ++i) is_red_[order[i]] = 1;
    }

    /// Exchanges the colors of a random red point and a random blue point.
    void color_swap(Rng& rng) {
        const std::size_t red_pick = rng.index(n_);
        const std::size_t blue_pick = rng.index(n_);
        std::size_t red_at = 0, blue_at = 0, reds = 0, blues = 0;
        for (std::size_t i = 0; i < is_red_.size(); ++i) {
            if (is_red_[i]) {
                if (reds++ == red_pick) red_at = i;
            } else if (blues++ == blue_pick) {
                blue_at = i;
            }
        }
        is_red_[red_at] = 0;
        is_red_[blue_at] = 1;
    }

    /// Moves one point by a nonzero lattice offset; false (and no change) on collision.
    bool nudge(Rng& rng, std::int64_t radius) {
        const std::size_t i = rng.index(points_.size());
        std::int64_t dx = 0, dy = 0;
        while (dx == 0 && dy == 0) {
            dx = rng.uniform(-radius, radius);
            dy = rng.uniform(-radius, radius);
        }
        ExactPoint moved(points_[i].x + dx, points_[i].y + dy);
        if (std::find(points_.begin(), points_.end(), moved) != points_.end()) return false;
        points_[i] = std::move(moved);
        return true;
    }

    ColoredConfig config() const {
        std::vector<ExactPoint> red, blue;
        for (std::size_t i = 0; i < points_.size(); ++i) (is_red_[i] ? red : blue).push_back(points_[i]);
        return ColoredConfig(std::move(red), std::move(blue));
    }

private:
    void refresh_lines() {
        auto groups = std::make_shared<std::vector<LineGroup>>(line_groups(points_));
        r_ = 0;
        for (const auto& g : *groups) r_ = std::max(r_, g.members.size());
        groups_ = std::move(groups);
    }

    std::vector<ExactPoint> points_;
    std::vector<char> is_red_;
    std::size_t n_;
    bool geometry_fixed_;
    // shared between copies; replaced, never mutated
    std::shared_ptr<const std::vector<LineGroup>> groups_;
    std::size_t r_ = 0;
};

struct RestartOutcome {
    ColoredConfig best_config;
    ExtendedRatio best_ratio;
    std::vector<TrajectorySample> trajectory;
};

inline RestartOutcome run_restart(const SearchSpec& spec, std::size_t restart) {
    Rng rng(derive_seed(spec.seed, restart));
    SearchState state(spec.base, !spec.moves.point_nudge);
    if (restart > 0 && spec.moves.color_swap) state.recolor(rng);

    ExtendedRatio current = state.ratio();
    RestartOutcome out{state.config(), current, {{0, current}}};
    const std::size_t stride = std::max<std::size_t>(1, spec.iterations / 64);
    const std::size_t levels = spec.temperature_schedule.size();

    for (std::size_t it = 1; it <= spec.iterations; ++it) {
        const Rational& temperature = spec.temperature_schedule[(it - 1) * levels / spec.iterations];
        SearchState candidate = state;
        bool applicable = true;
        const bool swap = spec.moves.color_swap && (!spec.moves.point_nudge || rng.next() % 2 == 0);
        if (swap)
            candidate.color_swap(rng);
        else
            applicable = candidate.nudge(rng, spec.nudge_radius);

        if (applicable) {
            const ExtendedRatio cand_ratio = candidate.ratio();
            if (accept_move(current, cand_ratio, temperature, rng)) {
                state = std::move(candidate);
                current = cand_ratio;
                if (current < out.best_ratio) {
                    out.best_ratio = current;
                    out.best_config = state.config();
                }
            }
        }
        if (it % stride == 0 || it == spec.iterations) out.trajectory.push_back({it, current});
    }
    return out;
}

} // namespace detail

/// Simulated annealing that minimizes the Beck ratio. Restarts use seeds derived
/// from (seed, restart index); restart 0 starts from the base coloring, later ones
/// from a random balanced recoloring when color swaps are enabled. The global best
/// is the minimum over restarts, lowest restart index on ties.
inline SearchResult search(const SearchSpec& spec) {
    validate(spec);
    SearchResult result;
    result.initial_ratio = beck_ratio(spec.base);
    for (std::size_t k = 0; k < spec.restarts; ++k) {
        detail::RestartOutcome outcome = detail::run_restart(spec, k);
        if (k == 0 || outcome.best_ratio < result.best_ratio) {
            result.best_config = std::move(outcome.best_config);
            result.best_ratio = outcome.best_ratio;
            result.trajectory = std::move(outcome.trajectory);
            result.restart_index = k;
        }
    }
    return result;
}

} // namespace beckline
