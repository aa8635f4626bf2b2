#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "incidence.hpp"
#include "rational.hpp"

namespace beckline {

/// A nonnegative rational extended with +infinity.
class ExtendedRatio {
public:
    ExtendedRatio() = default;
    explicit ExtendedRatio(Rational v) : value_(std::move(v)) {}
    static ExtendedRatio infinite() {
        ExtendedRatio r;
        r.infinite_ = true;
        return r;
    }

    bool is_infinite() const noexcept { return infinite_; }
    /// Meaningless when is_infinite().
    const Rational& value() const noexcept { return value_; }

    std::string str() const { return infinite_ ? "inf" : to_string(value_); }

    friend bool operator==(const ExtendedRatio& l, const ExtendedRatio& r) {
        return l.infinite_ == r.infinite_ && (l.infinite_ || l.value_ == r.value_);
    }
    friend bool operator<(const ExtendedRatio& l, const ExtendedRatio& r) {
        if (l.infinite_) return false;
        if (r.infinite_) return true;
        return l.value_ < r.value_;
    }
    friend bool operator<=(const ExtendedRatio& l, const ExtendedRatio& r) { return !(r < l); }

private:
    bool infinite_ = false;
    Rational value_{0};
};

inline ExtendedRatio parse_extended_ratio(std::string_view s) {
    if (s == "inf") return ExtendedRatio::infinite();
    return ExtendedRatio(parse_rational(s));
}

/// Bichromatic lines with richness in (2^(j-1), 2^j], with the constant-free
/// incidence-bound comparators for that class.
struct DyadicClassRow {
    unsigned j = 0;
    std::size_t line_count = 0;
    std::size_t pair_count = 0;
    Rational st_line_bound;
    Rational st_pair_bound;

    friend bool operator==(const DyadicClassRow&, const DyadicClassRow&) = default;
};

struct PairClassCounts {
    std::size_t low = 0;
    std::size_t mid = 0;
    std::size_t high = 0;
    Rational k1;

    std::size_t total() const noexcept { return low + mid + high; }
};

enum class Case { CaseI_AltA, CaseII_AltB, CaseIII_AltA };

inline const char* case_name(Case c) noexcept {
    switch (c) {
    case Case::CaseI_AltA: return "CaseI_AltA";
    case Case::CaseII_AltB: return "CaseII_AltB";
    case Case::CaseIII_AltA: return "CaseIII_AltA";
    }
    return "?";
}

enum class WitnessPool { None, HighPairs, AllBichromatic };

inline const char* pool_name(WitnessPool p) noexcept {
    switch (p) {
    case WitnessPool::None: return "none";
    case WitnessPool::HighPairs: return "high";
    case WitnessPool::AllBichromatic: return "bichromatic";
    }
    return "?";
}

/// Outcome of the two-extremes case analysis.
///
/// Case II: `witness` is the balanced rich line. Case III: `witness` is the
/// blue-heavy line and `second_witness` the red-heavy one. Case I: no witness.
struct CaseVerdict {
    Case verdict = Case::CaseI_AltA;
    std::optional<CanonicalLine> witness;
    std::optional<CanonicalLine> second_witness;
    /// Case III only: where the two witnesses were drawn from. Falls back to all
    /// bichromatic lines when fewer than two lines carry high pairs.
    WitnessPool pool = WitnessPool::None;
    Rational k1;
    Rational k2;
};

struct AnalysisParams {
    Rational k1{1, 4};
    Rational k2{1, 96};
};

struct BeckReport {
    std::size_t n = 0;
    std::size_t total_points = 0;
    std::size_t r = 0;
    std::size_t num_induced = 0;
    std::size_t num_bichromatic = 0;
    ExtendedRatio beck_ratio;
    RichnessSpectrum spectrum;
    std::vector<DyadicClassRow> dyadic;
    PairClassCounts pair_classes;
    CaseVerdict verdict;
};

namespace detail {

inline Rational pow2(unsigned e) { return Rational(Integer(1) << e); }

inline void check_k1(const Rational& k1) {
    if (k1 <= 0) throw invalid_constants_error("k1 must be positive, got " + to_string(k1));
}

// Smallest j >= 1 with richness <= 2^j.
inline unsigned dyadic_index(std::size_t richness) {
    unsigned j = 1;
    while ((std::size_t{1} << j) < richness) ++j;
    return j;
}

} // namespace detail

inline std::vector<DyadicClassRow> dyadic_classes(const ColoredConfig& config, std::span<const LineRecord> lines) {
    const std::size_t n = require_balanced(config);
    unsigned top = 1;
    for (const auto& l : lines)
        if (l.bichromatic()) top = std::max(top, detail::dyadic_index(l.richness));

    std::vector<DyadicClassRow> rows(top);
    const Rational nn(n);
    for (unsigned j = 1; j <= top; ++j) {
        auto& row = rows[j - 1];
        row.j = j;
        row.st_line_bound = nn * nn / detail::pow2(3 * j) + nn / detail::pow2(j);
        row.st_pair_bound = nn * nn / detail::pow2(j) + nn * detail::pow2(j);
    }
    for (const auto& l : lines) {
        if (!l.bichromatic()) continue;
        auto& row = rows[detail::dyadic_index(l.richness) - 1];
        ++row.line_count;
        row.pair_count += l.bichromatic_pairs();
    }
    return rows;
}

inline std::vector<DyadicClassRow> dyadic_classes(const ColoredConfig& config) {
    require_balanced(config);
    return dyadic_classes(config, induced_lines(config));
}

/// Splits the n^2 red-blue pairs by the richness of their line:
/// low if richness < 1/k1, high if richness > k1*n, mid otherwise.
inline PairClassCounts classify_pairs(const ColoredConfig& config, std::span<const LineRecord> lines, const Rational& k1) {
    const std::size_t n = require_balanced(config);
    detail::check_k1(k1);
    PairClassCounts out;
    out.k1 = k1;
    const Rational high_threshold = k1 * n;
    for (const auto& l : lines) {
        if (!l.bichromatic()) continue;
        const Rational richness(l.richness);
        if (richness * k1 < 1)
            out.low += l.bichromatic_pairs();
        else if (richness > high_threshold)
            out.high += l.bichromatic_pairs();
        else
            out.mid += l.bichromatic_pairs();
    }
    return out;
}

inline PairClassCounts classify_pairs(const ColoredConfig& config, const Rational& k1) {
    require_balanced(config);
    return classify_pairs(config, induced_lines(config), k1);
}

/// Largest grid value k1 for which low + high >= n^2/2.
inline std::optional<Rational> feasible_k1(const ColoredConfig& config, std::span<const LineRecord> lines,
                                           std::span<const Rational> grid) {
    const std::size_t n = require_balanced(config);
    if (grid.empty()) throw invalid_constants_error("feasible_k1: empty grid");
    if (!std::is_sorted(grid.begin(), grid.end())) throw invalid_constants_error("feasible_k1: grid not ascending");
    for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
        const PairClassCounts pc = classify_pairs(config, lines, *it);
        if (2 * (pc.low + pc.high) >= n * n) return *it;
    }
    return std::nullopt;
}

inline std::optional<Rational> feasible_k1(const ColoredConfig& config, std::span<const Rational> grid) {
    require_balanced(config);
    return feasible_k1(config, induced_lines(config), grid);
}

/// {1/d, 2/d, ..., 1}
inline std::vector<Rational> uniform_k1_grid(unsigned d) {
    std::vector<Rational> grid;
    for (unsigned i = 1; i <= d; ++i) grid.emplace_back(i, d);
    return grid;
}

inline CaseVerdict two_extremes_classify(const ColoredConfig& config, std::span<const LineRecord> lines,
                                         const Rational& k1, const Rational& k2) {
    const std::size_t n = require_balanced(config);
    detail::check_k1(k1);
    if (k2 <= 0 || k2 > k1 / 6)
        throw invalid_constants_error("need 0 < k2 <= k1/6, got k1=" + to_string(k1) + " k2=" + to_string(k2));

    CaseVerdict v;
    v.k1 = k1;
    v.k2 = k2;

    const PairClassCounts pc = classify_pairs(config, lines, k1);
    if (4 * pc.low >= n * n) {
        v.verdict = Case::CaseI_AltA;
        return v;
    }

    const Rational per_color = k2 * n;
    const LineRecord* balanced = nullptr;
    for (const auto& l : lines) {
        if (Rational(l.red_count) >= per_color && Rational(l.blue_count) >= per_color &&
            (!balanced || l.richness > balanced->richness))
            balanced = &l;
    }
    if (balanced) {
        v.verdict = Case::CaseII_AltB;
        v.witness = balanced->line;
        return v;
    }

    v.verdict = Case::CaseIII_AltA;
    const Rational high_threshold = k1 * n;
    std::vector<const LineRecord*> pool;
    for (const auto& l : lines)
        if (l.bichromatic() && Rational(l.richness) > high_threshold) pool.push_back(&l);
    v.pool = WitnessPool::HighPairs;
    if (pool.size() < 2) {
        pool.clear();
        for (const auto& l : lines)
            if (l.bichromatic()) pool.push_back(&l);
        v.pool = WitnessPool::AllBichromatic;
    }
    // Not Case II, so the points are not all on one line and there are >= 2 bichromatic lines.
    const LineRecord* blue_heavy = nullptr;
    for (const LineRecord* l : pool)
        if (!blue_heavy || l->blue_count > blue_heavy->blue_count) blue_heavy = l;
    const LineRecord* red_heavy = nullptr;
    for (const LineRecord* l : pool)
        if (l != blue_heavy && (!red_heavy || l->red_count > red_heavy->red_count)) red_heavy = l;
    if (blue_heavy) v.witness = blue_heavy->line;
    if (red_heavy) v.second_witness = red_heavy->line;
    return v;
}

inline CaseVerdict two_extremes_classify(const ColoredConfig& config, const Rational& k1, const Rational& k2) {
    require_balanced(config);
    return two_extremes_classify(config, induced_lines(config), k1, k2);
}

/// |B| / (n(2n - r)); infinite when all 2n points are collinear.
inline ExtendedRatio beck_ratio(std::size_t n, std::size_t r, std::size_t num_bichromatic) {
    if (r >= 2 * n) return ExtendedRatio::infinite();
    return ExtendedRatio(Rational(num_bichromatic, n * (2 * n - r)));
}

inline ExtendedRatio beck_ratio(const ColoredConfig& config, std::span<const LineRecord> lines) {
    const std::size_t n = require_balanced(config);
    return beck_ratio(n, max_richness(lines), count_bichromatic(lines));
}

inline ExtendedRatio beck_ratio(const ColoredConfig& config) {
    require_balanced(config);
    return beck_ratio(config, induced_lines(config));
}

/// k-rich line count over N^2/k^3 + N/k, N the total point count.
inline Rational st_bound_ratio(std::size_t total_points, std::span<const LineRecord> lines, std::size_t k) {
    const std::size_t count = k_rich_count(lines, k);
    const Rational big_n(total_points);
    const Rational kk(k);
    return Rational(count) / (big_n * big_n / (kk * kk * kk) + big_n / kk);
}

inline Rational st_bound_ratio(const ColoredConfig& config, std::size_t k) {
    return st_bound_ratio(config.size(), induced_lines(config), k);
}

struct CrossLineCount {
    std::size_t actual = 0;
    std::size_t predictor = 0;
};

/// Takes X as the first `x_size` points off `ell` in combined index order and counts
/// the bichromatic lines meeting both X and ell. The predictor is
/// max(0, ceil(x*m/2) - C(x, 2)), m the fewest opposite-color points on ell seen from X.
inline CrossLineCount cross_line_count(const ColoredConfig& config, std::span<const LineRecord> lines,
                                       const CanonicalLine& ell, std::size_t x_size) {
    auto found = std::find_if(lines.begin(), lines.end(), [&](const LineRecord& l) { return l.line == ell; });
    if (found == lines.end()) throw invalid_line_error("line " + ell.str() + " is not induced by the configuration");

    const std::size_t total = config.size();
    std::vector<char> on_ell(total, 0);
    for (std::size_t m : found->members) on_ell[m] = 1;

    std::vector<char> in_x(total, 0);
    std::vector<std::size_t> xs;
    for (std::size_t i = 0; i < total && xs.size() < x_size; ++i)
        if (!on_ell[i]) {
            in_x[i] = 1;
            xs.push_back(i);
        }
    if (xs.size() < x_size)
        throw size_error("x_size " + std::to_string(x_size) + " exceeds the " + std::to_string(xs.size()) +
                         " points off the line");
    if (x_size == 0) return {};

    CrossLineCount out;
    for (const auto& l : lines) {
        if (!l.bichromatic()) continue;
        bool hits_x = false, hits_ell = false;
        for (std::size_t m : l.members) {
            hits_x = hits_x || in_x[m];
            hits_ell = hits_ell || on_ell[m];
        }
        if (hits_x && hits_ell) ++out.actual;
    }

    std::size_t min_opposite = found->richness;
    for (std::size_t x : xs) {
        const std::size_t opposite = config.color_of(x) == Color::Red ? found->blue_count : found->red_count;
        min_opposite = std::min(min_opposite, opposite);
    }
    const std::size_t half = (x_size * min_opposite + 1) / 2;
    const std::size_t overlap = x_size * (x_size - 1) / 2;
    out.predictor = half > overlap ? half - overlap : 0;
    return out;
}

inline CrossLineCount cross_line_count(const ColoredConfig& config, const CanonicalLine& ell, std::size_t x_size) {
    return cross_line_count(config, induced_lines(config), ell, x_size);
}

struct InequalityCheck {
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

/// Evaluates  k2^2 n (2n-r) / 2 - B(k2 (2n-r))  >=  k2^3 n (2n-r) / 2,  with B(x) = x(x-1)/2.
/// Requires 0 < k2 < 1 and 2 k2 n <= r <= 2n.
inline InequalityCheck main_inequality_check(std::size_t n, std::size_t r, const Rational& k2) {
    if (n == 0) throw domain_error("main_inequality_check: n must be positive");
    if (k2 <= 0 || k2 >= 1) throw domain_error("main_inequality_check: need 0 < k2 < 1, got " + to_string(k2));
    if (Rational(2 * n) * k2 > r || r > 2 * n)
        throw domain_error("main_inequality_check: need 2*k2*n <= r <= 2n, got n=" + std::to_string(n) +
                           " r=" + std::to_string(r) + " k2=" + to_string(k2));
    const Rational gap(2 * n - r);
    const Rational nn(n);
    const Rational x = k2 * gap;
    InequalityCheck out;
    out.lhs = k2 * k2 * nn * gap / 2 - x * (x - 1) / 2;
    out.rhs = k2 * k2 * k2 * nn * gap / 2;
    out.holds = out.lhs >= out.rhs;
    return out;
}

enum class CellStatus { Holds, Fails, OutOfDomain };

inline const char* cell_status_name(CellStatus s) noexcept {
    switch (s) {
    case CellStatus::Holds: return "holds";
    case CellStatus::Fails: return "fails";
    case CellStatus::OutOfDomain: return "out-of-domain";
    }
    return "?";
}

struct InequalityCell {
    Rational r_over_n;
    Rational k2;
    std::size_t r = 0;
    CellStatus status = CellStatus::OutOfDomain;
};

/// Maps main_inequality_check over a (r/n, k2) grid, row-major in r_over_n.
/// Cells where r is not an integer or the preconditions fail are OutOfDomain.
inline std::vector<InequalityCell> main_inequality_region(std::size_t n, std::span<const Rational> r_over_n,
                                                          std::span<const Rational> k2_values) {
    std::vector<InequalityCell> cells;
    cells.reserve(r_over_n.size() * k2_values.size());
    for (const auto& ratio : r_over_n) {
        for (const auto& k2 : k2_values) {
            InequalityCell cell{ratio, k2, 0, CellStatus::OutOfDomain};
            const Rational r_exact = ratio * n;
            if (is_integer(r_exact) && r_exact >= 0) {
                cell.r = r_exact.convert_to<std::size_t>();
                try {
                    cell.status = main_inequality_check(n, cell.r, k2).holds ? CellStatus::Holds : CellStatus::Fails;
                } catch (const domain_error&) {
                    cell.status = CellStatus::OutOfDomain;
                }
            }
            cells.push_back(cell);
        }
    }
    return cells;
}

/// Full per-configuration analysis. Lines are computed once and shared by every step.
inline BeckReport analyze(const ColoredConfig& config, const AnalysisParams& params = {}) {
    const std::size_t n = require_balanced(config);
    const std::vector<LineRecord> lines = induced_lines(config);
    BeckReport rep;
    rep.n = n;
    rep.total_points = config.size();
    rep.r = max_richness(lines);
    rep.num_induced = lines.size();
    rep.num_bichromatic = count_bichromatic(lines);
    rep.beck_ratio = beck_ratio(n, rep.r, rep.num_bichromatic);
    rep.spectrum = richness_spectrum(lines);
    rep.dyadic = dyadic_classes(config, lines);
    rep.pair_classes = classify_pairs(config, lines, params.k1);
    rep.verdict = two_extremes_classify(config, lines, params.k1, params.k2);
    return rep;
}

} // namespace beckline
