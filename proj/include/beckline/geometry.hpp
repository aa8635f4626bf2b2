#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>

#include "errors.hpp"
#include "rational.hpp"

namespace beckline {

enum class Color { Red, Blue };

inline constexpr Color opposite(Color c) noexcept { return c == Color::Red ? Color::Blue : Color::Red; }

inline constexpr char color_letter(Color c) noexcept { return c == Color::Red ? 'R' : 'B'; }

/// A plane point with exact rational coordinates.
///
/// Equality and ordering are geometric: the color tag does not take part.
struct ExactPoint {
    Rational x;
    Rational y;
    std::optional<Color> color;

    ExactPoint() = default;
    ExactPoint(Rational x_, Rational y_, std::optional<Color> c = std::nullopt)
        : x(std::move(x_)), y(std::move(y_)), color(c) {}

    friend bool operator==(const ExactPoint& p, const ExactPoint& q) { return p.x == q.x && p.y == q.y; }
    friend bool operator<(const ExactPoint& p, const ExactPoint& q) {
        if (p.x != q.x) return p.x < q.x;
        return p.y < q.y;
    }
};

inline std::ostream& operator<<(std::ostream& os, const ExactPoint& p) {
    os << '(' << p.x << ", " << p.y << ')';
    if (p.color) os << color_letter(*p.color);
    return os;
}

/// Line a*x + b*y + c = 0 with gcd(|a|,|b|,|c|) == 1 and a > 0, or a == 0 and b > 0.
///
/// Construct through canonicalize() or line_through(); the fields are public so the
/// type stays a plain value, but only canonical triples are meaningful keys.
struct CanonicalLine {
    Integer a;
    Integer b;
    Integer c;

    friend bool operator==(const CanonicalLine&, const CanonicalLine&) = default;
    friend bool operator<(const CanonicalLine& l, const CanonicalLine& m) {
        return std::tie(l.a, l.b, l.c) < std::tie(m.a, m.b, m.c);
    }

    std::string str() const { return "(" + a.str() + "," + b.str() + "," + c.str() + ")"; }
};

inline std::ostream& operator<<(std::ostream& os, const CanonicalLine& l) { return os << l.str(); }

struct CanonicalLineHash {
    std::size_t operator()(const CanonicalLine& l) const noexcept {
        std::size_t h = boost::multiprecision::hash_value(l.a);
        h = h * 0x9E3779B97F4A7C15ull ^ boost::multiprecision::hash_value(l.b);
        h = h * 0x9E3779B97F4A7C15ull ^ boost::multiprecision::hash_value(l.c);
        return h;
    }
};

/// Normalizes an integer triple; throws domain_error when a == b == 0.
inline CanonicalLine canonicalize(Integer a, Integer b, Integer c) {
    if (a == 0 && b == 0) throw domain_error("degenerate line: a == b == 0");
    Integer g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(a), abs(b)), abs(c));
    if (g != 1) {
        a /= g;
        b /= g;
        c /= g;
    }
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
        c = -c;
    }
    return {std::move(a), std::move(b), std::move(c)};
}

/// Clears denominators (multiplying by their lcm) and normalizes.
inline CanonicalLine canonicalize(const Rational& a, const Rational& b, const Rational& c) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::lcm;
    using boost::multiprecision::numerator;
    const Integer scale = lcm(lcm(denominator(a), denominator(b)), denominator(c));
    return canonicalize(Integer(numerator(a) * (scale / denominator(a))),
                        Integer(numerator(b) * (scale / denominator(b))),
                        Integer(numerator(c) * (scale / denominator(c))));
}

inline CanonicalLine line_through(const ExactPoint& p, const ExactPoint& q) {
    if (p == q) throw identical_points_error();
    Rational a = p.y - q.y;
    Rational b = q.x - p.x;
    Rational c = p.x * q.y - q.x * p.y;
    return canonicalize(a, b, c);
}

inline bool incident(const CanonicalLine& l, const ExactPoint& p) {
    Rational value = p.x * l.a + p.y * l.b + l.c;
    return value == 0;
}

/// Sign of the orientation determinant with rows (x, y, 1).
inline int orientation(const ExactPoint& p, const ExactPoint& q, const ExactPoint& s) {
    Rational det = (q.x - p.x) * (s.y - p.y) - (q.y - p.y) * (s.x - p.x);
    return det.sign();
}

inline bool collinear(const ExactPoint& p, const ExactPoint& q, const ExactPoint& s) {
    return orientation(p, q, s) == 0;
}

} // namespace beckline
