#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace beckline {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form: "p" for integers, "p/q" with q > 0 otherwise.
inline std::string to_string(const Rational& q) {
    return q.str();
}

inline std::string to_string(const Integer& z) {
    return z.str();
}

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline Integer floor(const Rational& q) {
    const Integer& num = boost::multiprecision::numerator(q);
    const Integer& den = boost::multiprecision::denominator(q);
    Integer quot = num / den;  // truncates toward zero
    if (num < 0 && quot * den != num) --quot;
    return quot;
}

inline Integer ceil(const Rational& q) {
    return -floor(Rational(-q));
}

namespace detail {

inline bool parse_integer(std::string_view s, Integer& out) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }
    if (pos == s.size()) return false;
    Integer value = 0;
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9') return false;
        value = value * 10 + (s[pos] - '0');
    }
    out = negative ? Integer(-value) : value;
    return true;
}

} // namespace detail

/// Parses "p" or "p/q" (q > 0). Non-reduced input is accepted and normalized.
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    Integer num;
    if (slash == std::string_view::npos) {
        if (!detail::parse_integer(text, num))
            throw parse_error("malformed rational '" + std::string(text) + "'", 0);
        return Rational(num);
    }
    Integer den;
    const auto den_text = text.substr(slash + 1);
    if (!detail::parse_integer(text.substr(0, slash), num) || den_text.empty() ||
        den_text.front() == '+' || den_text.front() == '-' || !detail::parse_integer(den_text, den))
        throw parse_error("malformed rational '" + std::string(text) + "'", 0);
    if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'", 0);
    return Rational(num, den);
}

} // namespace beckline
