#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace beckline {

inline constexpr const char* kPointFileHeader = "beckline-points v1";

/// Point file text:
///
///     beckline-points v1
///     # comment
///     0 0 R
///     1/2 -3 B
///
/// `#` starts a comment anywhere on a line; blank lines are ignored. Points may
/// appear in any color order; serialization writes all red points, then all blue.
inline ColoredConfig parse_point_file(std::istream& in) {
    std::vector<ExactPoint> red, blue;
    std::set<ExactPoint> seen;
    std::string raw;
    std::size_t lineno = 0;
    bool have_header = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (!have_header) {
            if (tok.size() != 2 || tok[0] + " " + tok[1] != kPointFileHeader)
                throw parse_error(std::string("expected header '") + kPointFileHeader + "'", lineno);
            have_header = true;
            continue;
        }
        if (tok.size() != 3) throw parse_error("expected 'x y color'", lineno);
        ExactPoint p;
        try {
            p.x = parse_rational(tok[0]);
            p.y = parse_rational(tok[1]);
        } catch (const parse_error& e) {
            throw parse_error(e.what(), lineno);
        }
        if (tok[2] != "R" && tok[2] != "B") throw parse_error("color must be R or B, got '" + tok[2] + "'", lineno);
        if (!seen.insert(p).second) throw parse_error("duplicate point " + tok[0] + " " + tok[1], lineno);
        (tok[2] == "R" ? red : blue).push_back(std::move(p));
    }
    if (!have_header) throw parse_error("missing header", 0);
    return ColoredConfig(std::move(red), std::move(blue));
}

inline ColoredConfig parse_point_text(const std::string& text) {
    std::istringstream in(text);
    return parse_point_file(in);
}

inline ColoredConfig read_point_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'", 0);
    return parse_point_file(in);
}

inline std::string serialize_points(const ColoredConfig& config) {
    std::string out = kPointFileHeader;
    out += '\n';
    for (std::size_t i = 0; i < config.size(); ++i) {
        const ExactPoint& p = config.point(i);
        out += to_string(p.x) + ' ' + to_string(p.y) + ' ' + color_letter(config.color_of(i)) + '\n';
    }
    return out;
}

/// 64-bit FNV-1a of the canonically sorted point listing, as 16 hex digits.
/// Independent of input order, so it identifies the colored point set itself.
inline std::string config_digest(const ColoredConfig& config) {
    std::vector<std::pair<ExactPoint, char>> pts;
    for (std::size_t i = 0; i < config.size(); ++i) pts.emplace_back(config.point(i), color_letter(config.color_of(i)));
    std::sort(pts.begin(), pts.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    std::string canon;
    for (const auto& [p, c] : pts) canon += to_string(p.x) + ' ' + to_string(p.y) + ' ' + c + '\n';

    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : canon) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace beckline
