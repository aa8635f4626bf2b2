#pragma once

#include <stdexcept>
#include <string>

namespace beckline {

/// Base of every error the library raises.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class identical_points_error : public error {
public:
    identical_points_error() : error("line_through: the two points coincide") {}
};

class duplicate_point_error : public error {
public:
    using error::error;
};

class too_few_points_error : public error {
public:
    using error::error;
};

/// Raised by analysis operations that need |red| == |blue|.
class unequal_colors_error : public error {
public:
    using error::error;
};

class invalid_constants_error : public error {
public:
    using error::error;
};

class domain_error : public error {
public:
    using error::error;
};

class invalid_line_error : public error {
public:
    using error::error;
};

class size_error : public error {
public:
    using error::error;
};

class invalid_spec_error : public error {
public:
    using error::error;
};

class sampling_exhausted_error : public error {
public:
    using error::error;
};

class move_inapplicable_error : public error {
public:
    using error::error;
};

/// Malformed point file or rational literal.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t line)
        : error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace beckline
