#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tricat {

/// Raised by text parsers (step strings, b-files). `position()` is the
/// 1-based token index for step strings and the 1-based line number for
/// b-files.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t position)
        : std::runtime_error(message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Raised when a request exceeds a configured exhaustive-computation bound.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tricat
