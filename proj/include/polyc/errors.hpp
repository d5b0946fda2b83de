#pragma once

#include <stdexcept>
#include <string>

namespace polyc {

// Input exceeds a hard size bound of an exact algorithm (e.g. canonical
// forms above the permutation-sweep limit, search guards).
class unsupported_size : public std::runtime_error {
public:
    explicit unsupported_size(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input; line is 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace polyc
