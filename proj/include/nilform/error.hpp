#pragma once

#include <stdexcept>
#include <string>

namespace nilform {

// Domain misuse: bad indices, mismatched levels, missing substitution
// entries and the like.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the expression parsers; `offset` is the 0-based byte position
// in the input where the problem was detected.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace nilform
