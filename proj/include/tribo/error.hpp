#pragma once
// Error hierarchy shared by the whole library. Everything derives from
// tribo::error so callers can catch one type at the boundary (the CLI maps
// these onto exit codes).

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tribo {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 64-bit arithmetic would wrap (or a word would exceed its capacity).
struct overflow_error : error {
    using error::error;
};

// Input value outside an operation's domain (e.g. encoding 0, index 0 of a
// 1-offset sequence).
struct domain_error : error {
    using error::error;
};

// A word failed structural validation; position is the offending index where
// one exists, std::string::npos otherwise.
struct validation_error : error {
    std::size_t pos;
    explicit validation_error(const std::string& what, std::size_t pos_ = std::string::npos)
        : error(what), pos(pos_) {}
};

// Malformed external data (b-files); line is 1-based.
struct parse_error : error {
    std::size_t line;
    parse_error(const std::string& what, std::size_t line_) : error(what), line(line_) {}
};

} // namespace tribo
