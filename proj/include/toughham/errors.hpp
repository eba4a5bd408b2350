#pragma once

#include <stdexcept>
#include <string>

namespace toughham {

// Malformed input text (graph6/sparse6/edge list). Carries the position the
// parser had reached: line is 1-based (0 when unknown), offset is the 0-based
// byte offset within that line (-1 when unknown).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0, int offset = -1)
        : std::runtime_error(format(what, line, offset)), raw_(what), line_(line), offset_(offset) {}

    const std::string& raw() const { return raw_; }
    int line() const { return line_; }
    int byte_offset() const { return offset_; }

private:
    static std::string format(const std::string& what, int line, int offset) {
        std::string s = what;
        if (line > 0) s += " (line " + std::to_string(line) + ")";
        if (offset >= 0) s += " (byte " + std::to_string(offset) + ")";
        return s;
    }

    std::string raw_;
    int line_;
    int offset_;
};

// An operation refused to run because the input exceeds a configured cap
// (vertex-count limit for exact toughness, node budget for backtracking
// search). Callers that can retry should raise the relevant limit.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace toughham
