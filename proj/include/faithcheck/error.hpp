#pragma once

#include <stdexcept>
#include <string>

namespace faithcheck {

// Bad content in otherwise readable input: schema violations, broken
// invariants, dangling references. Maps to CLI exit code 1.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Input that could not be parsed at all (malformed JSON, bad UTF-8 framing).
struct ParseError : ValidationError {
    explicit ParseError(const std::string& what) : ValidationError(what) {}
};

// Filesystem trouble: missing files, unwritable outputs. Maps to exit code 2.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Remote scorer unreachable or replying garbage. Maps to exit code 2.
struct TransportError : std::runtime_error {
    explicit TransportError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace faithcheck
