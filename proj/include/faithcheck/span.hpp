#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace faithcheck {

// Half-open byte range [start, end) into a UTF-8 encoded host text.
struct Span {
    std::size_t start = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - start; }
    bool empty() const { return end <= start; }
    bool well_formed() const { return start < end; }
    bool within(std::size_t text_size) const { return start <= end && end <= text_size; }
    bool contains(const Span& other) const { return other.start >= start && other.end <= end; }

    bool operator==(const Span&) const = default;
};

inline std::string_view slice(std::string_view text, const Span& span) {
    return text.substr(span.start, span.end - span.start);
}

}  // namespace faithcheck
