#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "faithcheck/error.hpp"
#include "faithcheck/porter.hpp"
#include "faithcheck/span.hpp"
#include "faithcheck/stopwords.hpp"

namespace faithcheck {

// Where a word or subword token came from within an example's prompt/response.
enum class SegmentKind {
    Prompt,
    Query,
    ProArgument,
    ConArgument,
    PriorResponse,
    Response,
};

struct Segment {
    SegmentKind kind = SegmentKind::Response;
    std::string argument_id;  // set for Pro/ConArgument only

    bool is_argument() const {
        return kind == SegmentKind::ProArgument || kind == SegmentKind::ConArgument;
    }
    bool operator==(const Segment&) const = default;
};

inline Segment query_segment() { return {SegmentKind::Query, {}}; }
inline Segment response_segment() { return {SegmentKind::Response, {}}; }
inline Segment pro_argument_segment(std::string id) {
    return {SegmentKind::ProArgument, std::move(id)};
}
inline Segment con_argument_segment(std::string id) {
    return {SegmentKind::ConArgument, std::move(id)};
}

// A whitespace/punctuation-delimited word. Surfaces keep original case;
// stems are lowercase Porter stems, left empty for stop words.
struct Word {
    std::string surface;
    Span char_range;
    Segment source;
    bool is_stop = false;
    std::string stem;

    bool operator==(const Word&) const = default;
};

// One LLM subword token. `text` must be the literal byte slice
// [char_range.start, char_range.end) of its host sequence; SentencePiece-style
// markers (U+2581) are fine since that codepoint classifies as a separator.
struct SubwordToken {
    std::string text;
    Span char_range;
    Segment segment;

    bool operator==(const SubwordToken&) const = default;
};

namespace textproc_detail {

// Decodes one UTF-8 codepoint at byte offset i; returns its byte length
// (1 for an invalid lead byte, which we pass through as a word character).
inline std::size_t decode_utf8(std::string_view text, std::size_t i, std::uint32_t& cp) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    if (b0 < 0x80) {
        cp = b0;
        return 1;
    }
    std::size_t len = 0;
    std::uint32_t acc = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        acc = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        acc = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        acc = b0 & 0x07;
    } else {
        cp = b0;
        return 1;
    }
    if (i + len > text.size()) {
        cp = b0;
        return 1;
    }
    for (std::size_t k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(text[i + k]);
        if ((b & 0xC0) != 0x80) {
            cp = b0;
            return 1;
        }
        acc = (acc << 6) | (b & 0x3F);
    }
    cp = acc;
    return len;
}

inline bool is_unicode_space(std::uint32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
        case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
        case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

// Word characters are letters and digits; Unicode punctuation and symbol
// blocks act as separators (covers ASCII punctuation, general punctuation,
// currency/math/arrow symbols, CJK punctuation, the U+2581 subword marker,
// and emoji). Unlisted non-ASCII codepoints count as word characters.
inline bool is_separator(std::uint32_t cp) {
    if (is_unicode_space(cp)) return true;
    if (cp < 0x80) {
        const bool digit = cp >= '0' && cp <= '9';
        const bool upper = cp >= 'A' && cp <= 'Z';
        const bool lower = cp >= 'a' && cp <= 'z';
        return !(digit || upper || lower);
    }
    if (cp == 0xAA || cp == 0xBA) return false;  // ordinal indicators are letters
    if (cp >= 0xA1 && cp <= 0xBF) return true;   // Latin-1 punctuation and signs
    if (cp == 0xD7 || cp == 0xF7) return true;   // multiplication/division signs
    if (cp >= 0x2000 && cp <= 0x206F) return true;
    if (cp >= 0x20A0 && cp <= 0x20CF) return true;
    if (cp >= 0x2190 && cp <= 0x2BFF) return true;
    if (cp >= 0x2E00 && cp <= 0x2E7F) return true;
    if (cp >= 0x3000 && cp <= 0x303F) return true;
    if (cp >= 0xFE50 && cp <= 0xFE6F) return true;
    if (cp >= 0xFF01 && cp <= 0xFF0F) return true;
    if (cp >= 0xFF1A && cp <= 0xFF20) return true;
    if (cp >= 0xFF3B && cp <= 0xFF40) return true;
    if (cp >= 0xFF5B && cp <= 0xFF65) return true;
    if (cp >= 0x1F000 && cp <= 0x1FAFF) return true;
    return false;
}

}  // namespace textproc_detail

// Splits text into maximal runs of word characters. char_range offsets are
// bytes into `text` (shift by a base offset via `range_offset` when tokenizing
// a substring of a larger host text).
inline std::vector<Word> tokenize_words(std::string_view text,
                                        const Segment& source = response_segment(),
                                        const StopWords& stops = english_stopwords(),
                                        std::size_t range_offset = 0) {
    using namespace textproc_detail;
    std::vector<Word> words;
    std::size_t i = 0;
    std::size_t word_start = std::string_view::npos;
    auto flush = [&](std::size_t end) {
        if (word_start == std::string_view::npos) return;
        Word w;
        w.surface = std::string(text.substr(word_start, end - word_start));
        w.char_range = {range_offset + word_start, range_offset + end};
        w.source = source;
        const std::string lowered = ascii_lower(w.surface);
        w.is_stop = stops.count(lowered) > 0;
        if (!w.is_stop) w.stem = porter_stem(lowered);
        words.push_back(std::move(w));
        word_start = std::string_view::npos;
    };
    while (i < text.size()) {
        std::uint32_t cp = 0;
        const std::size_t len = decode_utf8(text, i, cp);
        if (is_separator(cp)) {
            flush(i);
        } else if (word_start == std::string_view::npos) {
            word_start = i;
        }
        i += len;
    }
    flush(text.size());
    return words;
}

inline std::vector<Word> content_words(const std::vector<Word>& words) {
    std::vector<Word> out;
    out.reserve(words.size());
    for (const auto& w : words)
        if (!w.is_stop) out.push_back(w);
    return out;
}

// Result of merging subword tokens: words plus, per word, the indices of the
// tokens that contributed at least one byte to it.
struct MergedWords {
    std::vector<Word> words;
    std::vector<std::vector<std::size_t>> token_indices;
};

// Rebuilds the text covered by a contiguous token list and re-tokenizes it,
// so consecutive tokens not separated by whitespace/punctuation fuse into one
// word and no word ever spans a separator. Each word takes the segment of its
// first constituent token.
inline MergedWords merge_subword_tokens(const std::vector<SubwordToken>& tokens,
                                        const StopWords& stops = english_stopwords()) {
    MergedWords result;
    if (tokens.empty()) return result;
    std::string text;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const auto& tok = tokens[i];
        if (tok.text.size() != tok.char_range.size())
            throw ValidationError("subword token text does not match its char range (token " +
                                  std::to_string(i) + ")");
        if (i > 0 && tok.char_range.start != tokens[i - 1].char_range.end)
            throw ValidationError("non-contiguous token ranges at token " + std::to_string(i));
        text += tok.text;
    }
    const std::size_t base = tokens.front().char_range.start;
    result.words = tokenize_words(text, response_segment(), stops, base);
    result.token_indices.reserve(result.words.size());
    std::size_t tok_idx = 0;
    for (auto& word : result.words) {
        while (tokens[tok_idx].char_range.end <= word.char_range.start) ++tok_idx;
        std::vector<std::size_t> contributors;
        for (std::size_t t = tok_idx;
             t < tokens.size() && tokens[t].char_range.start < word.char_range.end; ++t)
            contributors.push_back(t);
        word.source = tokens[contributors.front()].segment;
        result.token_indices.push_back(std::move(contributors));
    }
    return result;
}

}  // namespace faithcheck
