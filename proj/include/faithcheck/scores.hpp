#pragma once

#include <string>
#include <vector>

#include "faithcheck/textproc.hpp"

namespace faithcheck {

struct ScoredWord {
    Word word;
    double score = 0.0;  // in [0,1]; higher = more likely erroneous
};

// Word-level error scores. Response words carry hallucination scores,
// input argument words carry coverage scores; stop words are excluded.
struct WordScores {
    std::vector<ScoredWord> response_word_scores;
    std::vector<ScoredWord> input_word_scores;
};

inline std::string segment_to_string(const Segment& s) {
    switch (s.kind) {
        case SegmentKind::Prompt: return "prompt";
        case SegmentKind::Query: return "query";
        case SegmentKind::ProArgument: return "pro_argument:" + s.argument_id;
        case SegmentKind::ConArgument: return "con_argument:" + s.argument_id;
        case SegmentKind::PriorResponse: return "prior_response";
        case SegmentKind::Response: return "response";
    }
    return "response";
}

inline Segment segment_from_string(const std::string& text) {
    if (text == "prompt") return {SegmentKind::Prompt, {}};
    if (text == "query") return {SegmentKind::Query, {}};
    if (text == "prior_response") return {SegmentKind::PriorResponse, {}};
    if (text == "response") return {SegmentKind::Response, {}};
    if (text.rfind("pro_argument:", 0) == 0)
        return {SegmentKind::ProArgument, text.substr(13)};
    if (text.rfind("con_argument:", 0) == 0)
        return {SegmentKind::ConArgument, text.substr(13)};
    throw ValidationError("unknown segment tag: '" + text + "'");
}

}  // namespace faithcheck
