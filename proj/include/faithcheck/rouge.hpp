#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "faithcheck/corpus.hpp"
#include "faithcheck/scores.hpp"
#include "faithcheck/textproc.hpp"

namespace faithcheck {

struct RougeOptions {
    // Score against argument phrases plus explanations when present;
    // set false to restrict matching to phrases.
    bool include_explanations = true;
    const StopWords* stopwords = nullptr;  // defaults to the embedded English list

    const StopWords& stops() const { return stopwords ? *stopwords : english_stopwords(); }
};

struct RougeDetail {
    double precision = 1.0;
    double recall_pro = 1.0;
    double recall_con = 1.0;
    // Degenerate-input flags: empty sides score as error-free by convention
    // (empty perspective -> recall 1, empty response -> precision 1).
    bool empty_pro = false;
    bool empty_con = false;
    bool empty_response = false;
    bool main_span_defaulted = false;
};

// Example-level ROUGE-1 scores: hallucination = 1 - precision,
// coverage = 1 - min(recall_pro, recall_con).
struct ExampleScores {
    double hallucination = 0.0;
    double coverage = 0.0;
    RougeDetail detail;
};

namespace rouge_detail {

using StemCounts = std::unordered_map<std::string, std::size_t>;

inline std::vector<Word> argument_words(const Example& e, Perspective p,
                                        const RougeOptions& opt) {
    std::vector<Word> words;
    for (const Argument& a : e.args(p)) {
        const Segment seg = p == Perspective::Pro ? pro_argument_segment(a.id)
                                                  : con_argument_segment(a.id);
        auto phrase_words = tokenize_words(a.phrase, seg, opt.stops());
        words.insert(words.end(), phrase_words.begin(), phrase_words.end());
        if (opt.include_explanations && a.explanation) {
            auto expl_words = tokenize_words(*a.explanation, seg, opt.stops());
            words.insert(words.end(), expl_words.begin(), expl_words.end());
        }
    }
    return content_words(words);
}

inline std::vector<Word> response_words(const Example& e, const RougeOptions& opt) {
    const Span span = e.effective_main_span();
    return content_words(
        tokenize_words(slice(e.response, span), response_segment(), opt.stops(), span.start));
}

inline StemCounts count_stems(const std::vector<Word>& words) {
    StemCounts counts;
    for (const auto& w : words) ++counts[w.stem];
    return counts;
}

inline std::size_t total(const StemCounts& counts) {
    std::size_t n = 0;
    for (const auto& [stem, c] : counts) n += c;
    return n;
}

// Clipped multiset overlap: each candidate stem matches at most as many
// times as the reference holds it.
inline std::size_t clipped_overlap(const StemCounts& candidate, const StemCounts& reference) {
    std::size_t n = 0;
    for (const auto& [stem, c] : candidate) {
        const auto it = reference.find(stem);
        if (it != reference.end()) n += std::min(c, it->second);
    }
    return n;
}

}  // namespace rouge_detail

inline ExampleScores rouge_example_scores(const Example& e, const RougeOptions& opt = {}) {
    using namespace rouge_detail;
    const auto pro = count_stems(argument_words(e, Perspective::Pro, opt));
    const auto con = count_stems(argument_words(e, Perspective::Con, opt));
    const auto resp = count_stems(response_words(e, opt));
    const std::size_t pro_total = total(pro);
    const std::size_t con_total = total(con);
    const std::size_t resp_total = total(resp);
    if (pro_total == 0 && con_total == 0 && resp_total == 0)
        throw ValidationError("example '" + e.id +
                              "': no content words in arguments or response, nothing to score");

    StemCounts inputs = pro;
    for (const auto& [stem, c] : con) inputs[stem] += c;

    ExampleScores scores;
    scores.detail.empty_pro = pro_total == 0;
    scores.detail.empty_con = con_total == 0;
    scores.detail.empty_response = resp_total == 0;
    scores.detail.main_span_defaulted = e.main_span_defaulted();
    scores.detail.precision =
        resp_total == 0 ? 1.0
                        : static_cast<double>(clipped_overlap(resp, inputs)) / resp_total;
    scores.detail.recall_pro =
        pro_total == 0 ? 1.0 : static_cast<double>(clipped_overlap(pro, resp)) / pro_total;
    scores.detail.recall_con =
        con_total == 0 ? 1.0 : static_cast<double>(clipped_overlap(con, resp)) / con_total;
    scores.hallucination = 1.0 - scores.detail.precision;
    scores.coverage = 1.0 - std::min(scores.detail.recall_pro, scores.detail.recall_con);
    return scores;
}

// Word-level scores are type-level: a response word scores 0 iff its stem
// occurs anywhere in the input arguments, an input word scores 0 iff its stem
// occurs in the response.
inline WordScores rouge_word_scores(const Example& e, const RougeOptions& opt = {}) {
    using namespace rouge_detail;
    auto pro_words = argument_words(e, Perspective::Pro, opt);
    auto con_words = argument_words(e, Perspective::Con, opt);
    auto resp_words = response_words(e, opt);

    std::unordered_set<std::string> input_stems;
    for (const auto& w : pro_words) input_stems.insert(w.stem);
    for (const auto& w : con_words) input_stems.insert(w.stem);
    std::unordered_set<std::string> resp_stems;
    for (const auto& w : resp_words) resp_stems.insert(w.stem);

    WordScores out;
    out.response_word_scores.reserve(resp_words.size());
    for (auto& w : resp_words) {
        const double score = input_stems.count(w.stem) ? 0.0 : 1.0;
        out.response_word_scores.push_back({std::move(w), score});
    }
    auto score_input = [&](std::vector<Word>& words) {
        for (auto& w : words) {
            const double score = resp_stems.count(w.stem) ? 0.0 : 1.0;
            out.input_word_scores.push_back({std::move(w), score});
        }
    };
    out.input_word_scores.reserve(pro_words.size() + con_words.size());
    score_input(pro_words);
    score_input(con_words);
    return out;
}

}  // namespace faithcheck
