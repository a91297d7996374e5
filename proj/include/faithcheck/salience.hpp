#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "faithcheck/corpus.hpp"
#include "faithcheck/scores.hpp"
#include "faithcheck/textproc.hpp"

namespace faithcheck {

struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    bool empty() const { return rows == 0 || cols == 0; }
};

// Raw token-to-token attribution map. Rows are input-side tokens (prompt,
// query, arguments, prior response), columns are response tokens; entries are
// non-negative gradient-times-input magnitudes before any normalization.
struct SalienceMap {
    std::vector<SubwordToken> input_tokens;
    std::vector<SubwordToken> response_tokens;
    Matrix matrix;
    bool normalized = false;
};

// Word-to-word map after merging subwords: rows are argument content words,
// columns are response content words inside the main response span.
struct WordSalienceMap {
    std::vector<Word> input_words;
    std::vector<Word> response_words;
    Matrix matrix;
};

enum class Aggregation { Max, Sum, NegEntropy };

inline std::string to_string(Aggregation a) {
    switch (a) {
        case Aggregation::Max: return "max";
        case Aggregation::Sum: return "sum";
        case Aggregation::NegEntropy: return "negentropy";
    }
    return "max";
}

inline Aggregation aggregation_from_string(const std::string& s) {
    if (s == "max") return Aggregation::Max;
    if (s == "sum") return Aggregation::Sum;
    if (s == "negentropy") return Aggregation::NegEntropy;
    throw ParseError("unknown aggregation: '" + s + "'");
}

// Per-word contribution scores (alpha, one per input word) and attribution
// scores (beta, one per response word), plus the example-level rollups.
struct SalienceScores {
    std::vector<double> contributions;
    std::vector<double> attributions;
    double s_hall = 0.0;
    double s_cov = 0.0;
    Aggregation aggregation = Aggregation::Max;
};

// Indices into WordSalienceMap::input_words, split by perspective.
struct PerspectiveSets {
    std::vector<std::size_t> pro;
    std::vector<std::size_t> con;
};

inline void validate_salience_map(const SalienceMap& map) {
    if (map.matrix.rows != map.input_tokens.size() ||
        map.matrix.cols != map.response_tokens.size())
        throw ValidationError("salience matrix dimensions do not match token lists");
    for (double v : map.matrix.data) {
        if (!std::isfinite(v)) throw ValidationError("salience matrix has a non-finite entry");
        if (v < 0.0) throw ValidationError("salience matrix has a negative entry");
    }
}

// Squares every entry, then scales each column to sum to one, so the
// attributions to each response token form a distribution. Scale factors on
// raw columns cancel out here.
inline SalienceMap normalize_salience(const SalienceMap& map) {
    validate_salience_map(map);
    SalienceMap out = map;
    for (double& v : out.matrix.data) v *= v;
    for (std::size_t c = 0; c < out.matrix.cols; ++c) {
        double sum = 0.0;
        for (std::size_t r = 0; r < out.matrix.rows; ++r) sum += out.matrix.at(r, c);
        if (sum <= 0.0)
            throw ValidationError("salience column for response token " + std::to_string(c) +
                                  " is all zeros and cannot be normalized");
        for (std::size_t r = 0; r < out.matrix.rows; ++r) out.matrix.at(r, c) /= sum;
    }
    out.normalized = true;
    return out;
}

// Reduces the normalized token map to content words: word-pair entries take
// the maximum over constituent token pairs; rows keep only argument-segment
// content words, columns only response content words inside the main span.
inline WordSalienceMap tokens_to_words(const SalienceMap& map, const Span& main_response_span,
                                       const StopWords& stops = english_stopwords()) {
    if (!map.normalized)
        throw ValidationError("tokens_to_words requires a normalized salience map");
    bool any_argument = false;
    for (const auto& t : map.input_tokens)
        if (t.segment.is_argument()) any_argument = true;
    if (!any_argument)
        throw ValidationError("salience map input tokens carry no argument segment tags");

    const MergedWords input_merge = merge_subword_tokens(map.input_tokens, stops);
    const MergedWords response_merge = merge_subword_tokens(map.response_tokens, stops);

    WordSalienceMap out;
    std::vector<const std::vector<std::size_t>*> row_tokens;
    for (std::size_t i = 0; i < input_merge.words.size(); ++i) {
        const Word& w = input_merge.words[i];
        if (!w.source.is_argument() || w.is_stop) continue;
        out.input_words.push_back(w);
        row_tokens.push_back(&input_merge.token_indices[i]);
    }
    std::vector<const std::vector<std::size_t>*> col_tokens;
    for (std::size_t j = 0; j < response_merge.words.size(); ++j) {
        const Word& w = response_merge.words[j];
        if (w.is_stop || !main_response_span.contains(w.char_range)) continue;
        out.response_words.push_back(w);
        col_tokens.push_back(&response_merge.token_indices[j]);
    }

    out.matrix = Matrix(out.input_words.size(), out.response_words.size());
    for (std::size_t i = 0; i < row_tokens.size(); ++i) {
        for (std::size_t j = 0; j < col_tokens.size(); ++j) {
            double best = 0.0;
            for (std::size_t ti : *row_tokens[i])
                for (std::size_t tj : *col_tokens[j])
                    best = std::max(best, map.matrix.at(ti, tj));
            out.matrix.at(i, j) = best;
        }
    }
    return out;
}

namespace salience_detail {

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// Aggregates one line (row or column) of the word map into a single score.
// NegEntropy: 1 - H(normalized line)/log(n); a point mass scores 1, a uniform
// line 0. All-zero lines score 0 for every aggregation (no signal at all),
// and a single-entry line scores its mass under Max/Sum and 1 under NegEntropy.
inline double aggregate_line(const std::vector<double>& line, Aggregation agg) {
    double sum = 0.0, mx = 0.0;
    for (double v : line) {
        sum += v;
        mx = std::max(mx, v);
    }
    switch (agg) {
        case Aggregation::Max:
            return mx;
        case Aggregation::Sum:
            return clamp01(sum);
        case Aggregation::NegEntropy: {
            if (sum <= 0.0) return 0.0;
            if (line.size() == 1) return 1.0;
            double entropy = 0.0;
            for (double v : line) {
                if (v <= 0.0) continue;
                const double p = v / sum;
                entropy -= p * std::log(p);
            }
            return clamp01(1.0 - entropy / std::log(static_cast<double>(line.size())));
        }
    }
    return mx;
}

inline double geometric_mean_floored(const std::vector<double>& values) {
    if (values.empty()) return 1.0;
    double log_sum = 0.0;
    for (double v : values) log_sum += std::log(std::max(v, 1e-12));
    return std::exp(log_sum / static_cast<double>(values.size()));
}

inline double arithmetic_mean(const std::vector<double>& values) {
    if (values.empty()) return 1.0;
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

}  // namespace salience_detail

inline SalienceScores salience_word_scores(const WordSalienceMap& map, Aggregation agg) {
    if (map.matrix.empty())
        throw ValidationError("word salience map is empty; no words to score");
    SalienceScores scores;
    scores.aggregation = agg;
    scores.contributions.reserve(map.matrix.rows);
    for (std::size_t i = 0; i < map.matrix.rows; ++i) {
        std::vector<double> row(map.matrix.cols);
        for (std::size_t j = 0; j < map.matrix.cols; ++j) row[j] = map.matrix.at(i, j);
        scores.contributions.push_back(salience_detail::aggregate_line(row, agg));
    }
    scores.attributions.reserve(map.matrix.cols);
    for (std::size_t j = 0; j < map.matrix.cols; ++j) {
        std::vector<double> col(map.matrix.rows);
        for (std::size_t i = 0; i < map.matrix.rows; ++i) col[i] = map.matrix.at(i, j);
        scores.attributions.push_back(salience_detail::aggregate_line(col, agg));
    }
    return scores;
}

inline PerspectiveSets perspective_sets(const WordSalienceMap& map) {
    PerspectiveSets sets;
    for (std::size_t i = 0; i < map.input_words.size(); ++i) {
        if (map.input_words[i].source.kind == SegmentKind::ProArgument)
            sets.pro.push_back(i);
        else
            sets.con.push_back(i);
    }
    return sets;
}

// Example-level rollup: s_cov = 1 - min of per-perspective means of alpha,
// s_hall = 1 - mean of beta over response words. The mean is geometric
// (zeros floored at 1e-12); the arithmetic variant is available for comparison.
inline SalienceScores salience_example_scores(SalienceScores scores, const PerspectiveSets& sets,
                                              bool arithmetic_mean = false) {
    if (scores.attributions.empty())
        throw ValidationError("no response words to aggregate into an example score");
    if (sets.pro.size() + sets.con.size() != scores.contributions.size())
        throw ValidationError("perspective sets must assign every input word to exactly one side");
    auto mean = arithmetic_mean ? salience_detail::arithmetic_mean
                                : salience_detail::geometric_mean_floored;
    auto gather = [&](const std::vector<std::size_t>& idx) {
        std::vector<double> vals;
        vals.reserve(idx.size());
        for (std::size_t i : idx) {
            if (i >= scores.contributions.size())
                throw ValidationError("perspective set index out of range");
            vals.push_back(scores.contributions[i]);
        }
        return vals;
    };
    const double pro_mean = mean(gather(sets.pro));  // empty perspective -> 1
    const double con_mean = mean(gather(sets.con));
    scores.s_cov = 1.0 - std::min(pro_mean, con_mean);
    scores.s_hall = 1.0 - mean(scores.attributions);
    return scores;
}

// Full pipeline for one example's raw map.
inline SalienceScores score_salience_map(const SalienceMap& raw, const Span& main_response_span,
                                         Aggregation agg,
                                         const StopWords& stops = english_stopwords(),
                                         bool arithmetic_mean = false) {
    const SalienceMap normalized = normalize_salience(raw);
    const WordSalienceMap words = tokens_to_words(normalized, main_response_span, stops);
    SalienceScores scores = salience_word_scores(words, agg);
    return salience_example_scores(std::move(scores), perspective_sets(words), arithmetic_mean);
}

// Word-level error scores: coverage = 1 - alpha for input words,
// hallucination = 1 - beta for response words.
inline WordScores salience_word_error_scores(const WordSalienceMap& map,
                                             const SalienceScores& scores) {
    WordScores out;
    out.input_word_scores.reserve(map.input_words.size());
    for (std::size_t i = 0; i < map.input_words.size(); ++i)
        out.input_word_scores.push_back({map.input_words[i], 1.0 - scores.contributions[i]});
    out.response_word_scores.reserve(map.response_words.size());
    for (std::size_t j = 0; j < map.response_words.size(); ++j)
        out.response_word_scores.push_back({map.response_words[j], 1.0 - scores.attributions[j]});
    return out;
}

// ---------------------------------------------------------------------------
// File format: one JSON map per example, raw (pre-normalization) values.
// ---------------------------------------------------------------------------

inline json salience_token_to_json(const SubwordToken& t) {
    return json{{"text", t.text},
                {"start", t.char_range.start},
                {"end", t.char_range.end},
                {"segment", segment_to_string(t.segment)}};
}

inline SubwordToken salience_token_from_json(const json& j) {
    SubwordToken t;
    t.text = j.at("text").get<std::string>();
    t.char_range = {j.at("start").get<std::size_t>(), j.at("end").get<std::size_t>()};
    t.segment = segment_from_string(j.at("segment").get<std::string>());
    return t;
}

inline json salience_map_to_json(const SalienceMap& map) {
    json input = json::array();
    for (const auto& t : map.input_tokens) input.push_back(salience_token_to_json(t));
    json response = json::array();
    for (const auto& t : map.response_tokens) response.push_back(salience_token_to_json(t));
    json rows = json::array();
    for (std::size_t r = 0; r < map.matrix.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < map.matrix.cols; ++c) row.push_back(map.matrix.at(r, c));
        rows.push_back(std::move(row));
    }
    return json{{"input_tokens", std::move(input)},
                {"response_tokens", std::move(response)},
                {"matrix", std::move(rows)}};
}

inline SalienceMap salience_map_from_json(const json& j) {
    SalienceMap map;
    for (const auto& t : j.at("input_tokens")) map.input_tokens.push_back(salience_token_from_json(t));
    for (const auto& t : j.at("response_tokens"))
        map.response_tokens.push_back(salience_token_from_json(t));
    const auto& rows = j.at("matrix");
    map.matrix = Matrix(map.input_tokens.size(), map.response_tokens.size());
    if (rows.size() != map.matrix.rows)
        throw ValidationError("salience matrix row count does not match input tokens");
    for (std::size_t r = 0; r < map.matrix.rows; ++r) {
        const auto& row = rows[r];
        if (row.size() != map.matrix.cols)
            throw ValidationError("salience matrix row " + std::to_string(r) +
                                  " does not match response token count");
        for (std::size_t c = 0; c < map.matrix.cols; ++c)
            map.matrix.at(r, c) = row[c].get<double>();
    }
    validate_salience_map(map);
    return map;
}

inline SalienceMap load_salience_map(const std::string& path) {
    return salience_map_from_json(read_json_file(path));
}

inline void save_salience_map(const SalienceMap& map, const std::string& path) {
    write_json_file(path, salience_map_to_json(map));
}

}  // namespace faithcheck
