#pragma once

#include <array>
#include <fstream>
#include <string>
#include <string_view>
#include <unordered_set>

#include "faithcheck/error.hpp"
#include "faithcheck/porter.hpp"

namespace faithcheck {

using StopWords = std::unordered_set<std::string>;

// English stop words, matching the NLTK English list (179 entries, as
// shipped in NLTK 3.4-3.8). data/stopwords_english.txt mirrors this table
// so the list stays auditable; a unit test keeps the two in sync.
// Entries with apostrophes never match our tokenizer's output (it splits
// at apostrophes) but are kept for list fidelity; the bare fragments
// ("don", "t", "ve", ...) are what actually fire.
inline const StopWords& english_stopwords() {
    static const StopWords words = [] {
        static constexpr std::array<std::string_view, 179> list{{
            "i", "me", "my", "myself", "we", "our", "ours", "ourselves",
            "you", "you're", "you've", "you'll", "you'd", "your", "yours",
            "yourself", "yourselves", "he", "him", "his", "himself", "she",
            "she's", "her", "hers", "herself", "it", "it's", "its", "itself",
            "they", "them", "their", "theirs", "themselves", "what", "which",
            "who", "whom", "this", "that", "that'll", "these", "those", "am",
            "is", "are", "was", "were", "be", "been", "being", "have", "has",
            "had", "having", "do", "does", "did", "doing", "a", "an", "the",
            "and", "but", "if", "or", "because", "as", "until", "while",
            "of", "at", "by", "for", "with", "about", "against", "between",
            "into", "through", "during", "before", "after", "above", "below",
            "to", "from", "up", "down", "in", "out", "on", "off", "over",
            "under", "again", "further", "then", "once", "here", "there",
            "when", "where", "why", "how", "all", "any", "both", "each",
            "few", "more", "most", "other", "some", "such", "no", "nor",
            "not", "only", "own", "same", "so", "than", "too", "very", "s",
            "t", "can", "will", "just", "don", "don't", "should",
            "should've", "now", "d", "ll", "m", "o", "re", "ve", "y", "ain",
            "aren", "aren't", "couldn", "couldn't", "didn", "didn't",
            "doesn", "doesn't", "hadn", "hadn't", "hasn", "hasn't", "haven",
            "haven't", "isn", "isn't", "ma", "mightn", "mightn't", "mustn",
            "mustn't", "needn", "needn't", "shan", "shan't", "shouldn",
            "shouldn't", "wasn", "wasn't", "weren", "weren't", "won",
            "won't", "wouldn", "wouldn't",
        }};
        StopWords s;
        s.reserve(list.size());
        for (auto w : list) s.emplace(w);
        return s;
    }();
    return words;
}

// One lowercase word per line; blank lines and '#' comments allowed.
inline StopWords load_stopword_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open stop-word file: " + path);
    StopWords words;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        std::size_t begin = line.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        words.insert(ascii_lower(line.substr(begin)));
    }
    return words;
}

}  // namespace faithcheck
