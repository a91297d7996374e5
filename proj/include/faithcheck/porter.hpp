#pragma once

#include <array>
#include <cctype>
#include <string>
#include <string_view>

namespace faithcheck {

// Porter stemmer, classic 1980 algorithm (Step 2 uses the published
// abli->able rule, no later revisions). Inputs are ASCII-lowercased first;
// strings of length <= 2 pass through unchanged, as in the author's
// reference implementation. Non-letters classify as consonants.
namespace porter_detail {

inline bool is_cons(const std::string& w, std::size_t i) {
    switch (w[i]) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !is_cons(w, i - 1);
        default:
            return true;
    }
}

// m in [C](VC)^m[V]: count of vowel-run -> consonant-run transitions in w[0..len).
inline std::size_t measure(const std::string& w, std::size_t len) {
    std::size_t m = 0;
    bool prev_vowel = false;
    for (std::size_t i = 0; i < len; ++i) {
        const bool vowel = !is_cons(w, i);
        if (prev_vowel && !vowel) ++m;
        prev_vowel = vowel;
    }
    return m;
}

inline bool has_vowel(const std::string& w, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        if (!is_cons(w, i)) return true;
    return false;
}

inline bool double_cons_end(const std::string& w, std::size_t len) {
    return len >= 2 && w[len - 1] == w[len - 2] && is_cons(w, len - 1);
}

// *o: prefix ends consonant-vowel-consonant and the final consonant is not w, x or y.
inline bool cvc_end(const std::string& w, std::size_t len) {
    if (len < 3) return false;
    if (!is_cons(w, len - 1) || is_cons(w, len - 2) || !is_cons(w, len - 3)) return false;
    const char c = w[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

inline bool ends_with(const std::string& w, std::string_view suffix) {
    return w.size() >= suffix.size() &&
           std::string_view(w).substr(w.size() - suffix.size()) == suffix;
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// Applies the rule with the longest matching suffix, provided m(stem) > min_measure.
// Porter semantics: if the longest match's condition fails, the whole step is a no-op.
template <std::size_t N>
inline void apply_rules(std::string& w, const std::array<Rule, N>& rules,
                        std::size_t min_measure) {
    const Rule* best = nullptr;
    for (const Rule& r : rules) {
        if (ends_with(w, r.suffix) && (!best || r.suffix.size() > best->suffix.size()))
            best = &r;
    }
    if (!best) return;
    const std::size_t stem_len = w.size() - best->suffix.size();
    if (measure(w, stem_len) > min_measure) {
        w.resize(stem_len);
        w += best->replacement;
    }
}

inline void step_1a(std::string& w) {
    if (ends_with(w, "sses")) {
        w.resize(w.size() - 2);
    } else if (ends_with(w, "ies")) {
        w.resize(w.size() - 2);
    } else if (ends_with(w, "ss")) {
        // keep
    } else if (ends_with(w, "s")) {
        w.pop_back();
    }
}

inline void step_1b(std::string& w) {
    if (ends_with(w, "eed")) {
        if (measure(w, w.size() - 3) > 0) w.pop_back();
        return;
    }
    bool stripped = false;
    if (ends_with(w, "ed") && has_vowel(w, w.size() - 2)) {
        w.resize(w.size() - 2);
        stripped = true;
    } else if (ends_with(w, "ing") && has_vowel(w, w.size() - 3)) {
        w.resize(w.size() - 3);
        stripped = true;
    }
    if (!stripped) return;
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w += 'e';
    } else if (double_cons_end(w, w.size())) {
        const char c = w.back();
        if (c != 'l' && c != 's' && c != 'z') w.pop_back();
    } else if (measure(w, w.size()) == 1 && cvc_end(w, w.size())) {
        w += 'e';
    }
}

inline void step_1c(std::string& w) {
    if (ends_with(w, "y") && has_vowel(w, w.size() - 1)) w.back() = 'i';
}

inline void step_2(std::string& w) {
    static constexpr std::array<Rule, 20> rules{{
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
        {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},   {"entli", "ent"},
        {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
        {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
    }};
    apply_rules(w, rules, 0);
}

inline void step_3(std::string& w) {
    static constexpr std::array<Rule, 7> rules{{
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},   {"ness", ""},
    }};
    apply_rules(w, rules, 0);
}

inline void step_4(std::string& w) {
    static constexpr std::array<std::string_view, 19> suffixes{{
        "ement", "ance", "ence", "able", "ible", "ment", "ion", "ism",
        "ate", "iti", "ous", "ive", "ize", "ant", "ent", "ou", "al", "er", "ic",
    }};
    const std::string_view* best = nullptr;
    for (const auto& s : suffixes) {
        if (ends_with(w, s) && (!best || s.size() > best->size())) best = &s;
    }
    if (!best) return;
    const std::size_t stem_len = w.size() - best->size();
    if (*best == "ion" && (stem_len == 0 || (w[stem_len - 1] != 's' && w[stem_len - 1] != 't')))
        return;
    if (measure(w, stem_len) > 1) w.resize(stem_len);
}

inline void step_5a(std::string& w) {
    if (!ends_with(w, "e")) return;
    const std::size_t m = measure(w, w.size() - 1);
    if (m > 1 || (m == 1 && !cvc_end(w, w.size() - 1))) w.pop_back();
}

inline void step_5b(std::string& w) {
    if (w.size() >= 2 && w.back() == 'l' && double_cons_end(w, w.size()) &&
        measure(w, w.size()) > 1)
        w.pop_back();
}

}  // namespace porter_detail

inline std::string ascii_lower(std::string_view text) {
    std::string out(text);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

inline std::string porter_stem(std::string_view word) {
    std::string w = ascii_lower(word);
    if (w.size() <= 2) return w;
    using namespace porter_detail;
    step_1a(w);
    step_1b(w);
    step_1c(w);
    step_2(w);
    step_3(w);
    step_4(w);
    step_5a(w);
    step_5b(w);
    return w;
}

}  // namespace faithcheck
