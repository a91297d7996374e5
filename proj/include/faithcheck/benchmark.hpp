#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "faithcheck/corpus.hpp"
#include "faithcheck/rng.hpp"
#include "faithcheck/salience.hpp"
#include "faithcheck/textproc.hpp"

namespace faithcheck {

// Planted benchmark: a small fictional knowledge base whose argument phrases
// use distinct content-word stems within each topic, plus copy-like template
// responses whose only non-argument words are stop words. Under those two
// properties, synthetic edits move ROUGE scores strictly and in a known
// direction, which is what the acceptance checks lean on.
// data/mini_kb.json mirrors this builder; a test keeps the two in sync.

namespace benchmark_detail {

struct TopicSpec {
    std::string_view id;
    std::string_view title;
    std::string_view query;
    std::array<std::string_view, 3> pro;
    std::array<std::string_view, 3> con;
};

inline const std::array<TopicSpec, 12>& topic_specs() {
    static const std::array<TopicSpec, 12> specs{{
        {"t01", "Riverton tram line", "Should Riverton build a new tram line?",
         {"faster commutes for workers", "cleaner air downtown", "attracts visitors and shoppers"},
         {"construction blocks traffic", "large upfront budget", "noise near quiet homes"}},
        {"t02", "Westfield homework-free weekends",
         "Should Westfield schools adopt homework-free weekends?",
         {"students rest and recharge", "families gain shared evenings", "reduces burnout among teens"},
         {"less practice before exams", "parents lose progress signals", "harder planning for teachers"}},
        {"t03", "Maple District community garden",
         "Should Maple District open a community garden?",
         {"fresh produce for neighbors", "green space invites gatherings", "teaches children about soil"},
         {"upkeep demands volunteers", "water bills climb", "pests spread toward yards"}},
        {"t04", "Harbor City night buses", "Should Harbor City run buses past midnight?",
         {"safer rides home late", "shift crews reach jobs", "fewer impaired motorists"},
         {"operator fatigue grows", "routes burn extra fuel", "empty seats waste money"}},
        {"t05", "Brookside plastic bag ban", "Should Brookside ban single-use plastic bags?",
         {"cuts litter along creeks", "protects fish and birds", "encourages reusable totes"},
         {"shoppers face checkout hassle", "thin liners serve bins", "stores absorb switching expenses"}},
        {"t06", "Pinewood rooftop drones", "Should Pinewood allow rooftop drone deliveries?",
         {"parcels arrive within minutes", "trucks leave roads clearer", "couriers skip stairwells"},
         {"propellers disturb sleep", "cameras worry residents", "crashes risk pedestrians"}},
        {"t07", "Crestview four-day week", "Should Crestview offices pilot a four-day week?",
         {"morale rises among staff", "commuting drops twenty percent", "focus deepens during sprints"},
         {"clients expect friday coverage", "schedules squeeze deadlines", "payroll systems need rework"}},
        {"t08", "Lakeshore museum fees", "Should the Lakeshore museum drop entry fees?",
         {"culture reaches every income", "tourists linger longer nearby", "school visits multiply"},
         {"galleries lose funding", "crowds strain fragile exhibits", "donors feel sidelined"}},
        {"t09", "Eastbank river swimming", "Should Eastbank permit swimming in the river?",
         {"summer heat finds relief", "swimmers build endurance", "lifeguard jobs open"},
         {"currents surprise beginners", "bacteria spikes after storms", "boats share narrow channels"}},
        {"t10", "Oakdale night markets", "Should Oakdale host weekly night markets?",
         {"vendors earn steady sales", "streets turn lively", "food stalls showcase recipes"},
         {"trash collection doubles", "parking overflows nearby blocks", "neighbors endure loud music"}},
        {"t11", "Fernhill library sundays", "Should the Fernhill library open on sundays?",
         {"students gain study rooms", "retirees browse at leisure", "weekend programs flourish"},
         {"staffing costs expand", "volunteers already stretched thin", "utilities run longer"}},
        {"t12", "Summit County rooftop solar",
         "Should Summit County subsidize rooftop solar panels?",
         {"electric bills shrink yearly", "grid gains backup capacity", "installers hire locally"},
         {"subsidies favor wealthier owners", "roofs require structural checks", "panel glare bothers pilots"}},
    }};
    return specs;
}

}  // namespace benchmark_detail

inline KnowledgeBase demo_knowledge_base() {
    KnowledgeBase kb;
    for (const auto& spec : benchmark_detail::topic_specs()) {
        Topic t;
        t.id = std::string(spec.id);
        t.title = std::string(spec.title);
        t.query = std::string(spec.query);
        for (std::size_t i = 0; i < spec.pro.size(); ++i)
            t.arguments.push_back(
                {t.id + "-pro-" + std::to_string(i + 1), Perspective::Pro, std::string(spec.pro[i]), {}});
        for (std::size_t i = 0; i < spec.con.size(); ++i)
            t.arguments.push_back(
                {t.id + "-con-" + std::to_string(i + 1), Perspective::Con, std::string(spec.con[i]), {}});
        kb.topics.push_back(std::move(t));
    }
    return kb;
}

namespace benchmark_detail {

// Seeded k-subset of [0, n), returned in ascending order.
inline std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, Rng& rng) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

inline std::string join_phrases(const std::vector<Argument>& args) {
    std::string out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) out += "; and ";
        out += args[i].phrase;
    }
    return out;
}

}  // namespace benchmark_detail

// Error-free query-response pairs with responses that copy the given
// argument phrases verbatim, glued by stop words only. The introduction
// sentence sits outside main_response_span, so its title words never reach
// the detectors. Covered-span annotations are filled in by construction.
inline std::vector<Example> build_demo_examples(const KnowledgeBase& kb,
                                                std::size_t per_topic, std::uint64_t seed) {
    using namespace benchmark_detail;
    static constexpr std::array<std::size_t, 5> side_sizes{{1, 2, 3, 2, 3}};
    std::vector<Example> out;
    for (const auto& topic : kb.topics) {
        const auto pro_all = topic.arguments_for(Perspective::Pro);
        const auto con_all = topic.arguments_for(Perspective::Con);
        for (std::size_t i = 0; i < per_topic; ++i) {
            Example e;
            e.id = topic.id + "-ex" + std::to_string(i + 1);
            e.topic_id = topic.id;
            e.query = topic.query;
            Rng rng = make_rng(derive_seed(seed, e.id));
            const std::size_t k = std::min({side_sizes[i % side_sizes.size()], pro_all.size(),
                                            con_all.size()});
            for (std::size_t idx : sample_indices(pro_all.size(), k, rng))
                e.pro_args.push_back(*pro_all[idx]);
            for (std::size_t idx : sample_indices(con_all.size(), k, rng))
                e.con_args.push_back(*con_all[idx]);

            const std::string intro = topic.title + " stirs debate around town.";
            const std::string main_text =
                "For: " + join_phrases(e.pro_args) + ". Against: " + join_phrases(e.con_args) + ".";
            e.response = intro + " " + main_text;
            e.main_response_span = Span{intro.size() + 1, e.response.size()};
            e.temperature = (i % 2 == 0) ? 0.0 : 0.7;
            e.paraphrased = false;
            e.provenance = Provenance::Organic;

            SpanAnnotations ann;
            for (const auto* args : {&e.pro_args, &e.con_args}) {
                for (const auto& a : *args) {
                    const auto pos = e.response.find(a.phrase, e.main_response_span->start);
                    if (pos != std::string::npos)
                        ann.covered_spans.push_back({a.id, Span{pos, pos + a.phrase.size()}});
                }
            }
            e.annotations = std::move(ann);
            out.push_back(std::move(e));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Salience map simulation
// ---------------------------------------------------------------------------
//
// Stands in for the generator's gradient-times-input maps: response words
// whose stems match an input argument word get one strong attribution cell;
// everything else carries low noise. Rounded to 6 significant digits so the
// emitted file equals the in-memory map.

namespace benchmark_detail {

inline double round6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::strtod(buf, nullptr);
}

// Splits `text` into subword tokens: separator runs become single tokens and
// words longer than five bytes break in half (at a UTF-8 boundary), which
// gives the word-merging path real multi-token words to reassemble.
inline void simulate_tokens(std::string_view text, const Segment& segment, std::size_t base,
                            std::vector<SubwordToken>& out) {
    using namespace textproc_detail;
    std::size_t i = 0;
    auto emit = [&](std::size_t begin, std::size_t end) {
        if (end <= begin) return;
        out.push_back({std::string(text.substr(begin, end - begin)),
                       Span{base + begin, base + end}, segment});
    };
    while (i < text.size()) {
        std::uint32_t cp = 0;
        std::size_t start = i;
        bool sep = false;
        {
            const std::size_t len = decode_utf8(text, i, cp);
            sep = is_separator(cp);
            i += len;
        }
        while (i < text.size()) {
            const std::size_t len = decode_utf8(text, i, cp);
            if (is_separator(cp) != sep) break;
            i += len;
        }
        if (sep || i - start <= 5) {
            emit(start, i);
        } else {
            std::size_t mid = start + (i - start) / 2;
            while (mid > start && (static_cast<unsigned char>(text[mid]) & 0xC0) == 0x80) --mid;
            emit(start, mid);
            emit(mid, i);
        }
    }
}

}  // namespace benchmark_detail

// Builds a raw (pre-normalization) token-to-token salience map for one
// example. Input rows cover a short prompt, the query, the argument phrases
// and a prior-response copy; columns are the response tokens.
inline SalienceMap simulate_salience_map(const Example& e, std::uint64_t seed,
                                         const StopWords& stops = english_stopwords()) {
    using namespace benchmark_detail;
    SalienceMap map;
    std::string input_text;
    auto append_piece = [&](std::string_view text, const Segment& segment) {
        simulate_tokens(text, segment, input_text.size(), map.input_tokens);
        input_text += text;
    };
    append_piece("[context] ", {SegmentKind::Prompt, {}});
    append_piece(e.query, query_segment());
    for (const auto& a : e.pro_args) {
        append_piece(" | ", {SegmentKind::Prompt, {}});
        append_piece(a.phrase, pro_argument_segment(a.id));
    }
    for (const auto& a : e.con_args) {
        append_piece(" | ", {SegmentKind::Prompt, {}});
        append_piece(a.phrase, con_argument_segment(a.id));
    }
    append_piece(" | ", {SegmentKind::Prompt, {}});
    const std::size_t prior_begin = map.input_tokens.size();
    append_piece(e.response, {SegmentKind::PriorResponse, {}});

    simulate_tokens(e.response, response_segment(), 0, map.response_tokens);

    // Stems of the argument content word (if any) behind each token. Only a
    // word's head token carries the stem: concentrating the strong mass on
    // one token pair per matched word keeps column normalization from
    // splitting it (the word-level max recovers it either way).
    const MergedWords input_words = merge_subword_tokens(map.input_tokens, stops);
    const MergedWords response_words = merge_subword_tokens(map.response_tokens, stops);
    std::vector<std::string> row_stem(map.input_tokens.size());
    for (std::size_t w = 0; w < input_words.words.size(); ++w) {
        const Word& word = input_words.words[w];
        if (!word.source.is_argument() || word.is_stop) continue;
        row_stem[input_words.token_indices[w].front()] = word.stem;
    }
    const Span main_span = e.effective_main_span();
    std::vector<std::string> col_stem(map.response_tokens.size());
    for (std::size_t w = 0; w < response_words.words.size(); ++w) {
        const Word& word = response_words.words[w];
        if (word.is_stop || !main_span.contains(word.char_range)) continue;
        col_stem[response_words.token_indices[w].front()] = word.stem;
    }

    Rng rng = make_rng(seed);
    map.matrix = Matrix(map.input_tokens.size(), map.response_tokens.size());
    for (std::size_t r = 0; r < map.matrix.rows; ++r) {
        const bool prior_row = r >= prior_begin;
        for (std::size_t c = 0; c < map.matrix.cols; ++c) {
            double value;
            if (prior_row) {
                // Causal mask: a response token attends only to earlier ones.
                const std::size_t prior_pos = r - prior_begin;
                value = prior_pos >= c ? 0.0 : 0.002 + 0.008 * uniform_unit(rng);
            } else if (!row_stem[r].empty() && row_stem[r] == col_stem[c]) {
                value = 0.85 + 0.1 * uniform_unit(rng);
            } else {
                value = 0.01 + 0.04 * uniform_unit(rng);
            }
            map.matrix.at(r, c) = round6(value);
        }
    }
    return map;
}

}  // namespace faithcheck
