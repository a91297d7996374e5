#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "faithcheck/error.hpp"
#include "faithcheck/span.hpp"

namespace faithcheck {

using json = nlohmann::ordered_json;

enum class Perspective { Pro, Con };

struct Argument {
    std::string id;
    Perspective perspective = Perspective::Pro;
    std::string phrase;
    std::optional<std::string> explanation;

    bool operator==(const Argument&) const = default;
};

struct Topic {
    std::string id;
    std::string title;
    std::string query;  // the topic's leading question
    std::vector<Argument> arguments;

    std::vector<const Argument*> arguments_for(Perspective p) const {
        std::vector<const Argument*> out;
        for (const auto& a : arguments)
            if (a.perspective == p) out.push_back(&a);
        return out;
    }
    const Argument* find_argument(const std::string& arg_id) const {
        for (const auto& a : arguments)
            if (a.id == arg_id) return &a;
        return nullptr;
    }
    bool operator==(const Topic&) const = default;
};

struct KnowledgeBase {
    std::vector<Topic> topics;

    const Topic* find_topic(const std::string& topic_id) const {
        for (const auto& t : topics)
            if (t.id == topic_id) return &t;
        return nullptr;
    }
    bool operator==(const KnowledgeBase&) const = default;
};

enum class ErrorLabel { None, Full, Ambiguous };
enum class ErrorType { Hallucination, Coverage };

enum class AmbiguousSubtype {
    PartialHallucination,
    PartialCoverage,
    Repetition,
    PerspectiveConfusion,
};

struct ErrorLabels {
    ErrorLabel hallucination = ErrorLabel::None;
    ErrorLabel coverage = ErrorLabel::None;
    std::set<AmbiguousSubtype> ambiguous_subtypes;

    ErrorLabel get(ErrorType type) const {
        return type == ErrorType::Hallucination ? hallucination : coverage;
    }
    bool error_free() const {
        return hallucination == ErrorLabel::None && coverage == ErrorLabel::None;
    }
    bool operator==(const ErrorLabels&) const = default;
};

struct CoveredSpan {
    std::string argument_id;
    Span span;  // into the response
    bool operator==(const CoveredSpan&) const = default;
};

struct ArgumentSpan {
    std::string argument_id;
    Span span;  // into the argument phrase
    bool operator==(const ArgumentSpan&) const = default;
};

struct SpanAnnotations {
    std::vector<CoveredSpan> covered_spans;
    std::vector<Span> hallucinated_response_spans;
    std::vector<ArgumentSpan> uncovered_argument_spans;

    bool operator==(const SpanAnnotations&) const = default;
};

enum class Provenance {
    Organic,
    SyntheticCoverage,
    SyntheticHallucination,
    SyntheticBoth,
};

// One query-response pair with the arguments the generator saw and the
// error labels attached to it. Synthetic derivatives carry their parent id
// in an id suffix: "<parent>#synth-cov-N", "#synth-hal-N", "#synth-both-N".
struct Example {
    std::string id;
    std::string topic_id;
    std::string query;
    std::vector<Argument> pro_args;
    std::vector<Argument> con_args;
    std::string response;
    std::optional<Span> main_response_span;  // part after the introduction sentence
    std::optional<double> temperature;
    bool paraphrased = false;
    ErrorLabels labels;
    std::optional<SpanAnnotations> annotations;
    Provenance provenance = Provenance::Organic;

    // Whole response when no explicit span was supplied; detectors flag that case.
    Span effective_main_span() const {
        return main_response_span.value_or(Span{0, response.size()});
    }
    bool main_span_defaulted() const { return !main_response_span.has_value(); }

    const std::vector<Argument>& args(Perspective p) const {
        return p == Perspective::Pro ? pro_args : con_args;
    }
    std::optional<std::string> parent_id() const {
        const auto pos = id.rfind("#synth-");
        if (pos == std::string::npos || pos == 0) return std::nullopt;
        return id.substr(0, pos);
    }
    bool operator==(const Example&) const = default;
};

struct SplitAssignment {
    std::set<std::string> train_topics;
    std::set<std::string> dev_topics;
    std::set<std::string> test_topics;

    bool operator==(const SplitAssignment&) const = default;
};

enum class EvalSliceKind {
    FullOrganic,
    UnparaphrasedSynthetic,
    ParaphrasedSynthetic,
    AmbiguousOrganic,
};

// positives are error-free examples, negatives carry the slice's errors.
// (ROC bookkeeping later flips this: the detector's "positive class" is the
// error class; see stats.hpp.)
struct EvalSlice {
    EvalSliceKind kind = EvalSliceKind::FullOrganic;
    ErrorType error_type = ErrorType::Hallucination;
    std::vector<Example> positives;
    std::vector<Example> negatives;
};

// ---------------------------------------------------------------------------
// enum <-> string
// ---------------------------------------------------------------------------

inline std::string to_string(Perspective p) { return p == Perspective::Pro ? "pro" : "con"; }

inline Perspective perspective_from_string(const std::string& s) {
    if (s == "pro") return Perspective::Pro;
    if (s == "con") return Perspective::Con;
    throw ParseError("unknown perspective: '" + s + "'");
}

inline std::string to_string(ErrorLabel l) {
    switch (l) {
        case ErrorLabel::None: return "none";
        case ErrorLabel::Full: return "full";
        case ErrorLabel::Ambiguous: return "ambiguous";
    }
    return "none";
}

inline ErrorLabel error_label_from_string(const std::string& s) {
    if (s == "none") return ErrorLabel::None;
    if (s == "full") return ErrorLabel::Full;
    if (s == "ambiguous") return ErrorLabel::Ambiguous;
    throw ParseError("unknown error label: '" + s + "'");
}

inline std::string to_string(ErrorType t) {
    return t == ErrorType::Hallucination ? "hallucination" : "coverage";
}

inline ErrorType error_type_from_string(const std::string& s) {
    if (s == "hallucination") return ErrorType::Hallucination;
    if (s == "coverage") return ErrorType::Coverage;
    throw ParseError("unknown error type: '" + s + "'");
}

inline std::string to_string(AmbiguousSubtype t) {
    switch (t) {
        case AmbiguousSubtype::PartialHallucination: return "partial_hallucination";
        case AmbiguousSubtype::PartialCoverage: return "partial_coverage";
        case AmbiguousSubtype::Repetition: return "repetition";
        case AmbiguousSubtype::PerspectiveConfusion: return "perspective_confusion";
    }
    return "repetition";
}

inline AmbiguousSubtype ambiguous_subtype_from_string(const std::string& s) {
    if (s == "partial_hallucination") return AmbiguousSubtype::PartialHallucination;
    if (s == "partial_coverage") return AmbiguousSubtype::PartialCoverage;
    if (s == "repetition") return AmbiguousSubtype::Repetition;
    if (s == "perspective_confusion") return AmbiguousSubtype::PerspectiveConfusion;
    throw ParseError("unknown ambiguous subtype: '" + s + "'");
}

inline std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Organic: return "organic";
        case Provenance::SyntheticCoverage: return "synthetic_coverage";
        case Provenance::SyntheticHallucination: return "synthetic_hallucination";
        case Provenance::SyntheticBoth: return "synthetic_both";
    }
    return "organic";
}

inline Provenance provenance_from_string(const std::string& s) {
    if (s == "organic") return Provenance::Organic;
    if (s == "synthetic_coverage") return Provenance::SyntheticCoverage;
    if (s == "synthetic_hallucination") return Provenance::SyntheticHallucination;
    if (s == "synthetic_both") return Provenance::SyntheticBoth;
    throw ParseError("unknown provenance: '" + s + "'");
}

inline std::string to_string(EvalSliceKind k) {
    switch (k) {
        case EvalSliceKind::FullOrganic: return "full-organic";
        case EvalSliceKind::UnparaphrasedSynthetic: return "unparaphrased-synthetic";
        case EvalSliceKind::ParaphrasedSynthetic: return "paraphrased-synthetic";
        case EvalSliceKind::AmbiguousOrganic: return "ambiguous-organic";
    }
    return "full-organic";
}

inline EvalSliceKind slice_kind_from_string(const std::string& s) {
    if (s == "full-organic") return EvalSliceKind::FullOrganic;
    if (s == "unparaphrased-synthetic") return EvalSliceKind::UnparaphrasedSynthetic;
    if (s == "paraphrased-synthetic") return EvalSliceKind::ParaphrasedSynthetic;
    if (s == "ambiguous-organic") return EvalSliceKind::AmbiguousOrganic;
    throw ParseError("unknown slice kind: '" + s + "'");
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

inline json span_to_json(const Span& s) { return json{{"start", s.start}, {"end", s.end}}; }

inline Span span_from_json(const json& j) {
    if (!j.is_object() || !j.contains("start") || !j.contains("end"))
        throw ParseError("span must be an object with start/end");
    return Span{j.at("start").get<std::size_t>(), j.at("end").get<std::size_t>()};
}

inline json argument_to_json(const Argument& a) {
    json j{{"id", a.id}, {"perspective", to_string(a.perspective)}, {"phrase", a.phrase}};
    if (a.explanation) j["explanation"] = *a.explanation;
    return j;
}

inline Argument argument_from_json(const json& j) {
    Argument a;
    a.id = j.at("id").get<std::string>();
    a.perspective = perspective_from_string(j.at("perspective").get<std::string>());
    a.phrase = j.at("phrase").get<std::string>();
    if (j.contains("explanation")) a.explanation = j.at("explanation").get<std::string>();
    return a;
}

inline json kb_to_json(const KnowledgeBase& kb) {
    json topics = json::array();
    for (const auto& t : kb.topics) {
        json args = json::array();
        for (const auto& a : t.arguments) args.push_back(argument_to_json(a));
        topics.push_back(json{{"id", t.id},
                              {"title", t.title},
                              {"query", t.query},
                              {"arguments", std::move(args)}});
    }
    return json{{"topics", std::move(topics)}};
}

inline json labels_to_json(const ErrorLabels& l) {
    json subtypes = json::array();
    for (const auto& s : l.ambiguous_subtypes) subtypes.push_back(to_string(s));
    return json{{"hallucination", to_string(l.hallucination)},
                {"coverage", to_string(l.coverage)},
                {"ambiguous_subtypes", std::move(subtypes)}};
}

inline ErrorLabels labels_from_json(const json& j) {
    ErrorLabels l;
    l.hallucination = error_label_from_string(j.at("hallucination").get<std::string>());
    l.coverage = error_label_from_string(j.at("coverage").get<std::string>());
    if (j.contains("ambiguous_subtypes"))
        for (const auto& s : j.at("ambiguous_subtypes"))
            l.ambiguous_subtypes.insert(ambiguous_subtype_from_string(s.get<std::string>()));
    return l;
}

inline json annotations_to_json(const SpanAnnotations& a) {
    json covered = json::array();
    for (const auto& c : a.covered_spans)
        covered.push_back(json{{"argument_id", c.argument_id}, {"span", span_to_json(c.span)}});
    json hallucinated = json::array();
    for (const auto& s : a.hallucinated_response_spans) hallucinated.push_back(span_to_json(s));
    json uncovered = json::array();
    for (const auto& u : a.uncovered_argument_spans)
        uncovered.push_back(json{{"argument_id", u.argument_id}, {"span", span_to_json(u.span)}});
    return json{{"covered_spans", std::move(covered)},
                {"hallucinated_response_spans", std::move(hallucinated)},
                {"uncovered_argument_spans", std::move(uncovered)}};
}

inline SpanAnnotations annotations_from_json(const json& j) {
    SpanAnnotations a;
    for (const auto& c : j.value("covered_spans", json::array()))
        a.covered_spans.push_back(
            {c.at("argument_id").get<std::string>(), span_from_json(c.at("span"))});
    for (const auto& s : j.value("hallucinated_response_spans", json::array()))
        a.hallucinated_response_spans.push_back(span_from_json(s));
    for (const auto& u : j.value("uncovered_argument_spans", json::array()))
        a.uncovered_argument_spans.push_back(
            {u.at("argument_id").get<std::string>(), span_from_json(u.at("span"))});
    return a;
}

inline json example_to_json(const Example& e) {
    json j;
    j["id"] = e.id;
    j["topic_id"] = e.topic_id;
    j["query"] = e.query;
    json pro = json::array();
    for (const auto& a : e.pro_args) pro.push_back(argument_to_json(a));
    j["pro_args"] = std::move(pro);
    json con = json::array();
    for (const auto& a : e.con_args) con.push_back(argument_to_json(a));
    j["con_args"] = std::move(con);
    j["response"] = e.response;
    if (e.main_response_span) j["main_response_span"] = span_to_json(*e.main_response_span);
    if (e.temperature) j["temperature"] = *e.temperature;
    j["paraphrased"] = e.paraphrased;
    j["labels"] = labels_to_json(e.labels);
    if (e.annotations) j["annotations"] = annotations_to_json(*e.annotations);
    j["provenance"] = to_string(e.provenance);
    return j;
}

inline Example example_from_json(const json& j) {
    Example e;
    e.id = j.at("id").get<std::string>();
    e.topic_id = j.at("topic_id").get<std::string>();
    e.query = j.at("query").get<std::string>();
    for (const auto& a : j.at("pro_args")) e.pro_args.push_back(argument_from_json(a));
    for (const auto& a : j.at("con_args")) e.con_args.push_back(argument_from_json(a));
    e.response = j.at("response").get<std::string>();
    if (j.contains("main_response_span"))
        e.main_response_span = span_from_json(j.at("main_response_span"));
    if (j.contains("temperature")) e.temperature = j.at("temperature").get<double>();
    e.paraphrased = j.value("paraphrased", false);
    e.labels = labels_from_json(j.at("labels"));
    if (j.contains("annotations")) e.annotations = annotations_from_json(j.at("annotations"));
    e.provenance = provenance_from_string(j.value("provenance", "organic"));
    return e;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

inline void validate_topic(const Topic& t) {
    if (t.id.empty()) throw ValidationError("topic with empty id");
    if (t.query.empty()) throw ValidationError("topic '" + t.id + "' has an empty query");
    std::unordered_set<std::string> seen;
    std::size_t pro = 0, con = 0;
    for (const auto& a : t.arguments) {
        if (a.phrase.empty())
            throw ValidationError("argument '" + a.id + "' in topic '" + t.id +
                                  "' has an empty phrase");
        if (!seen.insert(a.id).second)
            throw ValidationError("duplicate argument id '" + a.id + "' in topic '" + t.id + "'");
        (a.perspective == Perspective::Pro ? pro : con) += 1;
    }
    if (pro == 0 || con == 0)
        throw ValidationError("topic '" + t.id + "' must have at least one pro and one con argument");
}

inline void validate_kb(const KnowledgeBase& kb) {
    std::unordered_set<std::string> ids;
    for (const auto& t : kb.topics) {
        if (!ids.insert(t.id).second) throw ValidationError("duplicate topic id '" + t.id + "'");
        validate_topic(t);
    }
}

inline void validate_example(const Example& e, const KnowledgeBase* kb = nullptr) {
    if (e.id.empty()) throw ValidationError("example with empty id");
    const auto fail = [&](const std::string& msg) {
        throw ValidationError("example '" + e.id + "': " + msg);
    };
    if (e.main_response_span && !e.main_response_span->within(e.response.size()))
        fail("main_response_span exceeds response length");
    if (e.labels.ambiguous_subtypes.empty() !=
        !(e.labels.hallucination == ErrorLabel::Ambiguous ||
          e.labels.coverage == ErrorLabel::Ambiguous))
        fail("ambiguous_subtypes must be non-empty iff a label is ambiguous");
    std::unordered_map<std::string, const Argument*> own_args;
    for (const auto& a : e.pro_args) {
        if (a.perspective != Perspective::Pro) fail("argument '" + a.id + "' in pro_args is not pro");
        own_args[a.id] = &a;
    }
    for (const auto& a : e.con_args) {
        if (a.perspective != Perspective::Con) fail("argument '" + a.id + "' in con_args is not con");
        own_args[a.id] = &a;
    }
    if (e.annotations) {
        for (const auto& c : e.annotations->covered_spans) {
            if (!c.span.well_formed() || !c.span.within(e.response.size()))
                fail("covered span for argument '" + c.argument_id + "' is out of range");
            if (!own_args.count(c.argument_id))
                fail("covered span references unknown argument '" + c.argument_id + "'");
        }
        for (const auto& s : e.annotations->hallucinated_response_spans)
            if (!s.well_formed() || !s.within(e.response.size()))
                fail("hallucinated response span is out of range");
        for (const auto& u : e.annotations->uncovered_argument_spans) {
            const auto it = own_args.find(u.argument_id);
            if (it == own_args.end())
                fail("uncovered span references unknown argument '" + u.argument_id + "'");
            if (!u.span.well_formed() || !u.span.within(it->second->phrase.size()))
                fail("uncovered span for argument '" + u.argument_id + "' is out of range");
        }
    }
    if (kb) {
        const Topic* topic = kb->find_topic(e.topic_id);
        if (!topic) fail("dangling topic_id '" + e.topic_id + "'");
        for (const auto& [id, arg] : own_args) {
            const Argument* in_kb = topic->find_argument(id);
            if (!in_kb) fail("argument '" + id + "' not found in topic '" + e.topic_id + "'");
            if (in_kb->perspective != arg->perspective)
                fail("argument '" + id + "' has the wrong perspective for topic '" + e.topic_id + "'");
        }
    }
}

// ---------------------------------------------------------------------------
// File I/O
// ---------------------------------------------------------------------------

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw IoError("failed writing file: " + path);
}

inline KnowledgeBase kb_from_json(const json& j) {
    KnowledgeBase kb;
    if (!j.is_object() || !j.contains("topics"))
        throw ParseError("knowledge base must be an object with a 'topics' array");
    for (const auto& tj : j.at("topics")) {
        Topic t;
        t.id = tj.at("id").get<std::string>();
        t.title = tj.at("title").get<std::string>();
        t.query = tj.at("query").get<std::string>();
        for (const auto& aj : tj.at("arguments")) t.arguments.push_back(argument_from_json(aj));
        kb.topics.push_back(std::move(t));
    }
    return kb;
}

inline KnowledgeBase load_knowledge_base(const std::string& path) {
    KnowledgeBase kb = kb_from_json(read_json_file(path));
    validate_kb(kb);
    return kb;
}

inline void save_knowledge_base(const KnowledgeBase& kb, const std::string& path) {
    write_json_file(path, kb_to_json(kb));
}

inline std::vector<Example> load_examples(const std::string& path,
                                          const KnowledgeBase* kb = nullptr) {
    const json j = read_json_file(path);
    if (!j.is_array()) throw ParseError("example file must be a JSON array: " + path);
    std::vector<Example> out;
    out.reserve(j.size());
    for (const auto& ej : j) {
        Example e = example_from_json(ej);
        validate_example(e, kb);
        out.push_back(std::move(e));
    }
    return out;
}

inline void save_examples(const std::vector<Example>& examples, const std::string& path) {
    json j = json::array();
    for (const auto& e : examples) j.push_back(example_to_json(e));
    write_json_file(path, j);
}

// Split assignment file: JSON map of split name -> list of topic ids.
inline SplitAssignment load_split_assignment(const std::string& path) {
    const json j = read_json_file(path);
    SplitAssignment s;
    auto fill = [&](const char* key, std::set<std::string>& out) {
        for (const auto& id : j.value(key, json::array())) out.insert(id.get<std::string>());
    };
    fill("train", s.train_topics);
    fill("dev", s.dev_topics);
    fill("test", s.test_topics);
    for (const auto& id : s.train_topics)
        if (s.dev_topics.count(id) || s.test_topics.count(id))
            throw ValidationError("topic '" + id + "' assigned to multiple splits");
    for (const auto& id : s.dev_topics)
        if (s.test_topics.count(id))
            throw ValidationError("topic '" + id + "' assigned to multiple splits");
    return s;
}

// ---------------------------------------------------------------------------
// Statistics & slicing
// ---------------------------------------------------------------------------

// Median of per-topic, per-perspective argument counts.
inline double median_arguments_per_perspective(const KnowledgeBase& kb) {
    std::vector<std::size_t> counts;
    for (const auto& t : kb.topics) {
        std::size_t pro = 0, con = 0;
        for (const auto& a : t.arguments) (a.perspective == Perspective::Pro ? pro : con) += 1;
        counts.push_back(pro);
        counts.push_back(con);
    }
    if (counts.empty()) throw ValidationError("empty knowledge base has no argument counts");
    std::sort(counts.begin(), counts.end());
    const std::size_t n = counts.size();
    if (n % 2 == 1) return static_cast<double>(counts[n / 2]);
    return (static_cast<double>(counts[n / 2 - 1]) + static_cast<double>(counts[n / 2])) / 2.0;
}

// Slice membership, per §"Test sets": slicing is done independently per error
// type; an example is a negative iff its label for `type` matches the slice's
// error class. Positives are always organic error-free examples with the
// slice's paraphrase setting.
inline EvalSlice slice_test_set(const std::vector<Example>& examples, EvalSliceKind kind,
                                ErrorType type) {
    EvalSlice slice;
    slice.kind = kind;
    slice.error_type = type;
    const bool paraphrased_slice = kind == EvalSliceKind::ParaphrasedSynthetic;
    for (const auto& e : examples) {
        const bool organic = e.provenance == Provenance::Organic;
        const bool error_free = e.labels.error_free();
        if (organic && error_free && e.paraphrased == paraphrased_slice) {
            slice.positives.push_back(e);
            continue;
        }
        const ErrorLabel label = e.labels.get(type);
        switch (kind) {
            case EvalSliceKind::FullOrganic:
                if (organic && label == ErrorLabel::Full && !e.paraphrased)
                    slice.negatives.push_back(e);
                break;
            case EvalSliceKind::UnparaphrasedSynthetic:
                if (!organic && label == ErrorLabel::Full && !e.paraphrased)
                    slice.negatives.push_back(e);
                break;
            case EvalSliceKind::ParaphrasedSynthetic:
                if (!organic && label == ErrorLabel::Full && e.paraphrased)
                    slice.negatives.push_back(e);
                break;
            case EvalSliceKind::AmbiguousOrganic:
                if (organic && label == ErrorLabel::Ambiguous) slice.negatives.push_back(e);
                break;
        }
    }
    return slice;
}

struct TopicSplits {
    std::vector<Example> train;
    std::vector<Example> dev;
    std::vector<Example> test;
};

inline TopicSplits split_topics(const SplitAssignment& assignment,
                                const std::vector<Example>& examples) {
    TopicSplits out;
    for (const auto& e : examples) {
        if (assignment.train_topics.count(e.topic_id)) {
            out.train.push_back(e);
        } else if (assignment.dev_topics.count(e.topic_id)) {
            out.dev.push_back(e);
        } else if (assignment.test_topics.count(e.topic_id)) {
            out.test.push_back(e);
        } else {
            throw ValidationError("topic '" + e.topic_id + "' is not covered by the split assignment");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Slice files
// ---------------------------------------------------------------------------

inline json slice_to_json(const EvalSlice& s) {
    json pos = json::array();
    for (const auto& e : s.positives) pos.push_back(example_to_json(e));
    json neg = json::array();
    for (const auto& e : s.negatives) neg.push_back(example_to_json(e));
    return json{{"kind", to_string(s.kind)},
                {"error_type", to_string(s.error_type)},
                {"positives", std::move(pos)},
                {"negatives", std::move(neg)}};
}

inline EvalSlice slice_from_json(const json& j) {
    EvalSlice s;
    s.kind = slice_kind_from_string(j.at("kind").get<std::string>());
    s.error_type = error_type_from_string(j.at("error_type").get<std::string>());
    for (const auto& e : j.at("positives")) s.positives.push_back(example_from_json(e));
    for (const auto& e : j.at("negatives")) s.negatives.push_back(example_from_json(e));
    return s;
}

inline EvalSlice load_slice(const std::string& path) { return slice_from_json(read_json_file(path)); }

inline void save_slice(const EvalSlice& s, const std::string& path) {
    write_json_file(path, slice_to_json(s));
}

}  // namespace faithcheck
