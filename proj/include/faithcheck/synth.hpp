#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "faithcheck/corpus.hpp"
#include "faithcheck/rng.hpp"

namespace faithcheck {

// Synthetic error construction: edit an error-free example's argument list
// while keeping its response byte-identical, so the new label is correct by
// construction. The added or removed argument is drawn uniformly over all
// eligible arguments across both perspectives.

namespace synth_detail {

inline void require_error_free(const Example& parent) {
    if (!parent.labels.error_free())
        throw ValidationError("example '" + parent.id +
                              "' is not error-free; synthetic edits need a clean parent");
}

inline std::vector<const Argument*> unused_arguments(const Example& parent, const Topic& topic) {
    std::unordered_set<std::string> given;
    for (const auto& a : parent.pro_args) given.insert(a.id);
    for (const auto& a : parent.con_args) given.insert(a.id);
    std::vector<const Argument*> unused;
    for (const auto& a : topic.arguments)
        if (!given.count(a.id)) unused.push_back(&a);
    return unused;
}

inline Example clone_for_variant(const Example& parent, Provenance provenance,
                                 const std::string& suffix, int variant_index) {
    Example out = parent;
    out.id = parent.id + "#synth-" + suffix + "-" + std::to_string(variant_index);
    out.provenance = provenance;
    out.annotations.reset();  // re-derived per edit; the parent's set no longer applies
    out.labels = {};
    return out;
}

// Word-level ground truth by construction. Adding an argument leaves its
// whole phrase uncovered. Removing one turns the response spans that covered
// it into hallucinated spans, which requires the parent to carry covered-span
// annotations for the removed argument; otherwise the hallucinated words are
// unknowable and the removal variant gets no annotations at all (an empty
// hallucinated-span list would wrongly read as "no hallucinated words").
inline std::optional<SpanAnnotations> variant_annotations(const Example& parent,
                                                          const Argument* added,
                                                          const std::string* removed_id) {
    SpanAnnotations ann;
    if (parent.annotations) ann = *parent.annotations;
    if (removed_id) {
        if (!parent.annotations) return std::nullopt;
        SpanAnnotations rebuilt;
        rebuilt.uncovered_argument_spans = ann.uncovered_argument_spans;
        bool found = false;
        for (const auto& c : ann.covered_spans) {
            if (c.argument_id == *removed_id) {
                rebuilt.hallucinated_response_spans.push_back(c.span);
                found = true;
            } else {
                rebuilt.covered_spans.push_back(c);
            }
        }
        if (!found) return std::nullopt;
        rebuilt.hallucinated_response_spans.insert(rebuilt.hallucinated_response_spans.end(),
                                                   ann.hallucinated_response_spans.begin(),
                                                   ann.hallucinated_response_spans.end());
        ann = std::move(rebuilt);
    }
    if (added) ann.uncovered_argument_spans.push_back({added->id, Span{0, added->phrase.size()}});
    return ann;
}

inline void add_argument(Example& e, const Argument& arg) {
    (arg.perspective == Perspective::Pro ? e.pro_args : e.con_args).push_back(arg);
}

inline std::string remove_argument_at(Example& e, std::size_t flat_index) {
    if (flat_index < e.pro_args.size()) {
        const std::string id = e.pro_args[flat_index].id;
        e.pro_args.erase(e.pro_args.begin() + static_cast<std::ptrdiff_t>(flat_index));
        return id;
    }
    const std::size_t con_index = flat_index - e.pro_args.size();
    const std::string id = e.con_args[con_index].id;
    e.con_args.erase(e.con_args.begin() + static_cast<std::ptrdiff_t>(con_index));
    return id;
}

}  // namespace synth_detail

// Appends one unused argument of the topic to its own perspective's list;
// the unchanged response now misses it entirely.
inline Example make_synthetic_coverage(const Example& parent, const KnowledgeBase& kb,
                                       std::uint64_t seed, int variant_index = 1) {
    using namespace synth_detail;
    require_error_free(parent);
    const Topic* topic = kb.find_topic(parent.topic_id);
    if (!topic)
        throw ValidationError("example '" + parent.id + "' references unknown topic '" +
                              parent.topic_id + "'");
    const auto unused = unused_arguments(parent, *topic);
    if (unused.empty())
        throw ValidationError("topic '" + topic->id +
                              "' has no unused arguments for a coverage variant of '" +
                              parent.id + "'");
    Rng rng = make_rng(seed);
    const Argument& chosen = *unused[uniform_below(rng, unused.size())];
    Example out = clone_for_variant(parent, Provenance::SyntheticCoverage, "cov", variant_index);
    add_argument(out, chosen);
    out.labels.coverage = ErrorLabel::Full;
    out.annotations = synth_detail::variant_annotations(parent, &chosen, nullptr);
    return out;
}

// Removes one given argument; the unchanged response still verbalizes it.
// Removal may empty a perspective, which downstream scoring flags.
inline Example make_synthetic_hallucination(const Example& parent, std::uint64_t seed,
                                            int variant_index = 1) {
    using namespace synth_detail;
    require_error_free(parent);
    const std::size_t count = parent.pro_args.size() + parent.con_args.size();
    if (count < 2)
        throw ValidationError("example '" + parent.id +
                              "' has only one argument; removing it would leave nothing");
    Rng rng = make_rng(seed);
    Example out =
        clone_for_variant(parent, Provenance::SyntheticHallucination, "hal", variant_index);
    const std::string removed =
        remove_argument_at(out, static_cast<std::size_t>(uniform_below(rng, count)));
    out.labels.hallucination = ErrorLabel::Full;
    out.annotations = synth_detail::variant_annotations(parent, nullptr, &removed);
    return out;
}

// One removal plus one addition. The addition pool is taken relative to the
// parent's original argument set, so the removed argument can never be
// re-added. The removal is drawn first, then the addition.
inline Example make_synthetic_both(const Example& parent, const KnowledgeBase& kb,
                                   std::uint64_t seed, int variant_index = 1) {
    using namespace synth_detail;
    require_error_free(parent);
    const Topic* topic = kb.find_topic(parent.topic_id);
    if (!topic)
        throw ValidationError("example '" + parent.id + "' references unknown topic '" +
                              parent.topic_id + "'");
    const auto unused = unused_arguments(parent, *topic);
    const std::size_t count = parent.pro_args.size() + parent.con_args.size();
    if (unused.empty() || count < 2)
        throw ValidationError("example '" + parent.id +
                              "' cannot host both edits (needs an unused argument and >= 2 given)");
    Rng rng = make_rng(seed);
    Example out = clone_for_variant(parent, Provenance::SyntheticBoth, "both", variant_index);
    const std::string removed =
        remove_argument_at(out, static_cast<std::size_t>(uniform_below(rng, count)));
    const Argument& added = *unused[uniform_below(rng, unused.size())];
    add_argument(out, added);
    out.labels.hallucination = ErrorLabel::Full;
    out.labels.coverage = ErrorLabel::Full;
    out.annotations = synth_detail::variant_annotations(parent, &added, &removed);
    return out;
}

struct SynthSkip {
    std::string example_id;
    std::string reason;
};

struct SynthResult {
    std::vector<Example> examples;
    std::vector<SynthSkip> skipped;
};

// Emits a coverage, a hallucination, and a both-errors variant for every
// eligible input; infeasible variants are reported, not errors. Per-example
// seeds derive from (master seed, example id, variant kind), so output is
// reproducible regardless of input order or parallel scheduling.
inline SynthResult generate_synthetic_corpus(const std::vector<Example>& error_free,
                                             const KnowledgeBase& kb, std::uint64_t seed) {
    SynthResult result;
    for (const auto& parent : error_free) {
        if (!parent.labels.error_free()) {
            result.skipped.push_back({parent.id, "not error-free"});
            continue;
        }
        const Topic* topic = kb.find_topic(parent.topic_id);
        if (!topic) {
            result.skipped.push_back({parent.id, "unknown topic '" + parent.topic_id + "'"});
            continue;
        }
        const std::uint64_t example_seed = derive_seed(seed, parent.id);
        const bool has_unused = !synth_detail::unused_arguments(parent, *topic).empty();
        const bool removable = parent.pro_args.size() + parent.con_args.size() >= 2;
        if (has_unused) {
            result.examples.push_back(
                make_synthetic_coverage(parent, kb, derive_seed(example_seed, "cov")));
        } else {
            result.skipped.push_back({parent.id, "no unused arguments for coverage variant"});
        }
        if (removable) {
            result.examples.push_back(
                make_synthetic_hallucination(parent, derive_seed(example_seed, "hal")));
        } else {
            result.skipped.push_back({parent.id, "too few arguments for hallucination variant"});
        }
        if (has_unused && removable) {
            result.examples.push_back(
                make_synthetic_both(parent, kb, derive_seed(example_seed, "both")));
        } else {
            result.skipped.push_back({parent.id, "ineligible for both-errors variant"});
        }
    }
    return result;
}

}  // namespace faithcheck
