#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "faithcheck/benchmark.hpp"
#include "faithcheck/classifier.hpp"
#include "faithcheck/corpus.hpp"
#include "faithcheck/parallel.hpp"
#include "faithcheck/rouge.hpp"
#include "faithcheck/salience.hpp"
#include "faithcheck/scores.hpp"
#include "faithcheck/stats.hpp"
#include "faithcheck/synth.hpp"

namespace faithcheck::cli {

// ---------------------------------------------------------------------------
// Score files: JSON list of {id, hallucination, coverage, word_scores?}
// ---------------------------------------------------------------------------

struct ScoreRecord {
    std::string id;
    double hallucination = 0.0;
    double coverage = 0.0;
    std::optional<WordScores> word_scores;
};

inline json score_record_to_json(const ScoreRecord& r) {
    json j{{"id", r.id}, {"hallucination", r.hallucination}, {"coverage", r.coverage}};
    if (r.word_scores) {
        json response_words = json::array();
        for (const auto& sw : r.word_scores->response_word_scores)
            response_words.push_back(json{{"surface", sw.word.surface},
                                          {"start", sw.word.char_range.start},
                                          {"end", sw.word.char_range.end},
                                          {"score", sw.score}});
        json input_words = json::array();
        for (const auto& sw : r.word_scores->input_word_scores)
            input_words.push_back(json{{"surface", sw.word.surface},
                                       {"start", sw.word.char_range.start},
                                       {"end", sw.word.char_range.end},
                                       {"segment", segment_to_string(sw.word.source)},
                                       {"score", sw.score}});
        j["word_scores"] = json{{"response_words", std::move(response_words)},
                                {"input_words", std::move(input_words)}};
    }
    return j;
}

inline ScoreRecord score_record_from_json(const json& j) {
    ScoreRecord r;
    r.id = j.at("id").get<std::string>();
    r.hallucination = j.at("hallucination").get<double>();
    r.coverage = j.at("coverage").get<double>();
    if (j.contains("word_scores")) {
        WordScores ws;
        for (const auto& wj : j.at("word_scores").value("response_words", json::array())) {
            Word w;
            w.surface = wj.at("surface").get<std::string>();
            w.char_range = {wj.at("start").get<std::size_t>(), wj.at("end").get<std::size_t>()};
            ws.response_word_scores.push_back({std::move(w), wj.at("score").get<double>()});
        }
        for (const auto& wj : j.at("word_scores").value("input_words", json::array())) {
            Word w;
            w.surface = wj.at("surface").get<std::string>();
            w.char_range = {wj.at("start").get<std::size_t>(), wj.at("end").get<std::size_t>()};
            w.source = segment_from_string(wj.at("segment").get<std::string>());
            ws.input_word_scores.push_back({std::move(w), wj.at("score").get<double>()});
        }
        r.word_scores = std::move(ws);
    }
    return r;
}

inline void save_scores(const std::vector<ScoreRecord>& records, const std::string& path) {
    json j = json::array();
    for (const auto& r : records) j.push_back(score_record_to_json(r));
    write_json_file(path, j);
}

inline std::vector<ScoreRecord> load_scores(const std::string& path) {
    const json j = read_json_file(path);
    if (!j.is_array()) throw ParseError("score file must be a JSON array: " + path);
    std::vector<ScoreRecord> out;
    out.reserve(j.size());
    for (const auto& rj : j) out.push_back(score_record_from_json(rj));
    return out;
}

// ---------------------------------------------------------------------------
// Detection pipelines
// ---------------------------------------------------------------------------

inline std::vector<ScoreRecord> detect_rouge(const std::vector<Example>& examples,
                                             const RougeOptions& options, bool word_level,
                                             std::size_t jobs) {
    std::vector<ScoreRecord> records(examples.size());
    parallel_for(examples.size(), jobs, [&](std::size_t i) {
        const ExampleScores scores = rouge_example_scores(examples[i], options);
        records[i].id = examples[i].id;
        records[i].hallucination = scores.hallucination;
        records[i].coverage = scores.coverage;
        if (word_level) records[i].word_scores = rouge_word_scores(examples[i], options);
    });
    return records;
}

struct SalienceDetectOptions {
    std::string map_dir;
    Aggregation aggregation = Aggregation::Max;
    bool arithmetic_mean = false;
    const StopWords* stopwords = nullptr;

    const StopWords& stops() const { return stopwords ? *stopwords : english_stopwords(); }
};

inline std::vector<ScoreRecord> detect_salience(const std::vector<Example>& examples,
                                                const SalienceDetectOptions& options,
                                                bool word_level, std::size_t jobs) {
    std::vector<ScoreRecord> records(examples.size());
    parallel_for(examples.size(), jobs, [&](std::size_t i) {
        const Example& e = examples[i];
        const auto path = std::filesystem::path(options.map_dir) / (e.id + ".json");
        const SalienceMap raw = load_salience_map(path.string());
        const SalienceMap normalized = normalize_salience(raw);
        const WordSalienceMap words =
            tokens_to_words(normalized, e.effective_main_span(), options.stops());
        SalienceScores scores = salience_word_scores(words, options.aggregation);
        scores = salience_example_scores(std::move(scores), perspective_sets(words),
                                         options.arithmetic_mean);
        records[i].id = e.id;
        records[i].hallucination = scores.s_hall;
        records[i].coverage = scores.s_cov;
        if (word_level) records[i].word_scores = salience_word_error_scores(words, scores);
    });
    return records;
}

inline std::vector<ScoreRecord> detect_classifier(const std::vector<Example>& examples,
                                                  Scorer& scorer, const BatchOptions& options) {
    const auto hall = classify_batch(examples, ClassifierTask::Hallucination, scorer, options);
    const auto cov = classify_batch(examples, ClassifierTask::Coverage, scorer, options);
    std::vector<ClassifyFailure> failures = hall.failures;
    failures.insert(failures.end(), cov.failures.begin(), cov.failures.end());
    if (!failures.empty()) {
        std::string msg = "scorer failed on " + std::to_string(failures.size()) + " request(s):";
        for (const auto& f : failures) msg += "\n  " + f.example_id + ": " + f.message;
        throw TransportError(msg);
    }
    std::unordered_map<std::string, double> cov_by_id;
    for (const auto& [id, p] : cov.scores) cov_by_id[id] = p;
    std::vector<ScoreRecord> records;
    records.reserve(examples.size());
    for (const auto& [id, p] : hall.scores)
        records.push_back({id, p, cov_by_id.at(id), std::nullopt});
    return records;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

struct MethodScores {
    std::string method;
    std::unordered_map<std::string, ScoreRecord> by_id;
};

inline MethodScores index_scores(std::string method, const std::vector<ScoreRecord>& records) {
    MethodScores out{std::move(method), {}};
    for (const auto& r : records) out.by_id.emplace(r.id, r);
    return out;
}

inline ScoredSet scored_set_for_slice(const EvalSlice& slice, const MethodScores& scores) {
    ScoredSet set;
    auto add = [&](const Example& e, bool is_error) {
        const auto it = scores.by_id.find(e.id);
        if (it == scores.by_id.end())
            throw ValidationError("method '" + scores.method + "' has no score for example '" +
                                  e.id + "'");
        const double s = slice.error_type == ErrorType::Hallucination
                             ? it->second.hallucination
                             : it->second.coverage;
        set.entries.push_back({e.id, s, is_error});
    };
    for (const auto& e : slice.positives) add(e, false);
    for (const auto& e : slice.negatives) add(e, true);
    return set;
}

// AUC per method on each slice, plus paired permutation comparisons between
// every method pair per slice, Bonferroni-corrected across the whole report.
inline EvalReport evaluate_slices(const std::vector<EvalSlice>& slices,
                                  const std::vector<MethodScores>& methods, std::size_t n_perm,
                                  std::uint64_t seed) {
    EvalReport report;
    std::vector<double> raw_pvals;
    for (const auto& slice : slices) {
        if (slice.positives.empty() || slice.negatives.empty())
            throw ValidationError("slice '" + to_string(slice.kind) + "/" +
                                  to_string(slice.error_type) +
                                  "' is empty on one side; cannot evaluate");
        std::vector<ScoredSet> sets;
        sets.reserve(methods.size());
        for (const auto& m : methods) sets.push_back(scored_set_for_slice(slice, m));
        for (std::size_t i = 0; i < methods.size(); ++i) {
            MethodResult r;
            r.method = methods[i].method;
            r.slice = slice.kind;
            r.error_type = slice.error_type;
            r.auc = roc_auc(sets[i]);
            r.n_pos = slice.negatives.size();
            r.n_neg = slice.positives.size();
            r.std_error = auc_std_error(r.auc, r.n_pos, r.n_neg);
            report.results.push_back(std::move(r));
        }
        for (std::size_t i = 0; i < methods.size(); ++i) {
            for (std::size_t j = i + 1; j < methods.size(); ++j) {
                PairwiseComparison c;
                c.method_a = methods[i].method;
                c.method_b = methods[j].method;
                c.slice = slice.kind;
                c.error_type = slice.error_type;
                const std::uint64_t comparison_seed = derive_seed(
                    seed, to_string(slice.kind) + '|' + to_string(slice.error_type) + '|' +
                              c.method_a + '|' + c.method_b);
                c.p_raw = compare_auc_paired(sets[i], sets[j], n_perm, comparison_seed);
                raw_pvals.push_back(c.p_raw);
                report.comparisons.push_back(std::move(c));
            }
        }
    }
    const auto corrected = bonferroni(raw_pvals);
    for (std::size_t i = 0; i < corrected.size(); ++i)
        report.comparisons[i].p_bonferroni = corrected[i];
    return report;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out << text;
    if (!out) throw IoError("failed writing file: " + path);
}

inline void write_report(const EvalReport& report, const std::string& json_path,
                         std::string csv_path = {}) {
    write_json_file(json_path, report_to_json(report));
    if (csv_path.empty())
        csv_path = std::filesystem::path(json_path).replace_extension(".csv").string();
    write_text_file(csv_path, report_to_csv(report));
}

// ---------------------------------------------------------------------------
// Agreement files
// ---------------------------------------------------------------------------

struct RatingsFile {
    std::vector<std::string> raters;
    std::vector<std::string> item_ids;
    RatingsMatrix matrix;  // raters x items
};

inline RatingsFile ratings_from_json(const json& j) {
    RatingsFile f;
    for (const auto& r : j.at("raters")) f.raters.push_back(r.get<std::string>());
    const auto& items = j.at("items");
    f.matrix.assign(f.raters.size(), std::vector<std::optional<std::string>>(items.size()));
    std::size_t item_idx = 0;
    for (const auto& item : items) {
        f.item_ids.push_back(item.at("id").get<std::string>());
        const auto& ratings = item.at("ratings");
        if (ratings.size() != f.raters.size())
            throw ValidationError("item '" + f.item_ids.back() + "' has " +
                                  std::to_string(ratings.size()) + " ratings for " +
                                  std::to_string(f.raters.size()) + " raters");
        for (std::size_t r = 0; r < f.raters.size(); ++r)
            if (!ratings[r].is_null()) f.matrix[r][item_idx] = ratings[r].get<std::string>();
        ++item_idx;
    }
    return f;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

namespace detail {

inline std::string env_or(const char* name, std::string fallback) {
    const char* value = std::getenv(name);
    return value ? std::string(value) : std::move(fallback);
}

inline std::string method_name_from_path(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

struct SynthArgs {
    std::string kb_path;
    std::string in_path;
    std::string out_path;
    std::uint64_t seed = 0;
};

inline int run_synth(const SynthArgs& args) {
    const KnowledgeBase kb = load_knowledge_base(args.kb_path);
    const auto examples = load_examples(args.in_path, &kb);
    const SynthResult result = generate_synthetic_corpus(examples, kb, args.seed);
    for (const auto& skip : result.skipped)
        std::cerr << "skipped " << skip.example_id << ": " << skip.reason << "\n";
    save_examples(result.examples, args.out_path);
    std::cout << "wrote " << result.examples.size() << " synthetic examples to " << args.out_path
              << " (" << result.skipped.size() << " variant(s) skipped)\n";
    return 0;
}

struct DetectArgs {
    std::string method;
    std::string in_path;
    std::string kb_path;
    std::string out_path;
    std::string salience_dir;
    std::string aggregation = "max";
    bool arithmetic_mean = false;
    bool phrases_only = false;
    std::string stopwords_path;
    std::string scorer_url;
    std::string scorer_token;
    bool word_level = false;
    std::size_t jobs = 1;
    std::size_t concurrency = 4;
};

inline int run_detect(const DetectArgs& args) {
    std::optional<KnowledgeBase> kb;
    if (!args.kb_path.empty()) kb = load_knowledge_base(args.kb_path);
    const auto examples = load_examples(args.in_path, kb ? &*kb : nullptr);

    StopWords custom_stops;
    const StopWords* stops = nullptr;
    if (!args.stopwords_path.empty()) {
        custom_stops = load_stopword_file(args.stopwords_path);
        stops = &custom_stops;
    }

    std::vector<ScoreRecord> records;
    if (args.method == "rouge") {
        RougeOptions options;
        options.include_explanations = !args.phrases_only;
        options.stopwords = stops;
        records = detect_rouge(examples, options, args.word_level, args.jobs);
    } else if (args.method == "salience") {
        if (args.salience_dir.empty())
            throw ValidationError("--method salience requires --salience-dir");
        SalienceDetectOptions options;
        options.map_dir = args.salience_dir;
        options.aggregation = aggregation_from_string(args.aggregation);
        options.arithmetic_mean = args.arithmetic_mean;
        options.stopwords = stops;
        records = detect_salience(examples, options, args.word_level, args.jobs);
    } else if (args.method == "classifier") {
        if (args.word_level)
            throw ValidationError("--word-level is not available for the classifier method");
        const std::string url = !args.scorer_url.empty()
                                    ? args.scorer_url
                                    : env_or("FAITHCHECK_SCORER_URL", "");
        if (url.empty())
            throw ValidationError(
                "--method classifier requires --scorer-url (or FAITHCHECK_SCORER_URL); "
                "use --scorer-url mock for the offline mock scorer");
        const std::string token = !args.scorer_token.empty()
                                      ? args.scorer_token
                                      : env_or("FAITHCHECK_SCORER_TOKEN", "");
        BatchOptions batch;
        batch.concurrency = args.concurrency;
        if (url == "mock") {
            MockScorer scorer;
            records = detect_classifier(examples, scorer, batch);
        } else {
            HttpScorer scorer(url, token);
            records = detect_classifier(examples, scorer, batch);
        }
    } else {
        throw ValidationError("unknown method '" + args.method +
                              "' (expected rouge, salience or classifier)");
    }
    save_scores(records, args.out_path);
    std::cout << "wrote " << records.size() << " score records to " << args.out_path << "\n";
    return 0;
}

struct SliceArgs {
    std::vector<std::string> in_paths;
    std::string kind;
    std::string error_type;
    std::string out_path;
};

inline int run_slice(const SliceArgs& args) {
    std::vector<Example> examples;
    for (const auto& path : args.in_paths) {
        auto loaded = load_examples(path);
        examples.insert(examples.end(), std::make_move_iterator(loaded.begin()),
                        std::make_move_iterator(loaded.end()));
    }
    const EvalSlice slice = slice_test_set(examples, slice_kind_from_string(args.kind),
                                           error_type_from_string(args.error_type));
    save_slice(slice, args.out_path);
    std::cout << "wrote slice with " << slice.positives.size() << " error-free and "
              << slice.negatives.size() << " error examples to " << args.out_path << "\n";
    return 0;
}

struct EvalArgs {
    std::vector<std::string> score_paths;
    std::string slice_path;
    std::size_t n_perm = 10000;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string csv_path;
};

inline int run_eval(const EvalArgs& args) {
    const EvalSlice slice = load_slice(args.slice_path);
    std::vector<MethodScores> methods;
    for (const auto& path : args.score_paths) {
        const std::string name = method_name_from_path(path);
        for (const auto& m : methods)
            if (m.method == name)
                throw ValidationError("two score files share the method name '" + name + "'");
        methods.push_back(index_scores(name, load_scores(path)));
    }
    const EvalReport report = evaluate_slices({slice}, methods, args.n_perm, args.seed);
    write_report(report, args.out_path, args.csv_path);
    for (const auto& r : report.results)
        std::cout << to_string(r.slice) << " " << to_string(r.error_type) << " " << r.method
                  << ": AUC " << r.auc << " (SE " << r.std_error << ")\n";
    std::cout << "wrote report to " << args.out_path << "\n";
    return 0;
}

struct AgreementArgs {
    std::string ratings_path;
    std::string gold_path;
    std::string out_path;
};

inline int run_agreement(const AgreementArgs& args) {
    const json ratings_json = read_json_file(args.ratings_path);
    json gold_json = json::object();
    if (!args.gold_path.empty()) gold_json = read_json_file(args.gold_path);

    EvalReport report;
    for (const auto& type : {"hallucination", "coverage"}) {
        if (!ratings_json.contains(type)) continue;
        const RatingsFile file = ratings_from_json(ratings_json.at(type));
        AgreementStats stats;
        stats.alpha = krippendorff_alpha(file.matrix);
        stats.n_raters = file.raters.size();
        stats.n_items = file.item_ids.size();
        if (gold_json.contains(type)) {
            const auto& gold_map = gold_json.at(type);
            std::vector<std::string> gold;
            gold.reserve(file.item_ids.size());
            for (const auto& id : file.item_ids) {
                if (!gold_map.contains(id))
                    throw ValidationError("gold file has no " + std::string(type) +
                                          " label for item '" + id + "'");
                gold.push_back(gold_map.at(id).get<std::string>());
            }
            stats.majority_vote_agreement = majority_vote_agreement(file.matrix, gold);
        }
        report.agreement.emplace(type, stats);
    }
    if (report.agreement.empty())
        throw ValidationError("ratings file has neither 'hallucination' nor 'coverage' ratings");
    write_json_file(args.out_path, report_to_json(report));
    for (const auto& [type, stats] : report.agreement) {
        std::cout << type << ": alpha " << stats.alpha;
        if (stats.majority_vote_agreement)
            std::cout << ", majority-vote agreement " << *stats.majority_vote_agreement;
        std::cout << "\n";
    }
    std::cout << "wrote report to " << args.out_path << "\n";
    return 0;
}

struct DemoArgs {
    std::string out_dir = "demo_out";
    std::uint64_t seed = 13;
    std::string kb_path;
    std::size_t n_perm = 10000;
    std::size_t jobs = 1;
};

inline int run_demo(const DemoArgs& args) {
    namespace fs = std::filesystem;
    const fs::path out_dir(args.out_dir);
    fs::create_directories(out_dir / "maps");
    fs::create_directories(out_dir / "scores");
    fs::create_directories(out_dir / "slices");

    KnowledgeBase kb =
        args.kb_path.empty() ? demo_knowledge_base() : load_knowledge_base(args.kb_path);
    validate_kb(kb);
    save_knowledge_base(kb, (out_dir / "kb.json").string());

    auto examples = build_demo_examples(kb, 5, derive_seed(args.seed, "demo-examples"));
    save_examples(examples, (out_dir / "examples.json").string());

    const SynthResult synth = generate_synthetic_corpus(examples, kb, derive_seed(args.seed, "synth"));
    save_examples(synth.examples, (out_dir / "synthetic.json").string());
    std::vector<Example> all = examples;
    all.insert(all.end(), synth.examples.begin(), synth.examples.end());
    save_examples(all, (out_dir / "all_examples.json").string());
    std::cout << "built " << examples.size() << " error-free examples and "
              << synth.examples.size() << " synthetic variants (" << synth.skipped.size()
              << " variant(s) infeasible)\n";

    const std::uint64_t sim_seed = derive_seed(args.seed, "salience-sim");
    parallel_for(all.size(), args.jobs, [&](std::size_t i) {
        const SalienceMap map = simulate_salience_map(all[i], derive_seed(sim_seed, all[i].id));
        save_salience_map(map, (out_dir / "maps" / (all[i].id + ".json")).string());
    });

    const auto rouge_records = detect_rouge(all, RougeOptions{}, false, args.jobs);
    save_scores(rouge_records, (out_dir / "scores" / "rouge.json").string());
    SalienceDetectOptions salience_options;
    salience_options.map_dir = (out_dir / "maps").string();
    const auto salience_records = detect_salience(all, salience_options, false, args.jobs);
    save_scores(salience_records, (out_dir / "scores" / "salience.json").string());

    std::vector<EvalSlice> slices;
    for (const ErrorType type : {ErrorType::Hallucination, ErrorType::Coverage}) {
        EvalSlice slice = slice_test_set(all, EvalSliceKind::UnparaphrasedSynthetic, type);
        save_slice(slice, (out_dir / "slices" /
                           ("unparaphrased-synthetic-" + to_string(type) + ".json"))
                              .string());
        slices.push_back(std::move(slice));
    }

    const std::vector<MethodScores> methods{index_scores("rouge", rouge_records),
                                            index_scores("salience", salience_records)};
    const EvalReport report =
        evaluate_slices(slices, methods, args.n_perm, derive_seed(args.seed, "eval"));
    write_report(report, (out_dir / "report.json").string(), (out_dir / "report.csv").string());

    for (const auto& r : report.results)
        std::cout << to_string(r.slice) << " " << to_string(r.error_type) << " " << r.method
                  << ": AUC " << r.auc << " (SE " << r.std_error << ")\n";
    std::cout << "wrote report to " << (out_dir / "report.json").string() << "\n";
    return 0;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args) {
    CLI::App app{"faithcheck: hallucination and coverage error detection for "
                 "argument-grounded responses"};
    app.require_subcommand(1);

    detail::SynthArgs synth_args;
    auto* synth = app.add_subcommand("synth", "Generate synthetic error variants");
    synth->add_option("--kb", synth_args.kb_path, "Knowledge base JSON")->required();
    synth->add_option("--in", synth_args.in_path, "Error-free examples JSON")->required();
    synth->add_option("--seed", synth_args.seed, "Master seed")->required();
    synth->add_option("--out", synth_args.out_path, "Output examples JSON")->required();

    detail::DetectArgs detect_args;
    auto* detect = app.add_subcommand("detect", "Score examples for hallucination and coverage errors");
    detect->add_option("--method", detect_args.method, "rouge | salience | classifier")->required();
    detect->add_option("--in", detect_args.in_path, "Examples JSON")->required();
    detect->add_option("--kb", detect_args.kb_path, "Optional knowledge base for validation");
    detect->add_option("--out", detect_args.out_path, "Output scores JSON")->required();
    detect->add_option("--salience-dir", detect_args.salience_dir,
                       "Directory of per-example salience maps (<id>.json)");
    detect->add_option("--aggregation", detect_args.aggregation, "max | sum | negentropy");
    detect->add_flag("--arithmetic-mean", detect_args.arithmetic_mean,
                     "Aggregate word scores with the arithmetic instead of geometric mean");
    detect->add_flag("--phrases-only", detect_args.phrases_only,
                     "Match against argument phrases only, ignoring explanations");
    detect->add_option("--stopwords", detect_args.stopwords_path, "Override stop-word list file");
    detect->add_option("--scorer-url", detect_args.scorer_url,
                       "Classifier scorer endpoint, or 'mock' (env FAITHCHECK_SCORER_URL)");
    detect->add_option("--scorer-token", detect_args.scorer_token,
                       "Bearer token for the scorer (env FAITHCHECK_SCORER_TOKEN)");
    detect->add_flag("--word-level", detect_args.word_level, "Include per-word scores in the output");
    detect->add_option("--jobs", detect_args.jobs, "Per-example parallelism");
    detect->add_option("--concurrency", detect_args.concurrency,
                       "Max in-flight scorer requests (classifier method)");

    detail::SliceArgs slice_args;
    auto* slice = app.add_subcommand("slice", "Build an evaluation slice from labeled examples");
    slice->add_option("--in", slice_args.in_paths, "Examples JSON (repeatable)")->required();
    slice->add_option("--kind", slice_args.kind,
                      "full-organic | unparaphrased-synthetic | paraphrased-synthetic | "
                      "ambiguous-organic")
        ->required();
    slice->add_option("--error-type", slice_args.error_type, "hallucination | coverage")->required();
    slice->add_option("--out", slice_args.out_path, "Output slice JSON")->required();

    detail::EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Compute AUCs and significance tests on a slice");
    eval->add_option("--scores", eval_args.score_paths, "Score files (repeatable; stem = method name)")
        ->required();
    eval->add_option("--slice", eval_args.slice_path, "Slice JSON")->required();
    eval->add_option("--n-perm", eval_args.n_perm, "Permutations for the paired test");
    eval->add_option("--seed", eval_args.seed, "Seed for the permutation test");
    eval->add_option("--out", eval_args.out_path, "Output report JSON")->required();
    eval->add_option("--csv", eval_args.csv_path, "CSV summary path (default: report path with .csv)");

    detail::AgreementArgs agreement_args;
    auto* agreement = app.add_subcommand("agreement", "Inter-annotator agreement statistics");
    agreement->add_option("--ratings", agreement_args.ratings_path, "Ratings JSON")->required();
    agreement->add_option("--gold", agreement_args.gold_path, "Gold labels JSON");
    agreement->add_option("--out", agreement_args.out_path, "Output report JSON")->required();

    detail::DemoArgs demo_args;
    auto* demo = app.add_subcommand("demo", "Run the bundled planted benchmark end to end");
    demo->add_option("--out-dir", demo_args.out_dir, "Output directory (default demo_out)");
    demo->add_option("--seed", demo_args.seed, "Master seed (default 13)");
    demo->add_option("--kb", demo_args.kb_path, "Knowledge base override (default: bundled mini KB)");
    demo->add_option("--n-perm", demo_args.n_perm, "Permutations for significance tests");
    demo->add_option("--jobs", demo_args.jobs, "Per-example parallelism");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (synth->parsed()) return detail::run_synth(synth_args);
        if (detect->parsed()) return detail::run_detect(detect_args);
        if (slice->parsed()) return detail::run_slice(slice_args);
        if (eval->parsed()) return detail::run_eval(eval_args);
        if (agreement->parsed()) return detail::run_agreement(agreement_args);
        if (demo->parsed()) return detail::run_demo(demo_args);
        std::cerr << "error: no subcommand given\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TransportError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

inline int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace faithcheck::cli
