#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "faithcheck/corpus.hpp"
#include "faithcheck/parallel.hpp"
#include "faithcheck/rng.hpp"

namespace faithcheck {

enum class ClassifierTask { Hallucination, Coverage };

inline std::string to_string(ClassifierTask t) {
    return t == ClassifierTask::Hallucination ? "hallucination" : "coverage";
}

// Log-likelihoods of the two single-token class labels. YES means the
// response is clean, NO means it carries the error under test.
struct LabelLogScores {
    double loglik_yes = 0.0;
    double loglik_no = 0.0;
};

// Serializes an example into the fixed curly-brace key-value layout the
// classifiers consume: task instruction, query, pro/con argument phrases,
// response, and an open answer slot. Byte-stable for identical inputs.
inline std::string build_prompt(const Example& e, ClassifierTask task) {
    std::string prompt;
    prompt += "{task: ";
    if (task == ClassifierTask::Hallucination) {
        prompt +=
            "Decide whether the response contains a hallucination, meaning it presents an "
            "argument that is not among the given pro or con arguments. Reply YES if the "
            "response only uses given arguments, and NO if it introduces an argument that "
            "was not given.";
    } else {
        prompt +=
            "Decide whether the response contains a coverage error, meaning one of the given "
            "pro or con arguments is completely missing from it. Reply YES if every given "
            "argument is covered by the response, and NO if any given argument was dropped.";
    }
    prompt += "}\n";
    prompt += "{query: " + e.query + "}\n";
    auto emit_args = [&prompt](const char* key, const std::vector<Argument>& args) {
        prompt += "{";
        prompt += key;
        prompt += ":";
        for (std::size_t i = 0; i < args.size(); ++i)
            prompt += "\n" + std::to_string(i + 1) + ". " + args[i].phrase;
        prompt += "\n}\n";
    };
    emit_args("pro_arguments", e.pro_args);
    emit_args("con_arguments", e.con_args);
    prompt += "{response: " + e.response + "}\n";
    prompt += "{answer:";
    return prompt;
}

// Softmax over {YES, NO}, returning the NO component: the probability that
// the example carries the error. Computed stably by subtracting the max.
inline double score_to_probability(const LabelLogScores& scores) {
    if (!std::isfinite(scores.loglik_yes) || !std::isfinite(scores.loglik_no))
        throw ValidationError("label log-likelihoods must be finite");
    const double m = std::max(scores.loglik_yes, scores.loglik_no);
    const double e_yes = std::exp(scores.loglik_yes - m);
    const double e_no = std::exp(scores.loglik_no - m);
    return e_no / (e_yes + e_no);
}

struct ScoreRequest {
    std::string example_id;  // not sent over the wire; mock scoring keys on it
    std::string prompt;
    std::vector<std::string> labels{"YES", "NO"};
};

// Implementations must be safe to call from multiple threads.
class Scorer {
public:
    virtual ~Scorer() = default;
    virtual LabelLogScores score(const ScoreRequest& request) = 0;
};

// Deterministic offline scorer: log-likelihoods are hashed from the example
// id and label, spread over [-8, 0]. Lets the full pipeline run without an
// LLM behind it.
class MockScorer : public Scorer {
public:
    LabelLogScores score(const ScoreRequest& request) override {
        return {draw(request, "YES"), draw(request, "NO")};
    }

private:
    static double draw(const ScoreRequest& request, const std::string& label) {
        const std::uint64_t h =
            splitmix64(fnv1a64(request.example_id + '\x1f' + label + '\x1f') ^
                       fnv1a64(request.labels.front()));
        return -8.0 * (static_cast<double>(h >> 11) * 0x1.0p-53);
    }
};

// Remote scorer speaking the wire protocol:
//   POST <url>  body {"prompt": str, "labels": ["YES","NO"]}
//   reply       {"logliks": [loglik_yes, loglik_no]} aligned with labels
// An auth token, when set, is sent as "Authorization: Bearer <token>".
class HttpScorer : public Scorer {
public:
    explicit HttpScorer(std::string url, std::string token = {}, int timeout_seconds = 30)
        : token_(std::move(token)), timeout_seconds_(timeout_seconds) {
        const auto scheme_end = url.find("://");
        if (scheme_end == std::string::npos)
            throw ValidationError("scorer url must include a scheme: " + url);
        const auto path_start = url.find('/', scheme_end + 3);
        if (path_start == std::string::npos) {
            base_ = url;
            path_ = "/";
        } else {
            base_ = url.substr(0, path_start);
            path_ = url.substr(path_start);
        }
    }

    LabelLogScores score(const ScoreRequest& request) override {
        json body{{"prompt", request.prompt}, {"labels", request.labels}};
        httplib::Client client(base_);
        client.set_connection_timeout(timeout_seconds_);
        client.set_read_timeout(timeout_seconds_);
        httplib::Headers headers;
        if (!token_.empty()) headers.emplace("Authorization", "Bearer " + token_);
        auto res = client.Post(path_, headers, body.dump(), "application/json");
        if (!res)
            throw TransportError("scorer unreachable at " + base_ + path_ + ": " +
                                 httplib::to_string(res.error()));
        if (res->status != 200)
            throw TransportError("scorer returned HTTP " + std::to_string(res->status));
        json reply;
        try {
            reply = json::parse(res->body);
        } catch (const nlohmann::json::parse_error&) {
            throw TransportError("malformed scorer reply: not JSON");
        }
        if (!reply.contains("logliks") || !reply.at("logliks").is_array() ||
            reply.at("logliks").size() != request.labels.size())
            throw TransportError("malformed scorer reply: expected 'logliks' array of " +
                                 std::to_string(request.labels.size()));
        const double yes = reply.at("logliks")[0].get<double>();
        const double no = reply.at("logliks")[1].get<double>();
        if (!std::isfinite(yes) || !std::isfinite(no))
            throw TransportError("malformed scorer reply: non-finite log-likelihood");
        return {yes, no};
    }

private:
    std::string base_;
    std::string path_;
    std::string token_;
    int timeout_seconds_;
};

struct ClassifyFailure {
    std::string example_id;
    std::string message;
};

// Scores in input order for the examples that succeeded; failures are
// collected per example, never dropped silently.
struct ClassifyBatchResult {
    std::vector<std::pair<std::string, double>> scores;
    std::vector<ClassifyFailure> failures;
};

struct BatchOptions {
    std::size_t max_attempts = 3;
    std::size_t concurrency = 4;  // bounded in-flight requests
};

inline ClassifyBatchResult classify_batch(const std::vector<Example>& examples,
                                          ClassifierTask task, Scorer& scorer,
                                          const BatchOptions& options = {}) {
    std::vector<std::optional<double>> slots(examples.size());
    std::vector<std::optional<std::string>> errors(examples.size());
    parallel_for(examples.size(), options.concurrency, [&](std::size_t i) {
        ScoreRequest request{examples[i].id, build_prompt(examples[i], task)};
        std::string last_error = "no attempts made";
        for (std::size_t attempt = 0; attempt < std::max<std::size_t>(1, options.max_attempts);
             ++attempt) {
            try {
                slots[i] = score_to_probability(scorer.score(request));
                return;
            } catch (const std::exception& e) {
                last_error = e.what();
            }
        }
        errors[i] = last_error;
    });
    ClassifyBatchResult result;
    for (std::size_t i = 0; i < examples.size(); ++i) {
        if (slots[i]) {
            result.scores.emplace_back(examples[i].id, *slots[i]);
        } else {
            result.failures.push_back({examples[i].id, errors[i].value_or("unknown failure")});
        }
    }
    return result;
}

}  // namespace faithcheck
