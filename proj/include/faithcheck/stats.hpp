#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "faithcheck/corpus.hpp"
#include "faithcheck/rng.hpp"

namespace faithcheck {

// ROC bookkeeping: the positive class is the ERROR class (is_error = true),
// and higher detector scores mean "more likely an error". Note this flips
// EvalSlice's naming, where `positives` are the error-free examples.
struct ScoredEntry {
    std::string id;
    double score = 0.0;
    bool is_error = false;
};

struct ScoredSet {
    std::vector<ScoredEntry> entries;
};

// AUC = (#{error scored above clean} + 0.5 * ties) / (n_error * n_clean),
// computed through midranks; matches the pair-count definition exactly,
// ties included.
inline double roc_auc(const ScoredSet& set) {
    const std::size_t n = set.entries.size();
    std::size_t n_pos = 0;
    for (const auto& e : set.entries) n_pos += e.is_error ? 1 : 0;
    const std::size_t n_neg = n - n_pos;
    if (n_pos == 0 || n_neg == 0)
        throw ValidationError("ROC AUC needs at least one error and one error-free entry");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return set.entries[a].score < set.entries[b].score;
    });
    double rank_sum_pos = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && set.entries[order[j]].score == set.entries[order[i]].score) ++j;
        const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k)
            if (set.entries[order[k]].is_error) rank_sum_pos += midrank;
        i = j;
    }
    const double np = static_cast<double>(n_pos);
    const double wins = rank_sum_pos - np * (np + 1.0) / 2.0;
    return wins / (np * static_cast<double>(n_neg));
}

// Hanley-McNeil standard error of an AUC estimate:
//   SE^2 = (A(1-A) + (n_pos-1)(Q1-A^2) + (n_neg-1)(Q2-A^2)) / (n_pos n_neg)
//   Q1 = A/(2-A), Q2 = 2A^2/(1+A)
inline double auc_std_error(double auc, std::size_t n_pos, std::size_t n_neg) {
    if (!(auc >= 0.0 && auc <= 1.0)) throw ValidationError("AUC must lie in [0,1]");
    if (n_pos == 0 || n_neg == 0) throw ValidationError("AUC standard error needs counts >= 1");
    const double a = auc;
    const double q1 = a / (2.0 - a);
    const double q2 = 2.0 * a * a / (1.0 + a);
    const double np = static_cast<double>(n_pos);
    const double nn = static_cast<double>(n_neg);
    const double var =
        (a * (1.0 - a) + (np - 1.0) * (q1 - a * a) + (nn - 1.0) * (q2 - a * a)) / (np * nn);
    return std::sqrt(std::max(var, 0.0));
}

// Two-sided paired permutation test on |AUC_A - AUC_B|. Both sets must list
// the same ids with the same labels in the same order; each permutation swaps
// the (score_A, score_B) pair per id with probability 1/2. The +1 in
// numerator and denominator keeps p in (0, 1].
inline double compare_auc_paired(const ScoredSet& set_a, const ScoredSet& set_b,
                                 std::size_t n_perm, std::uint64_t seed) {
    if (set_a.entries.size() != set_b.entries.size())
        throw ValidationError("paired AUC comparison needs equally sized score sets");
    const std::size_t n = set_a.entries.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (set_a.entries[i].id != set_b.entries[i].id)
            throw ValidationError("mismatched ids in paired comparison at position " +
                                  std::to_string(i) + ": '" + set_a.entries[i].id + "' vs '" +
                                  set_b.entries[i].id + "'");
        if (set_a.entries[i].is_error != set_b.entries[i].is_error)
            throw ValidationError("mismatched labels in paired comparison for id '" +
                                  set_a.entries[i].id + "'");
    }
    if (n_perm == 0) throw ValidationError("permutation test needs n_perm >= 1");

    const double observed = std::abs(roc_auc(set_a) - roc_auc(set_b));
    ScoredSet perm_a = set_a;
    ScoredSet perm_b = set_b;
    Rng rng = make_rng(seed);
    std::size_t at_least = 0;
    for (std::size_t p = 0; p < n_perm; ++p) {
        for (std::size_t i = 0; i < n; ++i) {
            perm_a.entries[i].score = set_a.entries[i].score;
            perm_b.entries[i].score = set_b.entries[i].score;
            if (rng() & 1u) std::swap(perm_a.entries[i].score, perm_b.entries[i].score);
        }
        const double stat = std::abs(roc_auc(perm_a) - roc_auc(perm_b));
        if (stat >= observed) ++at_least;
    }
    return static_cast<double>(1 + at_least) / static_cast<double>(1 + n_perm);
}

inline std::vector<double> bonferroni(const std::vector<double>& pvals) {
    const double m = static_cast<double>(pvals.size());
    std::vector<double> out;
    out.reserve(pvals.size());
    for (double p : pvals) {
        if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p-values must lie in [0,1]");
        out.push_back(std::min(1.0, m * p));
    }
    return out;
}

// Ratings layout shared by the agreement statistics: raters x items, with
// missing ratings as nullopt. Labels are nominal.
using RatingsMatrix = std::vector<std::vector<std::optional<std::string>>>;

// Krippendorff's alpha, nominal level, via the coincidence matrix:
//   alpha = 1 - (n-1) * sum_{c != k} o_ck / sum_{c != k} n_c n_k
// Items with fewer than two ratings contribute nothing. Perfect agreement
// returns exactly 1 (including the single-label corner where the expected
// disagreement is zero too).
inline double krippendorff_alpha(const RatingsMatrix& ratings) {
    const std::size_t n_raters = ratings.size();
    std::size_t n_items = n_raters == 0 ? 0 : ratings.front().size();
    for (const auto& row : ratings)
        if (row.size() != n_items)
            throw ValidationError("ratings matrix rows must all have the same item count");

    std::map<std::string, std::size_t> label_index;
    for (const auto& row : ratings)
        for (const auto& r : row)
            if (r) label_index.emplace(*r, label_index.size());
    const std::size_t n_labels = label_index.size();

    std::vector<double> coincidence(n_labels * n_labels, 0.0);
    double n_pairable = 0.0;
    for (std::size_t item = 0; item < n_items; ++item) {
        std::vector<std::size_t> values;
        for (std::size_t rater = 0; rater < n_raters; ++rater)
            if (ratings[rater][item]) values.push_back(label_index.at(*ratings[rater][item]));
        const std::size_t m = values.size();
        if (m < 2) continue;
        n_pairable += static_cast<double>(m);
        const double weight = 1.0 / static_cast<double>(m - 1);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                if (a != b) coincidence[values[a] * n_labels + values[b]] += weight;
    }
    if (n_pairable < 2.0)
        throw ValidationError("Krippendorff's alpha needs at least two pairable ratings");

    std::vector<double> totals(n_labels, 0.0);
    for (std::size_t c = 0; c < n_labels; ++c)
        for (std::size_t k = 0; k < n_labels; ++k) totals[c] += coincidence[c * n_labels + k];
    double observed = 0.0;
    double expected = 0.0;
    for (std::size_t c = 0; c < n_labels; ++c) {
        for (std::size_t k = 0; k < n_labels; ++k) {
            if (c == k) continue;
            observed += coincidence[c * n_labels + k];
            expected += totals[c] * totals[k];
        }
    }
    if (observed == 0.0) return 1.0;
    return 1.0 - (n_pairable - 1.0) * observed / expected;
}

// Fraction of items whose rater majority matches the gold label. A tie for
// the majority counts as a mismatch (deterministic, conservative rule).
inline double majority_vote_agreement(const RatingsMatrix& ratings,
                                      const std::vector<std::string>& gold) {
    const std::size_t n_raters = ratings.size();
    const std::size_t n_items = gold.size();
    for (const auto& row : ratings)
        if (row.size() != n_items)
            throw ValidationError("ratings matrix does not match the gold label count");
    if (n_items == 0) throw ValidationError("majority vote agreement needs at least one item");

    std::size_t matches = 0;
    for (std::size_t item = 0; item < n_items; ++item) {
        std::map<std::string, std::size_t> counts;
        for (std::size_t rater = 0; rater < n_raters; ++rater)
            if (ratings[rater][item]) ++counts[*ratings[rater][item]];
        if (counts.empty())
            throw ValidationError("item " + std::to_string(item) + " has no ratings");
        std::size_t best = 0;
        for (const auto& [label, c] : counts) best = std::max(best, c);
        std::size_t winners = 0;
        std::string winner;
        for (const auto& [label, c] : counts) {
            if (c == best) {
                ++winners;
                winner = label;
            }
        }
        if (winners == 1 && winner == gold[item]) ++matches;
    }
    return static_cast<double>(matches) / static_cast<double>(n_items);
}

// ---------------------------------------------------------------------------
// Evaluation reports
// ---------------------------------------------------------------------------

struct MethodResult {
    std::string method;
    EvalSliceKind slice = EvalSliceKind::FullOrganic;
    ErrorType error_type = ErrorType::Hallucination;
    double auc = 0.0;
    double std_error = 0.0;
    std::size_t n_pos = 0;  // error examples (ROC positives)
    std::size_t n_neg = 0;  // error-free examples
};

struct PairwiseComparison {
    std::string method_a;
    std::string method_b;
    EvalSliceKind slice = EvalSliceKind::FullOrganic;
    ErrorType error_type = ErrorType::Hallucination;
    double p_raw = 1.0;
    double p_bonferroni = 1.0;
};

struct AgreementStats {
    double alpha = 0.0;
    std::optional<double> majority_vote_agreement;
    std::size_t n_raters = 0;
    std::size_t n_items = 0;
};

struct EvalReport {
    std::vector<MethodResult> results;
    std::vector<PairwiseComparison> comparisons;
    std::map<std::string, AgreementStats> agreement;  // keyed by error type
};

inline json report_to_json(const EvalReport& report) {
    json results = json::array();
    for (const auto& r : report.results)
        results.push_back(json{{"slice", to_string(r.slice)},
                               {"error_type", to_string(r.error_type)},
                               {"method", r.method},
                               {"auc", r.auc},
                               {"std_error", r.std_error},
                               {"n_pos", r.n_pos},
                               {"n_neg", r.n_neg}});
    json comparisons = json::array();
    for (const auto& c : report.comparisons)
        comparisons.push_back(json{{"slice", to_string(c.slice)},
                                   {"error_type", to_string(c.error_type)},
                                   {"method_a", c.method_a},
                                   {"method_b", c.method_b},
                                   {"p_raw", c.p_raw},
                                   {"p_bonferroni", c.p_bonferroni}});
    json out{{"results", std::move(results)}, {"comparisons", std::move(comparisons)}};
    if (!report.agreement.empty()) {
        json agreement = json::object();
        for (const auto& [key, stats] : report.agreement) {
            json entry{{"alpha", stats.alpha},
                       {"n_raters", stats.n_raters},
                       {"n_items", stats.n_items}};
            if (stats.majority_vote_agreement)
                entry["majority_vote_agreement"] = *stats.majority_vote_agreement;
            agreement[key] = std::move(entry);
        }
        out["agreement"] = std::move(agreement);
    }
    return out;
}

inline EvalReport report_from_json(const json& j) {
    EvalReport report;
    for (const auto& r : j.value("results", json::array())) {
        MethodResult m;
        m.slice = slice_kind_from_string(r.at("slice").get<std::string>());
        m.error_type = error_type_from_string(r.at("error_type").get<std::string>());
        m.method = r.at("method").get<std::string>();
        m.auc = r.at("auc").get<double>();
        m.std_error = r.at("std_error").get<double>();
        m.n_pos = r.at("n_pos").get<std::size_t>();
        m.n_neg = r.at("n_neg").get<std::size_t>();
        report.results.push_back(std::move(m));
    }
    for (const auto& c : j.value("comparisons", json::array())) {
        PairwiseComparison pc;
        pc.slice = slice_kind_from_string(c.at("slice").get<std::string>());
        pc.error_type = error_type_from_string(c.at("error_type").get<std::string>());
        pc.method_a = c.at("method_a").get<std::string>();
        pc.method_b = c.at("method_b").get<std::string>();
        pc.p_raw = c.at("p_raw").get<double>();
        pc.p_bonferroni = c.at("p_bonferroni").get<double>();
        report.comparisons.push_back(std::move(pc));
    }
    return report;
}

// One row per slice x error type x method.
inline std::string report_to_csv(const EvalReport& report) {
    std::string csv = "slice,error_type,method,auc,std_error,n_pos,n_neg\n";
    char buf[64];
    for (const auto& r : report.results) {
        csv += to_string(r.slice) + ',' + to_string(r.error_type) + ',' + r.method + ',';
        std::snprintf(buf, sizeof(buf), "%.6f,%.6f,", r.auc, r.std_error);
        csv += buf;
        csv += std::to_string(r.n_pos) + ',' + std::to_string(r.n_neg) + '\n';
    }
    return csv;
}

}  // namespace faithcheck
