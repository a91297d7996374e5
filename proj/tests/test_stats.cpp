#include <catch2/catch_amalgamated.hpp>

#include "faithcheck/rng.hpp"
#include "faithcheck/stats.hpp"
#include "oracles.hpp"

#include <cmath>
#include <string>
#include <vector>

using namespace faithcheck;
using Catch::Matchers::WithinAbs;

namespace {

ScoredSet make_set(const std::vector<double>& error_scores,
                   const std::vector<double>& clean_scores) {
    ScoredSet set;
    int id = 0;
    for (double s : error_scores) set.entries.push_back({"e" + std::to_string(id++), s, true});
    for (double s : clean_scores) set.entries.push_back({"c" + std::to_string(id++), s, false});
    return set;
}

}  // namespace

TEST_CASE("roc_auc on the worked four-point case", "[stats][auc]") {
    CHECK_THAT(roc_auc(make_set({0.9, 0.4}, {0.8, 0.1})), WithinAbs(0.75, 1e-15));
}

TEST_CASE("roc_auc extremes", "[stats][auc]") {
    CHECK(roc_auc(make_set({0.9, 0.8}, {0.2, 0.1})) == 1.0);
    CHECK(roc_auc(make_set({0.1, 0.2}, {0.8, 0.9})) == 0.0);
    CHECK(roc_auc(make_set({0.5, 0.5}, {0.5, 0.5, 0.5})) == 0.5);
    CHECK_THROWS_AS(roc_auc(make_set({0.5}, {})), ValidationError);
    CHECK_THROWS_AS(roc_auc(make_set({}, {0.5})), ValidationError);
}

TEST_CASE("roc_auc equals the pair-count oracle with ties", "[stats][auc][oracle]") {
    Rng rng = make_rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n_err = 1 + uniform_below(rng, 25);
        const std::size_t n_clean = 1 + uniform_below(rng, 25);
        std::vector<double> err, clean;
        // draw from a small grid so ties actually happen
        for (std::size_t i = 0; i < n_err; ++i)
            err.push_back(static_cast<double>(uniform_below(rng, 7)) / 6.0);
        for (std::size_t i = 0; i < n_clean; ++i)
            clean.push_back(static_cast<double>(uniform_below(rng, 7)) / 6.0);
        const double expected = oracles::auc_pair_count_oracle(err, clean);
        const double actual = roc_auc(make_set(err, clean));
        CHECK(actual == expected);  // exact, not approximate
    }
}

TEST_CASE("roc_auc is invariant under strictly increasing transforms", "[stats][auc][property]") {
    Rng rng = make_rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> err, clean;
        for (int i = 0; i < 12; ++i) err.push_back(uniform_unit(rng));
        for (int i = 0; i < 15; ++i) clean.push_back(uniform_unit(rng));
        const double base = roc_auc(make_set(err, clean));
        auto warp = [](std::vector<double> v) {
            for (double& x : v) x = std::exp(3.0 * x) + x * x;
            return v;
        };
        CHECK_THAT(roc_auc(make_set(warp(err), warp(clean))), WithinAbs(base, 1e-12));
    }
}

TEST_CASE("complementing labels complements the AUC on tie-free data", "[stats][auc][property]") {
    Rng rng = make_rng(56);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> err, clean;
        for (int i = 0; i < 10; ++i) err.push_back(uniform_unit(rng) + i * 2.0);
        for (int i = 0; i < 10; ++i) clean.push_back(uniform_unit(rng) + i * 2.0 + 0.5);
        const double a = roc_auc(make_set(err, clean));
        const double b = roc_auc(make_set(clean, err));
        CHECK_THAT(a + b, WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("Hanley-McNeil standard error", "[stats][se]") {
    CHECK_THAT(auc_std_error(0.8, 10, 10), WithinAbs(0.10198, 1e-4));
    CHECK(auc_std_error(1.0, 10, 10) == 0.0);
    SECTION("shrinks with sample size") {
        const double se10 = auc_std_error(0.5, 10, 10);
        const double se100 = auc_std_error(0.5, 100, 100);
        const double se1000 = auc_std_error(0.5, 1000, 1000);
        CHECK(se10 > se100);
        CHECK(se100 > se1000);
        CHECK(se1000 < 0.02);
    }
    SECTION("input validation") {
        CHECK_THROWS_AS(auc_std_error(1.2, 10, 10), ValidationError);
        CHECK_THROWS_AS(auc_std_error(0.5, 0, 10), ValidationError);
    }
}

TEST_CASE("paired permutation test", "[stats][perm]") {
    SECTION("identical inputs give p = 1 exactly") {
        const ScoredSet set = make_set({0.9, 0.7, 0.6}, {0.4, 0.2});
        CHECK(compare_auc_paired(set, set, 1000, 3) == 1.0);
    }
    SECTION("a perfectly separating method beats random scores") {
        Rng rng = make_rng(808);
        ScoredSet separating, random;
        for (int i = 0; i < 20; ++i) {
            const std::string id = "x" + std::to_string(i);
            separating.entries.push_back({id, 0.9 + 0.001 * i, true});
            random.entries.push_back({id, uniform_unit(rng), true});
        }
        for (int i = 0; i < 20; ++i) {
            const std::string id = "y" + std::to_string(i);
            separating.entries.push_back({id, 0.1 + 0.001 * i, false});
            random.entries.push_back({id, uniform_unit(rng), false});
        }
        const double p = compare_auc_paired(separating, random, 10000, 41);
        CHECK(p < 0.01);

        // independent bootstrap-style oracle: same statistic, its own rng and
        // resampling loop
        Rng orng = make_rng(90210);
        const double observed =
            std::abs(roc_auc(separating) - roc_auc(random));
        std::size_t hits = 0;
        const std::size_t resamples = 50000;
        ScoredSet pa = separating, pb = random;
        for (std::size_t rep = 0; rep < resamples; ++rep) {
            for (std::size_t i = 0; i < pa.entries.size(); ++i) {
                const bool swap = uniform_below(orng, 2) == 1;
                pa.entries[i].score =
                    swap ? random.entries[i].score : separating.entries[i].score;
                pb.entries[i].score =
                    swap ? separating.entries[i].score : random.entries[i].score;
            }
            if (std::abs(roc_auc(pa) - roc_auc(pb)) >= observed) ++hits;
        }
        const double oracle_p =
            static_cast<double>(1 + hits) / static_cast<double>(1 + resamples);
        CHECK_THAT(p, WithinAbs(oracle_p, 0.02));
    }
    SECTION("argument order does not matter") {
        Rng rng = make_rng(4242);
        ScoredSet a, b;
        for (int i = 0; i < 15; ++i) {
            const std::string id = "i" + std::to_string(i);
            const bool is_error = i < 7;
            a.entries.push_back({id, uniform_unit(rng), is_error});
            b.entries.push_back({id, uniform_unit(rng), is_error});
        }
        CHECK(compare_auc_paired(a, b, 2000, 9) == compare_auc_paired(b, a, 2000, 9));
    }
    SECTION("seeded runs are reproducible and p lies in (0, 1]") {
        Rng rng = make_rng(77);
        ScoredSet a, b;
        for (int i = 0; i < 12; ++i) {
            const std::string id = "i" + std::to_string(i);
            const bool is_error = i % 2 == 0;
            a.entries.push_back({id, uniform_unit(rng), is_error});
            b.entries.push_back({id, uniform_unit(rng), is_error});
        }
        const double p1 = compare_auc_paired(a, b, 1500, 123);
        const double p2 = compare_auc_paired(a, b, 1500, 123);
        CHECK(p1 == p2);
        CHECK(p1 > 0.0);
        CHECK(p1 <= 1.0);
    }
    SECTION("mismatched ids or labels are rejected") {
        ScoredSet a = make_set({0.9}, {0.1});
        ScoredSet b = a;
        b.entries[0].id = "other";
        CHECK_THROWS_AS(compare_auc_paired(a, b, 1000, 1), ValidationError);
        ScoredSet c = a;
        c.entries[0].is_error = false;
        c.entries[1].is_error = true;
        CHECK_THROWS_AS(compare_auc_paired(a, c, 1000, 1), ValidationError);
    }
}

TEST_CASE("bonferroni correction", "[stats]") {
    CHECK(bonferroni({0.01, 0.2}) == std::vector<double>{0.02, 0.4});
    CHECK(bonferroni({0.9}) == std::vector<double>{0.9});
    CHECK(bonferroni({0.6, 0.6}) == std::vector<double>{1.0, 1.0});
    CHECK(bonferroni({}).empty());
    CHECK_THROWS_AS(bonferroni({1.5}), ValidationError);
}

namespace {

RatingsMatrix matrix_from(const std::vector<std::vector<const char*>>& rows) {
    RatingsMatrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const char* v : rows[r])
            m[r].push_back(v ? std::optional<std::string>(v) : std::nullopt);
    return m;
}

}  // namespace

TEST_CASE("krippendorff alpha", "[stats][alpha]") {
    SECTION("perfect agreement across five raters is exactly 1") {
        RatingsMatrix m(5, std::vector<std::optional<std::string>>(8));
        for (auto& row : m)
            for (std::size_t i = 0; i < row.size(); ++i)
                row[i] = (i % 2 == 0) ? "yes" : "no";
        CHECK(krippendorff_alpha(m) == 1.0);
    }
    SECTION("hand-computed 3-rater 4-item table gives 1/3") {
        // items: (a,a,a), (a,b,b), (b,b,-), (a,a,b)
        const RatingsMatrix m = matrix_from({
            {"a", "a", "b", "a"},
            {"a", "b", "b", "a"},
            {"a", "b", nullptr, "b"},
        });
        CHECK_THAT(krippendorff_alpha(m), WithinAbs(1.0 / 3.0, 1e-12));
        CHECK_THAT(oracles::alpha_oracle(m), WithinAbs(1.0 / 3.0, 1e-12));
    }
    SECTION("independent uniform ratings hover near zero") {
        Rng rng = make_rng(6021);
        RatingsMatrix m(4, std::vector<std::optional<std::string>>(4000));
        for (auto& row : m)
            for (auto& cell : row) cell = uniform_below(rng, 2) ? "yes" : "no";
        CHECK_THAT(krippendorff_alpha(m), WithinAbs(0.0, 0.05));
    }
    SECTION("matches the brute-force oracle on random tables with missing cells") {
        Rng rng = make_rng(91);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t items = 4 + uniform_below(rng, 12);
            RatingsMatrix m(5, std::vector<std::optional<std::string>>(items));
            for (auto& row : m)
                for (auto& cell : row)
                    if (uniform_below(rng, 5) != 0)  // ~20% missing
                        cell = uniform_below(rng, 2) ? "yes" : "no";
            double expected;
            try {
                expected = oracles::alpha_oracle(m);
            } catch (...) {
                continue;
            }
            if (std::isnan(expected)) continue;
            CHECK_THAT(krippendorff_alpha(m), WithinAbs(expected, 1e-12));
        }
    }
    SECTION("an all-missing rater row changes nothing") {
        RatingsMatrix m = matrix_from({
            {"a", "b", "a", "a"},
            {"a", "b", "b", "a"},
            {"b", "b", "a", "a"},
        });
        const double base = krippendorff_alpha(m);
        m.push_back(std::vector<std::optional<std::string>>(4));
        CHECK(krippendorff_alpha(m) == base);
    }
    SECTION("fewer than two pairable ratings is an error") {
        CHECK_THROWS_AS(krippendorff_alpha(matrix_from({{"a", nullptr}, {nullptr, "b"}})),
                        ValidationError);
        CHECK_THROWS_AS(krippendorff_alpha({}), ValidationError);
    }
}

TEST_CASE("majority vote agreement", "[stats][agreement]") {
    SECTION("unanimous raters match gold everywhere") {
        const RatingsMatrix m = matrix_from({
            {"yes", "no", "yes"},
            {"yes", "no", "yes"},
            {"yes", "no", "yes"},
        });
        CHECK(majority_vote_agreement(m, {"yes", "no", "yes"}) == 1.0);
    }
    SECTION("nine of ten items match") {
        RatingsMatrix m(3, std::vector<std::optional<std::string>>(10));
        std::vector<std::string> gold(10, "yes");
        for (std::size_t i = 0; i < 10; ++i) {
            const bool flip = i == 4;  // one item where the majority says no
            m[0][i] = flip ? "no" : "yes";
            m[1][i] = flip ? "no" : "yes";
            m[2][i] = "yes";
        }
        CHECK_THAT(majority_vote_agreement(m, gold), WithinAbs(0.9, 1e-12));
    }
    SECTION("a tie counts as disagreement") {
        const RatingsMatrix m = matrix_from({{"yes"}, {"no"}});
        CHECK(majority_vote_agreement(m, {"yes"}) == 0.0);
    }
    SECTION("an unrated item is an error") {
        const RatingsMatrix m = matrix_from({{"yes", nullptr}, {"yes", nullptr}});
        CHECK_THROWS_AS(majority_vote_agreement(m, {"yes", "yes"}), ValidationError);
    }
}

TEST_CASE("reports serialize to JSON and CSV", "[stats][report]") {
    EvalReport report;
    report.results.push_back({"rouge", EvalSliceKind::UnparaphrasedSynthetic,
                              ErrorType::Hallucination, 0.975, 0.011, 40, 60});
    report.results.push_back({"salience", EvalSliceKind::UnparaphrasedSynthetic,
                              ErrorType::Hallucination, 0.91, 0.021, 40, 60});
    report.comparisons.push_back({"rouge", "salience", EvalSliceKind::UnparaphrasedSynthetic,
                                  ErrorType::Hallucination, 0.004, 0.008});
    report.agreement.emplace("hallucination", AgreementStats{0.6, 0.9, 10, 274});

    const json j = report_to_json(report);
    const EvalReport back = report_from_json(j);
    REQUIRE(back.results.size() == 2);
    CHECK(back.results[0].method == "rouge");
    CHECK(back.results[0].auc == 0.975);
    REQUIRE(back.comparisons.size() == 1);
    CHECK(back.comparisons[0].p_bonferroni == 0.008);
    CHECK(j.at("agreement").at("hallucination").at("alpha") == 0.6);

    const std::string csv = report_to_csv(report);
    CHECK(csv.find("slice,error_type,method,auc,std_error,n_pos,n_neg") == 0);
    CHECK(csv.find("unparaphrased-synthetic,hallucination,rouge,0.975000,0.011000,40,60") !=
          std::string::npos);
}
