#include <catch2/catch_amalgamated.hpp>

#include "faithcheck/benchmark.hpp"
#include "faithcheck/cli.hpp"
#include "test_util.hpp"

#include <string>
#include <vector>

using namespace faithcheck;

namespace {

int run_cli(const std::vector<std::string>& args) { return cli::run(args); }

}  // namespace

TEST_CASE("argument validation exits with code 1", "[cli]") {
    CHECK(run_cli({}) == 1);
    CHECK(run_cli({"frobnicate"}) == 1);
    CHECK(run_cli({"detect", "--unknown-flag"}) == 1);
    CHECK(run_cli({"synth", "--kb", "x.json"}) == 1);  // missing required options
}

TEST_CASE("detect validates its method-specific flags", "[cli]") {
    testutil::TempDir dir;
    save_examples(build_demo_examples(demo_knowledge_base(), 1, 4), dir.file("ex.json"));
    SECTION("salience without a map directory") {
        CHECK(run_cli({"detect", "--method", "salience", "--in", dir.file("ex.json"), "--out",
                       dir.file("out.json")}) == 1);
    }
    SECTION("unknown method") {
        CHECK(run_cli({"detect", "--method", "bert", "--in", dir.file("ex.json"), "--out",
                       dir.file("out.json")}) == 1);
    }
    SECTION("classifier without a scorer url") {
        ::unsetenv("FAITHCHECK_SCORER_URL");
        CHECK(run_cli({"detect", "--method", "classifier", "--in", dir.file("ex.json"), "--out",
                       dir.file("out.json")}) == 1);
    }
    SECTION("word-level with classifier") {
        CHECK(run_cli({"detect", "--method", "classifier", "--scorer-url", "mock", "--word-level",
                       "--in", dir.file("ex.json"), "--out", dir.file("out.json")}) == 1);
    }
}

TEST_CASE("missing or malformed inputs use the right exit codes", "[cli]") {
    testutil::TempDir dir;
    SECTION("missing input file is an I/O error") {
        CHECK(run_cli({"detect", "--method", "rouge", "--in", dir.file("absent.json"), "--out",
                       dir.file("out.json")}) == 2);
    }
    SECTION("malformed JSON is a validation error") {
        testutil::write_file(dir.file("broken.json"), "[{]");
        CHECK(run_cli({"detect", "--method", "rouge", "--in", dir.file("broken.json"), "--out",
                       dir.file("out.json")}) == 1);
    }
}

TEST_CASE("synth, detect, slice and eval chain together", "[cli][pipeline]") {
    testutil::TempDir dir;
    const KnowledgeBase kb = demo_knowledge_base();
    save_knowledge_base(kb, dir.file("kb.json"));
    save_examples(build_demo_examples(kb, 2, 8), dir.file("clean.json"));

    REQUIRE(run_cli({"synth", "--kb", dir.file("kb.json"), "--in", dir.file("clean.json"),
                     "--seed", "21", "--out", dir.file("synthetic.json")}) == 0);
    const auto synthetic = load_examples(dir.file("synthetic.json"));
    CHECK(synthetic.size() >= 24);

    // pool clean + synthetic into one corpus for detection and slicing
    auto all = load_examples(dir.file("clean.json"));
    all.insert(all.end(), synthetic.begin(), synthetic.end());
    save_examples(all, dir.file("all.json"));

    REQUIRE(run_cli({"detect", "--method", "rouge", "--in", dir.file("all.json"), "--kb",
                     dir.file("kb.json"), "--out", dir.file("rouge.json"), "--word-level"}) == 0);
    const auto scores = cli::load_scores(dir.file("rouge.json"));
    CHECK(scores.size() == all.size());
    CHECK(scores.front().word_scores.has_value());

    REQUIRE(run_cli({"slice", "--in", dir.file("clean.json"), "--in", dir.file("synthetic.json"),
                     "--kind", "unparaphrased-synthetic", "--error-type", "coverage", "--out",
                     dir.file("slice.json")}) == 0);
    const EvalSlice slice = load_slice(dir.file("slice.json"));
    CHECK(slice.positives.size() == 24);
    CHECK_FALSE(slice.negatives.empty());

    REQUIRE(run_cli({"eval", "--scores", dir.file("rouge.json"), "--slice", dir.file("slice.json"),
                     "--n-perm", "1000", "--seed", "5", "--out", dir.file("report.json")}) == 0);
    const EvalReport report = report_from_json(read_json_file(dir.file("report.json")));
    REQUIRE(report.results.size() == 1);
    CHECK(report.results[0].method == "rouge");
    CHECK(report.results[0].auc > 0.9);
    CHECK(report.comparisons.empty());  // single method, nothing to compare
    CHECK(std::filesystem::exists(dir.file("report.csv")));

    SECTION("the chain is byte-reproducible") {
        REQUIRE(run_cli({"synth", "--kb", dir.file("kb.json"), "--in", dir.file("clean.json"),
                         "--seed", "21", "--out", dir.file("synthetic2.json")}) == 0);
        CHECK(testutil::read_file(dir.file("synthetic.json")) ==
              testutil::read_file(dir.file("synthetic2.json")));
        REQUIRE(run_cli({"detect", "--method", "rouge", "--in", dir.file("all.json"), "--kb",
                         dir.file("kb.json"), "--out", dir.file("rouge2.json"), "--word-level",
                         "--jobs", "4"}) == 0);
        CHECK(testutil::read_file(dir.file("rouge.json")) ==
              testutil::read_file(dir.file("rouge2.json")));
    }
}

TEST_CASE("classifier detection with the mock scorer", "[cli]") {
    testutil::TempDir dir;
    save_examples(build_demo_examples(demo_knowledge_base(), 1, 3), dir.file("ex.json"));
    REQUIRE(run_cli({"detect", "--method", "classifier", "--scorer-url", "mock", "--in",
                     dir.file("ex.json"), "--out", dir.file("cls.json")}) == 0);
    const auto scores = cli::load_scores(dir.file("cls.json"));
    CHECK(scores.size() == 12);
    for (const auto& r : scores) {
        CHECK(r.hallucination >= 0.0);
        CHECK(r.hallucination <= 1.0);
        CHECK(r.coverage >= 0.0);
        CHECK(r.coverage <= 1.0);
        CHECK_FALSE(r.word_scores.has_value());
    }
    SECTION("mock runs are deterministic") {
        REQUIRE(run_cli({"detect", "--method", "classifier", "--scorer-url", "mock", "--in",
                         dir.file("ex.json"), "--out", dir.file("cls2.json"), "--concurrency",
                         "8"}) == 0);
        CHECK(testutil::read_file(dir.file("cls.json")) ==
              testutil::read_file(dir.file("cls2.json")));
    }
}

TEST_CASE("agreement subcommand computes alpha and majority agreement", "[cli]") {
    testutil::TempDir dir;
    testutil::write_file(dir.file("ratings.json"), R"({
      "hallucination": {
        "raters": ["r1", "r2", "r3"],
        "items": [
          {"id": "e1", "ratings": ["yes", "yes", "yes"]},
          {"id": "e2", "ratings": ["no", "no", "yes"]},
          {"id": "e3", "ratings": ["no", null, "no"]}
        ]
      }
    })");
    testutil::write_file(dir.file("gold.json"), R"({
      "hallucination": {"e1": "yes", "e2": "no", "e3": "no"}
    })");
    REQUIRE(run_cli({"agreement", "--ratings", dir.file("ratings.json"), "--gold",
                     dir.file("gold.json"), "--out", dir.file("agree.json")}) == 0);
    const json report = read_json_file(dir.file("agree.json"));
    REQUIRE(report.contains("agreement"));
    const auto& h = report.at("agreement").at("hallucination");
    CHECK(h.at("n_raters") == 3);
    CHECK(h.at("n_items") == 3);
    CHECK(h.at("alpha").get<double>() > 0.0);
    CHECK(h.at("majority_vote_agreement").get<double>() == 1.0);

    SECTION("missing gold labels are named") {
        testutil::write_file(dir.file("gold_short.json"), R"({"hallucination": {"e1": "yes"}})");
        CHECK(run_cli({"agreement", "--ratings", dir.file("ratings.json"), "--gold",
                       dir.file("gold_short.json"), "--out", dir.file("agree2.json")}) == 1);
    }
    SECTION("ratings without either task are rejected") {
        testutil::write_file(dir.file("empty.json"), "{}");
        CHECK(run_cli({"agreement", "--ratings", dir.file("empty.json"), "--out",
                       dir.file("agree3.json")}) == 1);
    }
}
