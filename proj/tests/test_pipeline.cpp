#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "polarimeter/csv.hpp"
#include "polarimeter/pipeline.hpp"
#include "polarimeter/sha256.hpp"
#include "polarimeter/util.hpp"
#include "scratch.hpp"

using namespace polarimeter;

namespace {

RunConfig smoke_config(const std::string& out_dir) {
    RunConfig cfg;
    cfg.members_path = "tests/fixtures/smoke/members.csv";
    cfg.tweets_path = "tests/fixtures/smoke/tweets.csv";
    cfg.output_dir = out_dir;
    return cfg;
}

const std::vector<std::string> kRunOutputs = {
    "corpus.csv",     "clean.csv",     "sentiments.csv", "ngrams_n1.csv",
    "ngrams_n2.csv",  "ngrams_n3.csv", "ngrams_n4.csv",  "assignments.csv",
    "groups.csv",     "descriptive.csv", "ttests.csv",   "ranking.csv",
};

int run_binary(const std::string& args) {
#ifndef POLARIMETER_BIN
#error "POLARIMETER_BIN must point at the built command line binary"
#endif
    const std::string cmd =
        std::string(POLARIMETER_BIN) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return (status >> 8) & 0xff;  // POSIX wait status to exit code
}

}  // namespace

TEST_CASE("full run reconciles every count in the manifest") {
    const std::string dir = scratch_dir("pipeline_smoke");
    run_pipeline(smoke_config(dir));

    const nlohmann::json manifest =
        nlohmann::json::parse(read_file(dir + "/manifest.json"));
    const nlohmann::json& counts = manifest.at("counts");
    CHECK(counts.at("members") == 6);
    CHECK(counts.at("tweets_input") == 20);
    CHECK(counts.at("tweets_retained") == 16);
    CHECK(counts.at("tweets_dropped_unknown") == 2);
    CHECK(counts.at("tweets_dropped_window") == 2);
    CHECK(counts.at("tests_computed") == 6);
    CHECK(counts.at("tests_skipped") == 66);

    const nlohmann::json& by_topic = counts.at("assignments_by_topic");
    CHECK(by_topic.size() == 12);  // zero-count topics stay visible
    CHECK(by_topic.at("Gun Control") == 9);
    CHECK(by_topic.at("Climate Change") == 3);
    CHECK(by_topic.at("Fossil Fuels") == 1);
    CHECK(by_topic.at("Immigration and Border Control") == 1);
    CHECK(by_topic.at("Substance Abuse and Mental Health") == 1);
    CHECK(by_topic.at("Abortion") == 0);
    CHECK(by_topic.at("Taiwan") == 0);

    const nlohmann::json& by_group = counts.at("members_by_group");
    CHECK(by_group.at("Far Left") == 2);
    CHECK(by_group.at("Left Centrist") == 1);
    CHECK(by_group.at("Centrist") == 1);
    CHECK(by_group.at("Right Centrist") == 1);
    CHECK(by_group.at("Far Right") == 1);

    // The thread count must never appear: outputs cannot depend on it.
    CHECK_FALSE(manifest.at("config").contains("run.threads"));
    const std::string digest =
        manifest.at("inputs").at("members").at("sha256").get<std::string>();
    CHECK(digest.size() == 64);
    CHECK(digest == sha256_hex(read_file("tests/fixtures/smoke/members.csv")));

    // Cross-check the manifest against the files it describes.
    const CsvTable ttests =
        read_csv_file(dir + "/ttests.csv",
                      {"topic", "pair", "df", "t", "p", "stratum"});
    CHECK(ttests.rows.size() == 72);
    std::size_t skipped = 0;
    for (const auto& row : ttests.rows) {
        if (row[5] == "skipped") {
            ++skipped;
            CHECK(row[2].empty());
            CHECK(row[3].empty());
            CHECK(row[4].empty());
        } else {
            CHECK(row[0] == "Gun Control");
            CHECK(row[2] == "2");  // two samples per side
        }
    }
    CHECK(skipped == 66);

    const CsvTable groups = read_csv_file(
        dir + "/groups.csv", {"handle", "score", "cluster", "label"});
    REQUIRE(groups.rows.size() == 6);
    CHECK(groups.rows[0][0] == "@AliceFL");  // roster spelling is preserved
    CHECK(groups.rows[0][3] == "Far Left");
    CHECK(groups.rows[1][3] == "Far Left");
    CHECK(groups.rows[2][3] == "Left Centrist");
    CHECK(groups.rows[3][3] == "Centrist");
    CHECK(groups.rows[4][3] == "Right Centrist");
    CHECK(groups.rows[5][3] == "Far Right");

    const CsvTable ranking = read_csv_file(
        dir + "/ranking.csv",
        {"rank", "topic", "n_sig", "n_p001", "n_p01", "n_p05"});
    CHECK(ranking.rows.size() == 12);
    CHECK(ranking.rows[0][0] == "1");

    const CsvTable descriptive = read_csv_file(
        dir + "/descriptive.csv",
        {"topic", "group", "count", "mean", "median", "std"});
    std::size_t gun_cells = 0;
    for (const auto& row : descriptive.rows) {
        if (row[0] != "Gun Control") continue;
        ++gun_cells;
        if (row[1] == "Centrist") {
            CHECK(row[2] == "1");
        } else {
            CHECK(row[2] == "2");
        }
    }
    CHECK(gun_cells == 5);
}

TEST_CASE("running the stages separately matches the single run") {
    const std::string staged = scratch_dir("pipeline_staged");
    const std::string whole = scratch_dir("pipeline_whole");

    RunConfig a = smoke_config(staged);
    ingest_stage(a);
    prep_stage(a);
    sentiment_stage(a);
    for (int n = 1; n <= 4; ++n) ngrams_stage(a, n);
    topics_stage(a);
    cluster_stage(a);
    analyze_stage(a);
    rank_stage(a);

    run_pipeline(smoke_config(whole));

    for (const std::string& name : kRunOutputs) {
        CAPTURE(name);
        CHECK(read_file(staged + "/" + name) ==
              read_file(whole + "/" + name));
    }
}

TEST_CASE("outputs are byte-identical across thread counts") {
    const std::string one = scratch_dir("pipeline_threads1");
    const std::string many = scratch_dir("pipeline_threads8");
    RunConfig cfg_one = smoke_config(one);
    cfg_one.threads = 1;
    RunConfig cfg_many = smoke_config(many);
    cfg_many.threads = 8;
    run_pipeline(cfg_one);
    run_pipeline(cfg_many);
    for (const std::string& name : kRunOutputs) {
        CAPTURE(name);
        CHECK(read_file(one + "/" + name) == read_file(many + "/" + name));
    }
    CHECK(read_file(one + "/manifest.json") ==
          read_file(many + "/manifest.json"));
    CHECK(read_file(one + "/plotdata.json") ==
          read_file(many + "/plotdata.json"));
}

TEST_CASE("a corpus with no tweets still completes") {
    const std::string dir = scratch_dir("pipeline_empty");
    const std::string empty_tweets = dir + "/empty_tweets.csv";
    write_file(empty_tweets, "handle,date,text,retweets,likes\n");
    RunConfig cfg = smoke_config(dir);
    cfg.tweets_path = empty_tweets;
    run_pipeline(cfg);

    const nlohmann::json manifest =
        nlohmann::json::parse(read_file(dir + "/manifest.json"));
    CHECK(manifest.at("counts").at("tweets_retained") == 0);
    CHECK(manifest.at("counts").at("tests_computed") == 0);
    CHECK(manifest.at("counts").at("tests_skipped") == 72);
    const CsvTable descriptive = read_csv_file(
        dir + "/descriptive.csv",
        {"topic", "group", "count", "mean", "median", "std"});
    CHECK(descriptive.rows.empty());
    const CsvTable ranking = read_csv_file(
        dir + "/ranking.csv",
        {"rank", "topic", "n_sig", "n_p001", "n_p01", "n_p05"});
    REQUIRE(ranking.rows.size() == 12);
    CHECK(ranking.rows[0][1] == "Abortion");  // all-zero: alphabetical
    CHECK(ranking.rows[0][2] == "0");
}

TEST_CASE("failures inside a full run name the failing stage") {
    const std::string dir = scratch_dir("pipeline_badlex");
    RunConfig cfg = smoke_config(dir);
    cfg.lexicon_path = dir + "/missing_lexicon.txt";
    CHECK_THROWS_WITH_AS(run_pipeline(cfg), doctest::Contains("sentiment"),
                         Error);
    RunConfig notweets = smoke_config(scratch_dir("pipeline_badtweets"));
    notweets.tweets_path = "";
    CHECK_THROWS_WITH_AS(run_pipeline(notweets), doctest::Contains("ingest"),
                         Error);
}

TEST_CASE("command line reports usage, config, and stage errors apart") {
    CHECK(run_binary("") == 1);                  // no subcommand
    CHECK(run_binary("--help") == 0);
    CHECK(run_binary("run --help") == 0);
    CHECK(run_binary("--no-such-flag") == 1);
    CHECK(run_binary("ingest --members tests/fixtures/smoke/members.csv") ==
          2);  // tweets path missing is reported by the ingest stage
    const std::string dir = scratch_dir("pipeline_cli");
    CHECK(run_binary("ingest --members no_such_members.csv --tweets "
                     "tests/fixtures/smoke/tweets.csv --out " +
                     dir) == 2);
    CHECK(run_binary("ingest --members tests/fixtures/smoke/members.csv "
                     "--tweets tests/fixtures/smoke/tweets.csv --out " +
                     dir) == 0);
    const CsvTable corpus = read_csv_file(
        dir + "/corpus.csv",
        {"tweet_id", "handle", "date", "text", "retweets", "likes"});
    CHECK(corpus.rows.size() == 16);
    CHECK(run_binary("run --set no.such.key=1 --members x --tweets y") == 1);
}
