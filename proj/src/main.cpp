#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "polarimeter/config.hpp"
#include "polarimeter/pipeline.hpp"
#include "polarimeter/util.hpp"

namespace {

using polarimeter::Config;
using polarimeter::RunConfig;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitStage = 2;

// A command-line value destined for a config key; applied after the config
// file loads so explicit flags always win.
struct Override {
    std::string key;
    std::string value;
};

// Registers --flag on cmd; when the user passes it, the capture records the
// value under the given config key.
void add_string_flag(CLI::App* cmd, std::vector<Override>& overrides,
                     const std::string& flag, const std::string& key,
                     const std::string& help) {
    cmd->add_option_function<std::string>(
        flag,
        [&overrides, key](const std::string& value) {
            overrides.push_back({key, value});
        },
        help);
}

void add_bool_flag(CLI::App* cmd, std::vector<Override>& overrides,
                   const std::string& flag, const std::string& key,
                   const std::string& help) {
    cmd->add_flag_callback(
        flag, [&overrides, key] { overrides.push_back({key, "true"}); }, help);
}

void add_common_output_flags(CLI::App* cmd, std::vector<Override>& overrides) {
    add_string_flag(cmd, overrides, "--out", "paths.output_dir",
                    "Output directory (default: out)");
}

void add_ingest_flags(CLI::App* cmd, std::vector<Override>& overrides) {
    add_string_flag(cmd, overrides, "--members", "paths.members",
                    "Member roster CSV (name,handle,party,govtrack_score)");
    add_string_flag(cmd, overrides, "--tweets", "paths.tweets",
                    "Tweet corpus CSV (handle,date,text,retweets,likes)");
    add_string_flag(cmd, overrides, "--window-start", "window.start",
                    "Earliest date kept, inclusive (YYYY-MM-DD)");
    add_string_flag(cmd, overrides, "--window-end", "window.end",
                    "Latest date kept, inclusive (YYYY-MM-DD)");
}

void add_prep_flags(CLI::App* cmd, std::vector<Override>& overrides) {
    add_string_flag(cmd, overrides, "--contractions", "paths.contractions",
                    "Contraction table CSV (default: built-in)");
    add_bool_flag(cmd, overrides, "--drop-mentions", "flags.drop_mentions",
                  "Remove @mentions entirely instead of keeping the word");
}

void add_sentiment_flags(CLI::App* cmd, std::vector<Override>& overrides) {
    add_string_flag(cmd, overrides, "--lexicon", "paths.lexicon",
                    "Sentiment lexicon (token<TAB>valence per line)");
    add_bool_flag(cmd, overrides, "--score-raw", "flags.score_raw",
                  "Score the original text instead of the cleaned text");
    add_string_flag(cmd, overrides, "--threads", "run.threads",
                    "Worker threads for scoring (default: 1)");
}

void add_ngram_flags(CLI::App* cmd, std::vector<Override>& overrides) {
    add_string_flag(cmd, overrides, "--top", "ngrams.top",
                    "Number of phrases to keep (default: 50)");
    add_string_flag(cmd, overrides, "--stopwords", "paths.stopwords",
                    "Stopword list, one word per line (default: built-in)");
    add_bool_flag(cmd, overrides, "--no-stopwords", "flags.no_stopwords",
                  "Keep stopwords in phrase tables");
}

void add_cluster_flags(CLI::App* cmd, std::vector<Override>& overrides) {
    add_string_flag(cmd, overrides, "--k", "cluster.k",
                    "Number of ideological groups (default: 5)");
    add_string_flag(cmd, overrides, "--tol", "cluster.tol",
                    "Convergence tolerance (default: 1e-9)");
    add_string_flag(cmd, overrides, "--max-iter", "cluster.max_iter",
                    "Iteration cap (default: 200)");
}

void add_analyze_flags(CLI::App* cmd, std::vector<Override>& overrides) {
    add_bool_flag(cmd, overrides, "--welch", "flags.welch",
                  "Unequal-variance t-tests (sensitivity analysis)");
    add_bool_flag(cmd, overrides, "--include-centrist",
                  "flags.include_centrist",
                  "Also test each group against the Centrist cluster");
}

int run_stage(const std::string& stage, const std::function<void()>& body) {
    try {
        body();
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "polarimeter: " << stage << ": " << e.what() << "\n";
        return kExitStage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "polarimeter: measures political polarization in a tweet corpus via "
        "sentiment analysis"};
    app.require_subcommand(1);

    std::optional<std::string> config_path;
    app.add_option("--config", config_path,
                   "Config file (key = value lines; POLARIMETER_CONFIG is the "
                   "fallback)");
    std::vector<std::string> set_pairs;
    app.add_option("--set", set_pairs,
                   "Override any config key, e.g. --set cluster.k=4")
        ->take_all();

    std::vector<Override> overrides;

    CLI::App* ingest = app.add_subcommand(
        "ingest", "Join tweets to the roster and apply the date window");
    add_ingest_flags(ingest, overrides);
    add_common_output_flags(ingest, overrides);

    CLI::App* prep =
        app.add_subcommand("prep", "Normalize tweet text for analysis");
    add_prep_flags(prep, overrides);
    add_common_output_flags(prep, overrides);

    CLI::App* sentiment =
        app.add_subcommand("sentiment", "Score tweets with the rule engine");
    add_sentiment_flags(sentiment, overrides);
    add_common_output_flags(sentiment, overrides);

    CLI::App* ngrams =
        app.add_subcommand("ngrams", "Tabulate frequent phrases");
    int ngram_n = 1;
    ngrams->add_option("--n", ngram_n, "Phrase length in words (1-4)")
        ->required()
        ->check(CLI::Range(1, 4));
    add_ngram_flags(ngrams, overrides);
    add_common_output_flags(ngrams, overrides);

    CLI::App* topics =
        app.add_subcommand("topics", "Assign tweets to policy topics");
    add_string_flag(topics, overrides, "--config", "paths.topics",
                    "Topic phrase config (default: data/topics.toml)");
    add_common_output_flags(topics, overrides);

    CLI::App* cluster = app.add_subcommand(
        "cluster", "Group members by ideology score (1-D k-means)");
    add_cluster_flags(cluster, overrides);
    add_common_output_flags(cluster, overrides);

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Descriptive statistics and pairwise t-tests");
    std::string from_descriptive;
    analyze->add_option(
        "--from-descriptive", from_descriptive,
        "Run the tests from an existing descriptive-statistics CSV "
        "(topic,group,count,mean,median,std) instead of scored tweets");
    add_string_flag(analyze, overrides, "--topics", "paths.topics",
                    "Topic phrase config, used for topic order");
    add_analyze_flags(analyze, overrides);
    add_common_output_flags(analyze, overrides);

    CLI::App* rank = app.add_subcommand(
        "rank", "Order topics by how many group pairs differ significantly");
    add_common_output_flags(rank, overrides);

    CLI::App* run =
        app.add_subcommand("run", "Full pipeline: ingest through rank");
    add_ingest_flags(run, overrides);
    add_prep_flags(run, overrides);
    add_sentiment_flags(run, overrides);
    add_ngram_flags(run, overrides);
    add_string_flag(run, overrides, "--topics", "paths.topics",
                    "Topic phrase config (default: data/topics.toml)");
    add_cluster_flags(run, overrides);
    add_analyze_flags(run, overrides);
    add_common_output_flags(run, overrides);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "polarimeter: " << e.what() << "\n";
        return kExitUsage;
    }

    Config cfg;
    try {
        cfg = Config::resolve(config_path);
    } catch (const std::exception& e) {
        std::cerr << "polarimeter: config: " << e.what() << "\n";
        return kExitStage;
    }

    // --set pairs and dedicated flags are command-line input; problems with
    // them (bad key, missing '=') are usage errors.
    try {
        for (const std::string& pair : set_pairs) {
            const size_t eq = pair.find('=');
            if (eq == std::string::npos) {
                throw polarimeter::Error("--set needs key=value, got '" + pair +
                                         "'");
            }
            cfg.set(polarimeter::trim(pair.substr(0, eq)),
                    polarimeter::trim(pair.substr(eq + 1)));
        }
        for (const Override& o : overrides) {
            cfg.set(o.key, o.value);
        }
    } catch (const std::exception& e) {
        std::cerr << "polarimeter: " << e.what() << "\n";
        return kExitUsage;
    }

    RunConfig rc;
    try {
        rc = RunConfig::from_config(cfg);
    } catch (const std::exception& e) {
        std::cerr << "polarimeter: config: " << e.what() << "\n";
        return kExitStage;
    }

    if (ingest->parsed()) {
        return run_stage("ingest", [&] { polarimeter::ingest_stage(rc); });
    }
    if (prep->parsed()) {
        return run_stage("prep", [&] { polarimeter::prep_stage(rc); });
    }
    if (sentiment->parsed()) {
        return run_stage("sentiment",
                         [&] { polarimeter::sentiment_stage(rc); });
    }
    if (ngrams->parsed()) {
        return run_stage("ngrams",
                         [&] { polarimeter::ngrams_stage(rc, ngram_n); });
    }
    if (topics->parsed()) {
        return run_stage("topics", [&] { polarimeter::topics_stage(rc); });
    }
    if (cluster->parsed()) {
        return run_stage("cluster", [&] { polarimeter::cluster_stage(rc); });
    }
    if (analyze->parsed()) {
        return run_stage("analyze", [&] {
            if (from_descriptive.empty()) {
                polarimeter::analyze_stage(rc);
            } else {
                polarimeter::analyze_from_descriptive(rc, from_descriptive);
            }
        });
    }
    if (rank->parsed()) {
        return run_stage("rank", [&] { polarimeter::rank_stage(rc); });
    }
    if (run->parsed()) {
        return run_stage("run", [&] { polarimeter::run_pipeline(rc); });
    }
    std::cerr << "polarimeter: no subcommand\n";
    return kExitUsage;
}
