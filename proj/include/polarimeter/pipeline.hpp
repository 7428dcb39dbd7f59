#pragma once

#include <cstddef>
#include <string>

#include "polarimeter/config.hpp"
#include "polarimeter/corpus.hpp"
#include "polarimeter/sentiment.hpp"

namespace polarimeter {

// Fully resolved settings for a run: defaults, overridden by the config file,
// overridden by explicit command-line values (the CLI applies those by
// calling Config::set before from_config).
struct RunConfig {
    std::string members_path;
    std::string tweets_path;
    std::string lexicon_path = "data/vader_lexicon.txt";
    std::string topics_path = "data/topics.toml";
    std::string contractions_path;  // empty: use the built-in table
    std::string stopwords_path;     // empty: use the built-in list
    std::string output_dir = "out";

    std::string window_start = std::string(kDefaultWindowStart);
    std::string window_end = std::string(kDefaultWindowEnd);

    int k = 5;
    double tol = 1e-9;
    int max_iter = 200;

    int ngrams_top = 50;
    int threads = 1;

    RuleConstants constants;

    bool score_raw = false;         // score original text instead of cleaned
    bool drop_mentions = false;     // remove @mentions whole during cleaning
    bool no_stopwords = false;      // keep stopwords in phrase tables
    bool include_centrist = false;  // add Centrist comparisons to the tests
    bool welch = false;             // unequal-variance tests (sensitivity)

    static RunConfig from_config(const Config& config);
};

struct IngestCounts {
    std::size_t members = 0;
    std::size_t tweets_input = 0;
    std::size_t retained = 0;
    std::size_t dropped_unknown = 0;
    std::size_t dropped_window = 0;
};

// Stage entry points. Each reads its declared inputs (raw data or the prior
// stage's file in output_dir), writes its outputs into output_dir, and is
// byte-deterministic given identical inputs and config.
//
//   ingest    members.csv + tweets.csv          -> corpus.csv
//   prep      corpus.csv                        -> clean.csv
//   sentiment clean.csv (corpus.csv when raw)   -> sentiments.csv
//   ngrams    clean.csv                         -> ngrams_n{n}.csv
//   topics    clean.csv + topics config         -> assignments.csv
//   cluster   members.csv                       -> groups.csv
//   analyze   sentiments + assignments + groups -> descriptive.csv, ttests.csv
//   rank      ttests.csv                        -> ranking.csv
IngestCounts ingest_stage(const RunConfig& config);
void prep_stage(const RunConfig& config);
void sentiment_stage(const RunConfig& config);
void ngrams_stage(const RunConfig& config, int n);
void topics_stage(const RunConfig& config);
void cluster_stage(const RunConfig& config);
void analyze_stage(const RunConfig& config);
// Runs the pairwise tests directly from a descriptive-statistics table
// (columns topic,group,count,mean,median,std), bypassing the text stages.
void analyze_from_descriptive(const RunConfig& config,
                              const std::string& descriptive_path);
void rank_stage(const RunConfig& config);

// ingest through rank (ngrams for n = 1..4), then manifest.json and
// plotdata.json. Staged runs and this entry point produce identical files
// because this simply calls the stage functions in order.
void run_pipeline(const RunConfig& config);

}  // namespace polarimeter
