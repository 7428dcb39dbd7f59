#include "polarimeter/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "polarimeter/csv.hpp"
#include "polarimeter/grouping.hpp"
#include "polarimeter/ngrams.hpp"
#include "polarimeter/sha256.hpp"
#include "polarimeter/stats.hpp"
#include "polarimeter/textprep.hpp"
#include "polarimeter/topics.hpp"
#include "polarimeter/util.hpp"

namespace polarimeter {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

constexpr const char* kCorpusFile = "corpus.csv";
constexpr const char* kCleanFile = "clean.csv";
constexpr const char* kSentimentsFile = "sentiments.csv";
constexpr const char* kAssignmentsFile = "assignments.csv";
constexpr const char* kGroupsFile = "groups.csv";
constexpr const char* kDescriptiveFile = "descriptive.csv";
constexpr const char* kTtestsFile = "ttests.csv";
constexpr const char* kRankingFile = "ranking.csv";

std::string out_path(const RunConfig& config, const std::string& name) {
    return config.output_dir + "/" + name;
}

void ensure_outdir(const RunConfig& config) {
    try {
        std::filesystem::create_directories(config.output_dir);
    } catch (const std::filesystem::filesystem_error& e) {
        throw Error("cannot create output directory '" + config.output_dir +
                    "': " + e.what());
    }
}

void require_path(const std::string& path, const std::string& what,
                  const std::string& how) {
    if (path.empty()) {
        throw Error("no " + what + " file configured (set " + how + ")");
    }
}

// Rounds through the 6-significant-digit on-disk format so JSON numbers
// carry the same precision as the CSVs and serialize compactly.
double json_real(double v) {
    return parse_real(format_real(v), "internal");
}

ContractionTable resolve_contractions(const RunConfig& config) {
    if (config.contractions_path.empty()) return ContractionTable::builtin();
    return ContractionTable::load_csv(config.contractions_path);
}

// Runs fn(0..n-1) across the configured worker count. Results must be
// written to index-addressed slots, which keeps the output independent of
// scheduling and thread count.
void parallel_for_indexed(std::size_t n, int threads,
                          const std::function<void(std::size_t)>& fn) {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

struct GroupsView {
    std::unordered_map<std::string, std::string> label_by_handle;  // canonical
    std::vector<std::string> label_order;  // ascending cluster index
    std::map<std::string, std::size_t> sizes;
};

GroupsView read_groups(const RunConfig& config) {
    const CsvTable table = read_csv_file(
        out_path(config, kGroupsFile), {"handle", "score", "cluster", "label"});
    GroupsView view;
    std::map<long long, std::string> by_cluster;
    for (const auto& row : table.rows) {
        const long long cluster = parse_int(row[2], "cluster");
        auto [it, inserted] = by_cluster.emplace(cluster, row[3]);
        if (!inserted && it->second != row[3]) {
            throw Error("cluster " + row[2] + " maps to two labels ('" +
                        it->second + "' and '" + row[3] + "')");
        }
        view.label_by_handle[canonical_handle(row[0])] = row[3];
        ++view.sizes[row[3]];
    }
    for (auto& [cluster, label] : by_cluster) {
        view.label_order.push_back(label);
    }
    return view;
}

std::vector<std::string> topic_order_of(const RunConfig& config) {
    const std::vector<TopicSpec> specs = load_topics(config.topics_path);
    std::vector<std::string> order;
    order.reserve(specs.size());
    for (const TopicSpec& spec : specs) order.push_back(spec.name);
    return order;
}

void write_ttests_file(const RunConfig& config,
                       const std::vector<PairwiseTest>& tests) {
    std::string out;
    append_csv_row(out, {"topic", "pair", "df", "t", "p", "stratum"});
    for (const PairwiseTest& test : tests) {
        if (test.skipped) {
            append_csv_row(out, {test.topic, test.label, "", "", "", "skipped"});
            continue;
        }
        const std::string df = test.welch
                                   ? format_real(test.df)
                                   : std::to_string(std::llround(test.df));
        append_csv_row(out, {test.topic, test.label, df, format_real(test.t),
                             format_real(test.p), test.stratum});
    }
    write_file(out_path(config, kTtestsFile), out);
}

std::vector<PairwiseTest> tests_from_cells(
    const RunConfig& config, const StatsCells& cells,
    const std::vector<std::string>& topic_order) {
    const std::vector<PairSpec> pairs =
        config.include_centrist ? pairs_with_centrist() : table_pairs();
    return run_all_tests(cells, topic_order, pairs, config.welch);
}

}  // namespace

RunConfig RunConfig::from_config(const Config& config) {
    RunConfig rc;
    rc.members_path = config.get_string("paths.members", rc.members_path);
    rc.tweets_path = config.get_string("paths.tweets", rc.tweets_path);
    rc.lexicon_path = config.get_string("paths.lexicon", rc.lexicon_path);
    rc.topics_path = config.get_string("paths.topics", rc.topics_path);
    rc.contractions_path =
        config.get_string("paths.contractions", rc.contractions_path);
    rc.stopwords_path = config.get_string("paths.stopwords", rc.stopwords_path);
    rc.output_dir = config.get_string("paths.output_dir", rc.output_dir);

    rc.window_start = config.get_string("window.start", rc.window_start);
    rc.window_end = config.get_string("window.end", rc.window_end);

    rc.k = static_cast<int>(config.get_int("cluster.k", rc.k));
    rc.tol = config.get_real("cluster.tol", rc.tol);
    rc.max_iter = static_cast<int>(config.get_int("cluster.max_iter", rc.max_iter));

    rc.ngrams_top = static_cast<int>(config.get_int("ngrams.top", rc.ngrams_top));
    rc.threads = static_cast<int>(config.get_int("run.threads", rc.threads));

    rc.constants = RuleConstants::from_config(config);

    rc.score_raw = config.get_bool("flags.score_raw", rc.score_raw);
    rc.drop_mentions = config.get_bool("flags.drop_mentions", rc.drop_mentions);
    rc.no_stopwords = config.get_bool("flags.no_stopwords", rc.no_stopwords);
    rc.include_centrist =
        config.get_bool("flags.include_centrist", rc.include_centrist);
    rc.welch = config.get_bool("flags.welch", rc.welch);

    if (!valid_iso_date(rc.window_start)) {
        throw Error("invalid window.start '" + rc.window_start + "'");
    }
    if (!valid_iso_date(rc.window_end)) {
        throw Error("invalid window.end '" + rc.window_end + "'");
    }
    if (rc.window_start > rc.window_end) {
        throw Error("window.start " + rc.window_start + " is after window.end " +
                    rc.window_end);
    }
    if (rc.k < 1) throw Error("cluster.k must be at least 1");
    if (rc.max_iter < 1) throw Error("cluster.max_iter must be at least 1");
    if (!(rc.tol >= 0.0)) throw Error("cluster.tol must be non-negative");
    if (rc.ngrams_top < 1) throw Error("ngrams.top must be at least 1");
    if (rc.threads < 1) throw Error("run.threads must be at least 1");
    if (rc.output_dir.empty()) throw Error("paths.output_dir must not be empty");
    return rc;
}

IngestCounts ingest_stage(const RunConfig& config) {
    require_path(config.members_path, "members", "paths.members or --members");
    require_path(config.tweets_path, "tweets", "paths.tweets or --tweets");
    const std::vector<MemberRecord> members = load_members(config.members_path);
    const std::vector<TweetRecord> tweets = load_tweets(config.tweets_path);
    const Corpus corpus = join_corpus(members, tweets, config.window_start,
                                      config.window_end);

    ensure_outdir(config);
    std::string out;
    append_csv_row(out,
                   {"tweet_id", "handle", "date", "text", "retweets", "likes"});
    for (std::size_t i = 0; i < corpus.tweets.size(); ++i) {
        const JoinedTweet& jt = corpus.tweets[i];
        append_csv_row(out, {std::to_string(i),
                             corpus.members[jt.member_index].handle,
                             jt.tweet.date, jt.tweet.text,
                             std::to_string(jt.tweet.retweets),
                             std::to_string(jt.tweet.likes)});
    }
    write_file(out_path(config, kCorpusFile), out);

    IngestCounts counts;
    counts.members = corpus.members.size();
    counts.tweets_input = tweets.size();
    counts.retained = corpus.tweets.size();
    counts.dropped_unknown = corpus.dropped_unknown;
    counts.dropped_window = corpus.dropped_window;
    std::cout << "ingest: " << counts.members << " members, "
              << counts.tweets_input << " tweets in, " << counts.retained
              << " retained, " << counts.dropped_unknown
              << " unknown-author, " << counts.dropped_window
              << " outside window\n";
    return counts;
}

void prep_stage(const RunConfig& config) {
    const CsvTable corpus = read_csv_file(
        out_path(config, kCorpusFile),
        {"tweet_id", "handle", "date", "text", "retweets", "likes"});
    const ContractionTable table = resolve_contractions(config);
    const TextprepOptions options{config.drop_mentions};

    ensure_outdir(config);
    std::string out;
    append_csv_row(out, {"tweet_id", "text_clean"});
    for (const auto& row : corpus.rows) {
        append_csv_row(out, {row[0], normalize_text(row[3], table, options)});
    }
    write_file(out_path(config, kCleanFile), out);
    std::cout << "prep: " << corpus.rows.size() << " tweets cleaned\n";
}

void sentiment_stage(const RunConfig& config) {
    const Lexicon lexicon = load_lexicon(config.lexicon_path);

    std::vector<std::string> ids;
    std::vector<std::string> texts;
    if (config.score_raw) {
        const CsvTable corpus = read_csv_file(
            out_path(config, kCorpusFile),
            {"tweet_id", "handle", "date", "text", "retweets", "likes"});
        for (const auto& row : corpus.rows) {
            ids.push_back(row[0]);
            texts.push_back(row[3]);
        }
    } else {
        const CsvTable clean = read_csv_file(out_path(config, kCleanFile),
                                             {"tweet_id", "text_clean"});
        for (const auto& row : clean.rows) {
            ids.push_back(row[0]);
            texts.push_back(row[1]);
        }
    }

    std::vector<SentimentResult> results(texts.size());
    parallel_for_indexed(texts.size(), config.threads, [&](std::size_t i) {
        results[i] = score_text(texts[i], lexicon, config.constants);
    });

    ensure_outdir(config);
    std::string out;
    append_csv_row(out, {"tweet_id", "neg", "neu", "pos", "compound"});
    for (std::size_t i = 0; i < results.size(); ++i) {
        append_csv_row(out, {ids[i], format_real(results[i].neg),
                             format_real(results[i].neu),
                             format_real(results[i].pos),
                             format_real(results[i].compound)});
    }
    write_file(out_path(config, kSentimentsFile), out);
    std::cout << "sentiment: " << results.size() << " tweets scored"
              << (config.score_raw ? " (raw text)" : "") << "\n";
}

void ngrams_stage(const RunConfig& config, int n) {
    const CsvTable clean = read_csv_file(out_path(config, kCleanFile),
                                         {"tweet_id", "text_clean"});
    const std::set<std::string>* stopset = nullptr;
    std::set<std::string> loaded;
    if (!config.no_stopwords) {
        if (config.stopwords_path.empty()) {
            stopset = &default_stopwords();
        } else {
            loaded = load_stopwords(config.stopwords_path);
            stopset = &loaded;
        }
    }

    NgramTable table;
    table.n = n;
    for (const auto& row : clean.rows) {
        accumulate_ngrams(filter_tokens(tokens_of(row[1]), stopset), n, table);
    }
    const auto top = top_k(table, static_cast<std::size_t>(config.ngrams_top));

    ensure_outdir(config);
    std::string out;
    append_csv_row(out, {"phrase", "count"});
    for (const auto& [phrase, count] : top) {
        append_csv_row(out, {phrase, std::to_string(count)});
    }
    write_file(out_path(config, "ngrams_n" + std::to_string(n) + ".csv"), out);
    std::cout << "ngrams: n=" << n << ", " << table.counts.size()
              << " distinct phrases, wrote top " << top.size() << "\n";
}

void topics_stage(const RunConfig& config) {
    const std::vector<TopicSpec> specs = load_topics(config.topics_path);
    const CsvTable clean = read_csv_file(out_path(config, kCleanFile),
                                         {"tweet_id", "text_clean"});

    ensure_outdir(config);
    std::string out;
    append_csv_row(out, {"tweet_id", "topic"});
    std::size_t assignments = 0;
    std::set<std::string> matched_topics;
    for (const auto& row : clean.rows) {
        for (const std::string& topic :
             assign_topics(tokens_of(row[1]), specs)) {
            append_csv_row(out, {row[0], topic});
            ++assignments;
            matched_topics.insert(topic);
        }
    }
    write_file(out_path(config, kAssignmentsFile), out);
    std::cout << "topics: " << assignments << " assignments across "
              << matched_topics.size() << " of " << specs.size()
              << " topics\n";
}

void cluster_stage(const RunConfig& config) {
    require_path(config.members_path, "members", "paths.members or --members");
    const std::vector<MemberRecord> members = load_members(config.members_path);
    if (members.empty()) throw Error("no members to cluster");

    std::vector<double> scores;
    scores.reserve(members.size());
    for (const MemberRecord& m : members) scores.push_back(m.govtrack_score);

    const ClusterModel model =
        kmeans_1d(scores, config.k, config.max_iter, config.tol);
    const std::vector<std::string> labels = group_labels(config.k);

    ensure_outdir(config);
    std::string out;
    append_csv_row(out, {"handle", "score", "cluster", "label"});
    std::vector<std::size_t> sizes(labels.size(), 0);
    for (const MemberRecord& m : members) {
        const std::size_t cluster = assign_cluster(m.govtrack_score, model);
        ++sizes[cluster];
        append_csv_row(out, {m.handle, format_real(m.govtrack_score),
                             std::to_string(cluster), labels[cluster]});
    }
    write_file(out_path(config, kGroupsFile), out);

    std::cout << "cluster: k=" << config.k;
    for (std::size_t c = 0; c < labels.size(); ++c) {
        std::cout << (c == 0 ? " sizes " : ", ") << labels[c] << "=" << sizes[c];
    }
    std::cout << "\n";
}

void analyze_stage(const RunConfig& config) {
    const std::vector<std::string> topic_order = topic_order_of(config);
    const GroupsView groups = read_groups(config);

    const CsvTable corpus = read_csv_file(
        out_path(config, kCorpusFile),
        {"tweet_id", "handle", "date", "text", "retweets", "likes"});
    std::unordered_map<std::string, std::string> handle_by_tweet;
    handle_by_tweet.reserve(corpus.rows.size());
    for (const auto& row : corpus.rows) handle_by_tweet[row[0]] = row[1];

    const CsvTable sentiments = read_csv_file(
        out_path(config, kSentimentsFile),
        {"tweet_id", "neg", "neu", "pos", "compound"});
    std::unordered_map<std::string, double> compound_by_tweet;
    compound_by_tweet.reserve(sentiments.rows.size());
    for (const auto& row : sentiments.rows) {
        compound_by_tweet[row[0]] = parse_real(row[4], "compound");
    }

    const CsvTable assignments = read_csv_file(
        out_path(config, kAssignmentsFile), {"tweet_id", "topic"});

    std::map<StatsKey, std::vector<double>> samples;
    for (const auto& row : assignments.rows) {
        const std::string& tweet_id = row[0];
        const std::string& topic = row[1];
        const auto handle_it = handle_by_tweet.find(tweet_id);
        if (handle_it == handle_by_tweet.end()) {
            throw Error("assignments reference unknown tweet_id " + tweet_id);
        }
        const auto group_it =
            groups.label_by_handle.find(canonical_handle(handle_it->second));
        if (group_it == groups.label_by_handle.end()) {
            throw Error("no group for handle '" + handle_it->second +
                        "' (rerun the cluster stage?)");
        }
        const auto compound_it = compound_by_tweet.find(tweet_id);
        if (compound_it == compound_by_tweet.end()) {
            throw Error("no sentiment score for tweet_id " + tweet_id);
        }
        samples[{topic, group_it->second}].push_back(compound_it->second);
    }

    StatsCells cells;
    std::string desc;
    append_csv_row(desc, {"topic", "group", "count", "mean", "median", "std"});
    for (const std::string& topic : topic_order) {
        for (const std::string& group : groups.label_order) {
            const auto it = samples.find({topic, group});
            if (it == samples.end()) continue;
            const DescriptiveStats stats = describe(it->second);
            cells[{topic, group}] = stats;
            append_csv_row(desc, {topic, group, std::to_string(stats.count),
                                  format_real(stats.mean),
                                  format_real(stats.median),
                                  format_real(stats.std)});
        }
    }
    ensure_outdir(config);
    write_file(out_path(config, kDescriptiveFile), desc);

    const std::vector<PairwiseTest> tests =
        tests_from_cells(config, cells, topic_order);
    write_ttests_file(config, tests);

    std::size_t skipped = 0;
    for (const PairwiseTest& t : tests) skipped += t.skipped ? 1 : 0;
    std::cout << "analyze: " << (tests.size() - skipped) << " tests computed, "
              << skipped << " skipped\n";
}

void analyze_from_descriptive(const RunConfig& config,
                              const std::string& descriptive_path) {
    const CsvTable table = read_csv_file(
        descriptive_path, {"topic", "group", "count", "mean", "median", "std"});

    StatsCells cells;
    std::vector<std::string> topic_order;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const StatsKey key{row[0], row[1]};
        if (cells.count(key)) {
            throw Error(descriptive_path + ": data row " + std::to_string(r + 1) +
                        ": duplicate cell (" + row[0] + ", " + row[1] + ")");
        }
        DescriptiveStats stats;
        const long long count = parse_int(row[2], "count");
        if (count < 0) throw Error("negative count for (" + row[0] + ", " + row[1] + ")");
        stats.count = static_cast<std::size_t>(count);
        stats.mean = parse_real(row[3], "mean");
        stats.median = parse_real(row[4], "median");
        stats.std = parse_real(row[5], "std");
        stats.std_defined = stats.count > 1;
        cells.emplace(key, stats);
        if (std::find(topic_order.begin(), topic_order.end(), row[0]) ==
            topic_order.end()) {
            topic_order.push_back(row[0]);
        }
    }

    ensure_outdir(config);
    const std::vector<PairwiseTest> tests =
        tests_from_cells(config, cells, topic_order);
    write_ttests_file(config, tests);

    std::size_t skipped = 0;
    for (const PairwiseTest& t : tests) skipped += t.skipped ? 1 : 0;
    std::cout << "analyze: " << (tests.size() - skipped)
              << " tests computed from " << descriptive_path << ", " << skipped
              << " skipped\n";
}

void rank_stage(const RunConfig& config) {
    const CsvTable table = read_csv_file(
        out_path(config, kTtestsFile),
        {"topic", "pair", "df", "t", "p", "stratum"});

    std::vector<PairwiseTest> tests;
    tests.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        PairwiseTest test;
        test.topic = row[0];
        test.label = row[1];
        if (row[5] == "skipped" || row[4].empty()) {
            test.skipped = true;
            test.stratum = "skipped";
        } else {
            test.p = parse_real(row[4], "p");
            test.stratum = row[5];
        }
        tests.push_back(std::move(test));
    }

    const std::vector<PolarizationRank> ranks = rank_policies(tests);
    ensure_outdir(config);
    std::string out;
    append_csv_row(out, {"rank", "topic", "n_sig", "n_p001", "n_p01", "n_p05"});
    for (const PolarizationRank& r : ranks) {
        append_csv_row(out, {std::to_string(r.rank), r.topic,
                             std::to_string(r.n_sig), std::to_string(r.n_p001),
                             std::to_string(r.n_p01), std::to_string(r.n_p05)});
    }
    write_file(out_path(config, kRankingFile), out);
    if (ranks.empty()) {
        std::cout << "rank: no topics\n";
    } else {
        std::cout << "rank: " << ranks.size() << " topics, most polarized '"
                  << ranks.front().topic << "' (" << ranks.front().n_sig
                  << " significant)\n";
    }
}

namespace {

ordered_json config_echo(const RunConfig& config) {
    ordered_json j;
    j["paths.members"] = config.members_path;
    j["paths.tweets"] = config.tweets_path;
    j["paths.lexicon"] = config.lexicon_path;
    j["paths.topics"] = config.topics_path;
    j["paths.contractions"] = config.contractions_path;
    j["paths.stopwords"] = config.stopwords_path;
    j["paths.output_dir"] = config.output_dir;
    j["window.start"] = config.window_start;
    j["window.end"] = config.window_end;
    j["cluster.k"] = config.k;
    j["cluster.tol"] = config.tol;
    j["cluster.max_iter"] = config.max_iter;
    j["ngrams.top"] = config.ngrams_top;
    // run.threads is deliberately not echoed: thread count must not affect
    // any output byte, manifest included.
    j["sentiment.alpha"] = json_real(config.constants.alpha);
    j["sentiment.booster_increment"] = json_real(config.constants.booster_increment);
    j["sentiment.caps_increment"] = json_real(config.constants.caps_increment);
    j["sentiment.negation_factor"] = json_real(config.constants.negation_factor);
    j["sentiment.but_pre_weight"] = json_real(config.constants.but_pre_weight);
    j["sentiment.but_post_weight"] = json_real(config.constants.but_post_weight);
    j["sentiment.exclamation_increment"] =
        json_real(config.constants.exclamation_increment);
    j["sentiment.question_increment"] =
        json_real(config.constants.question_increment);
    j["sentiment.question_cap"] = json_real(config.constants.question_cap);
    j["flags.score_raw"] = config.score_raw;
    j["flags.drop_mentions"] = config.drop_mentions;
    j["flags.no_stopwords"] = config.no_stopwords;
    j["flags.include_centrist"] = config.include_centrist;
    j["flags.welch"] = config.welch;
    return j;
}

ordered_json input_digests(const RunConfig& config) {
    ordered_json inputs;
    auto add = [&inputs](const std::string& name, const std::string& path) {
        if (path.empty()) return;
        ordered_json entry;
        entry["path"] = path;
        entry["sha256"] = sha256_file_hex(path);
        inputs[name] = entry;
    };
    add("members", config.members_path);
    add("tweets", config.tweets_path);
    add("lexicon", config.lexicon_path);
    add("topics", config.topics_path);
    add("contractions", config.contractions_path);
    add("stopwords", config.stopwords_path);
    return inputs;
}

}  // namespace

namespace {

// Prefixes failures with the stage that raised them, so a full run reports
// e.g. "sentiment: cannot open file ..." rather than a bare message.
template <typename F>
auto named_stage(const char* stage, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const std::exception& e) {
        throw Error(std::string(stage) + ": " + e.what());
    }
}

}  // namespace

void run_pipeline(const RunConfig& config) {
    const IngestCounts counts =
        named_stage("ingest", [&] { return ingest_stage(config); });
    named_stage("prep", [&] { prep_stage(config); });
    named_stage("sentiment", [&] { sentiment_stage(config); });
    named_stage("ngrams", [&] {
        for (int n = 1; n <= 4; ++n) ngrams_stage(config, n);
    });
    named_stage("topics", [&] { topics_stage(config); });
    named_stage("cluster", [&] { cluster_stage(config); });
    named_stage("analyze", [&] { analyze_stage(config); });
    named_stage("rank", [&] { rank_stage(config); });

    // Both manifest.json and plotdata.json are assembled from the files the
    // stages wrote, so they describe what is actually on disk.
    const std::vector<std::string> topic_order = topic_order_of(config);
    const GroupsView groups = read_groups(config);

    const CsvTable assignments = read_csv_file(
        out_path(config, kAssignmentsFile), {"tweet_id", "topic"});
    std::map<std::string, std::size_t> topic_counts;
    for (const auto& row : assignments.rows) ++topic_counts[row[1]];

    const CsvTable ttests = read_csv_file(
        out_path(config, kTtestsFile),
        {"topic", "pair", "df", "t", "p", "stratum"});
    std::size_t tests_skipped = 0;
    for (const auto& row : ttests.rows) {
        tests_skipped += (row[5] == "skipped") ? 1 : 0;
    }

    ordered_json manifest;
    manifest["artifact"]["name"] = "polarimeter";
    manifest["artifact"]["version"] = kVersion;
    manifest["config"] = config_echo(config);
    manifest["inputs"] = input_digests(config);

    ordered_json jcounts;
    jcounts["members"] = counts.members;
    jcounts["tweets_input"] = counts.tweets_input;
    jcounts["tweets_retained"] = counts.retained;
    jcounts["tweets_dropped_unknown"] = counts.dropped_unknown;
    jcounts["tweets_dropped_window"] = counts.dropped_window;
    ordered_json by_topic;
    for (const std::string& topic : topic_order) {
        const auto it = topic_counts.find(topic);
        by_topic[topic] = it == topic_counts.end() ? 0 : it->second;
    }
    jcounts["assignments_by_topic"] = by_topic;
    ordered_json by_group;
    for (const std::string& label : groups.label_order) {
        by_group[label] = groups.sizes.at(label);
    }
    jcounts["members_by_group"] = by_group;
    jcounts["tests_computed"] = ttests.rows.size() - tests_skipped;
    jcounts["tests_skipped"] = tests_skipped;
    manifest["counts"] = jcounts;
    write_file(out_path(config, "manifest.json"), manifest.dump(2) + "\n");

    // Plot data: the roster score histogram by party, per-party summaries,
    // group sizes, per-(topic, group) mean sentiment, and the final ranking.
    const std::vector<MemberRecord> members = load_members(config.members_path);
    ordered_json plot;
    ordered_json histogram;
    ordered_json bin_edges = ordered_json::array();
    for (int b = 0; b <= 10; ++b) bin_edges.push_back(json_real(b / 10.0));
    histogram["bins"] = bin_edges;
    ordered_json parties;
    for (Party party :
         {Party::Democrat, Party::Republican, Party::Independent}) {
        std::vector<std::size_t> bins(11, 0);
        bool any = false;
        for (const MemberRecord& m : members) {
            if (m.party != party) continue;
            const long long b = std::llround(m.govtrack_score * 10.0 + 5e-12);
            ++bins[static_cast<std::size_t>(std::clamp<long long>(b, 0, 10))];
            any = true;
        }
        if (!any) continue;
        parties[to_string(party)] = bins;
    }
    histogram["parties"] = parties;
    plot["party_histogram"] = histogram;

    ordered_json summaries = ordered_json::array();
    for (const PartySummary& s : party_summary(members)) {
        ordered_json row;
        row["party"] = to_string(s.party);
        row["count"] = s.count;
        row["mean"] = json_real(s.mean);
        row["mode"] = json_real(s.mode);
        row["min"] = json_real(s.min);
        row["max"] = json_real(s.max);
        row["range"] = json_real(s.range);
        summaries.push_back(row);
    }
    plot["party_summary"] = summaries;

    ordered_json group_sizes;
    for (const std::string& label : groups.label_order) {
        group_sizes[label] = groups.sizes.at(label);
    }
    plot["group_sizes"] = group_sizes;

    const CsvTable descriptive = read_csv_file(
        out_path(config, kDescriptiveFile),
        {"topic", "group", "count", "mean", "median", "std"});
    ordered_json mean_sentiment;
    for (const std::string& topic : topic_order) {
        mean_sentiment[topic] = ordered_json::object();
    }
    for (const auto& row : descriptive.rows) {
        mean_sentiment[row[0]][row[1]] = json_real(parse_real(row[3], "mean"));
    }
    plot["mean_sentiment"] = mean_sentiment;

    const CsvTable ranking = read_csv_file(
        out_path(config, kRankingFile),
        {"rank", "topic", "n_sig", "n_p001", "n_p01", "n_p05"});
    ordered_json ranks = ordered_json::array();
    for (const auto& row : ranking.rows) {
        ordered_json entry;
        entry["rank"] = parse_int(row[0], "rank");
        entry["topic"] = row[1];
        entry["n_sig"] = parse_int(row[2], "n_sig");
        entry["n_p001"] = parse_int(row[3], "n_p001");
        entry["n_p01"] = parse_int(row[4], "n_p01");
        entry["n_p05"] = parse_int(row[5], "n_p05");
        ranks.push_back(entry);
    }
    plot["ranking"] = ranks;
    write_file(out_path(config, "plotdata.json"), plot.dump(2) + "\n");

    std::cout << "run: wrote manifest.json and plotdata.json to "
              << config.output_dir << "\n";
}

}  // namespace polarimeter
