// Acceptance gate: one test case per shipping criterion. Every case prints a
// single [PASS]/[FAIL]/[SKIP] line (with bullet details on failure) so the
// ctest log reads as a checklist.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "polarimeter/csv.hpp"
#include "polarimeter/grouping.hpp"
#include "polarimeter/ngrams.hpp"
#include "polarimeter/pipeline.hpp"
#include "polarimeter/sentiment.hpp"
#include "polarimeter/stats.hpp"
#include "polarimeter/textprep.hpp"
#include "polarimeter/util.hpp"
#include "scratch.hpp"

using namespace polarimeter;

namespace {

bool report(const std::string& label,
            const std::vector<std::string>& problems) {
    if (problems.empty()) {
        std::cout << "[PASS] " << label << "\n";
        return true;
    }
    std::cout << "[FAIL] " << label << " (" << problems.size()
              << (problems.size() == 1 ? " problem)" : " problems)") << "\n";
    for (const std::string& p : problems) std::cout << "  - " << p << "\n";
    return false;
}

std::string real6(double v) { return format_real(v); }

// Loads the committed per-(topic, group) distribution table and recomputes
// every pairwise test from it.
struct ReferenceRun {
    StatsCells cells;
    std::vector<std::string> topic_order;
    std::vector<PairwiseTest> tests;
};

ReferenceRun recompute_reference() {
    ReferenceRun run;
    const CsvTable table =
        read_csv_file("tests/fixtures/reference_descriptive.csv",
                      {"topic", "group", "count", "mean", "median", "std"});
    for (const auto& row : table.rows) {
        DescriptiveStats stats;
        stats.count = static_cast<std::size_t>(parse_int(row[2], "count"));
        stats.mean = parse_real(row[3], "mean");
        stats.median = parse_real(row[4], "median");
        stats.std = parse_real(row[5], "std");
        stats.std_defined = stats.count > 1;
        run.cells[{row[0], row[1]}] = stats;
        if (std::find(run.topic_order.begin(), run.topic_order.end(),
                      row[0]) == run.topic_order.end()) {
            run.topic_order.push_back(row[0]);
        }
    }
    run.tests = run_all_tests(run.cells, run.topic_order, table_pairs());
    return run;
}

}  // namespace

TEST_CASE("pairwise tests match the reference table") {
    std::vector<std::string> problems;
    const ReferenceRun run = recompute_reference();
    const CsvTable expected =
        read_csv_file("tests/fixtures/reference_ttests_expected.csv",
                      {"topic", "pair", "df", "t", "stratum"});
    if (run.tests.size() != expected.rows.size()) {
        problems.push_back("computed " + std::to_string(run.tests.size()) +
                           " tests, reference has " +
                           std::to_string(expected.rows.size()));
    }
    const std::size_t n = std::min(run.tests.size(), expected.rows.size());
    for (std::size_t i = 0; i < n; ++i) {
        const PairwiseTest& got = run.tests[i];
        const auto& row = expected.rows[i];
        const std::string where = row[0] + " / " + row[1];
        if (got.topic != row[0] || got.label != row[1]) {
            problems.push_back("row " + std::to_string(i + 1) + ": computed " +
                               got.topic + " / " + got.label + ", reference " +
                               where);
            continue;
        }
        if (got.skipped) {
            problems.push_back(where + ": skipped, reference has a result");
            continue;
        }
        const double want_df = parse_real(row[2], "df");
        const double want_t = parse_real(row[3], "t");
        if (got.df != want_df) {
            problems.push_back(where + ": df " + real6(got.df) +
                               ", reference " + row[2]);
        }
        if (std::abs(got.t - want_t) > 0.06) {
            problems.push_back(where + ": t = " + real6(got.t) +
                               ", reference " + row[3] + ", |diff| " +
                               real6(std::abs(got.t - want_t)) + " > 0.06");
        }
        if (got.stratum != row[4]) {
            problems.push_back(where + ": stratum " + got.stratum + " (p = " +
                               real6(got.p) + "), reference " + row[4]);
        }
    }
    if (!problems.empty()) {
        problems.push_back(
            "note: results are recomputed from the committed distribution "
            "table, whose means and deviations carry only 3 decimal digits; "
            "the deviations above are what that rounding admits");
    }
    if (!report("pairwise tests match the reference table", problems)) {
        FAIL_CHECK("reference table reproduction has deviations");
    }
}

TEST_CASE("polarization ranking matches the reference counts") {
    std::vector<std::string> problems;
    const ReferenceRun run = recompute_reference();
    const std::vector<PolarizationRank> ranks = rank_policies(run.tests);

    struct Want {
        const char* topic;
        std::size_t n_sig, n_p001, n_p01;
    };
    const std::vector<Want> want = {
        {"Gun Control", 6, 4, 5},
        {"Immigration and Border Control", 5, 5, 5},
        {"Fossil Fuels", 5, 4, 5},
        {"Ukraine-Russia", 5, 2, 4},
        {"Substance Abuse and Mental Health", 5, 1, 2},
        {"Abortion", 4, 3, 4},
        {"Climate Change", 4, 3, 4},
        {"Broadband Internet", 4, 1, 3},
        {"CHIPS and Science Act", 4, 1, 2},
        {"Chinese Communist Party", 2, 0, 2},
        {"LGBTQ Community", 0, 0, 0},
        {"Taiwan", 0, 0, 0},
    };
    if (ranks.size() != want.size()) {
        problems.push_back("ranked " + std::to_string(ranks.size()) +
                           " topics, expected " + std::to_string(want.size()));
    }
    for (std::size_t i = 0; i < std::min(ranks.size(), want.size()); ++i) {
        const PolarizationRank& got = ranks[i];
        const Want& w = want[i];
        if (got.topic != w.topic) {
            problems.push_back("rank " + std::to_string(i + 1) + ": got " +
                               got.topic + ", expected " + w.topic);
            continue;
        }
        if (got.rank != i + 1 || got.n_sig != w.n_sig ||
            got.n_p001 != w.n_p001 || got.n_p01 != w.n_p01 ||
            got.n_p05 != w.n_sig) {
            std::ostringstream oss;
            oss << w.topic << ": counts (" << got.n_sig << ", " << got.n_p001
                << ", " << got.n_p01 << ", " << got.n_p05 << "), expected ("
                << w.n_sig << ", " << w.n_p001 << ", " << w.n_p01 << ", "
                << w.n_sig << ")";
            problems.push_back(oss.str());
        }
    }
    if (!report("polarization ranking matches the reference counts",
                problems)) {
        FAIL_CHECK("ranking reproduction has deviations");
    }
}

TEST_CASE("sentiment engine matches the oracle fixture") {
    std::vector<std::string> problems;
    const Lexicon lexicon = load_lexicon("data/vader_lexicon.txt");
    const RuleConstants constants;

    const std::string data = read_file("tests/fixtures/sentiment_cases.tsv");
    std::vector<std::pair<std::string, std::vector<double>>> cases;
    std::istringstream lines(data);
    std::string line;
    bool header = true;
    while (std::getline(lines, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::size_t start = 0;
        while (true) {
            const std::size_t tab = line.find('\t', start);
            if (tab == std::string::npos) {
                cols.push_back(line.substr(start));
                break;
            }
            cols.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        if (cols.size() != 5) {
            problems.push_back("fixture line with " +
                               std::to_string(cols.size()) + " columns");
            continue;
        }
        cases.push_back({cols[0],
                         {parse_real(cols[1], "neg"), parse_real(cols[2], "neu"),
                          parse_real(cols[3], "pos"),
                          parse_real(cols[4], "compound")}});
    }
    if (cases.size() != 200) {
        problems.push_back("fixture has " + std::to_string(cases.size()) +
                           " sentences, expected 200");
    }

    const auto started = std::chrono::steady_clock::now();
    std::size_t compound_misses = 0;
    std::size_t sum_misses = 0;
    for (const auto& [text, want] : cases) {
        const SentimentResult got = score_text(text, lexicon, constants);
        if (std::abs(got.compound - want[3]) > 1e-4 ||
            std::abs(got.neg - want[0]) > 1e-4 ||
            std::abs(got.neu - want[1]) > 1e-4 ||
            std::abs(got.pos - want[2]) > 1e-4) {
            ++compound_misses;
            if (compound_misses <= 5) {
                problems.push_back("\"" + text + "\": compound " +
                                   real6(got.compound) + ", reference " +
                                   real6(want[3]));
            }
        }
        const double sum = got.neg + got.neu + got.pos;
        if (sum != 0.0 && std::abs(sum - 1.0) > 1e-6) {
            ++sum_misses;
            if (sum_misses <= 3) {
                problems.push_back("\"" + text + "\": proportions sum to " +
                                   real6(sum));
            }
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      started)
            .count();
    if (compound_misses > 5) {
        problems.push_back("... and " + std::to_string(compound_misses - 5) +
                           " more scoring deviations");
    }
    if (seconds >= 1.0) {
        problems.push_back("scoring took " + real6(seconds) +
                           " s, budget is 1 s");
    }
    if (!report("sentiment engine matches the oracle fixture", problems)) {
        FAIL_CHECK("sentiment conformance has deviations");
    }
}

TEST_CASE("p-values match the integration oracle") {
    std::vector<std::string> problems;
    for (double df : {1.0, 2.0, 10.0, 100.0, 3144.0}) {
        for (double t : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0}) {
            const double got = student_t_p(t, df);
            const double want = oracles::student_t_p_quadrature(t, df);
            if (std::abs(got - want) > 1e-8) {
                std::ostringstream oss;
                oss << "t=" << t << " df=" << df << ": p=" << real6(got)
                    << ", quadrature " << real6(want) << ", |diff| "
                    << real6(std::abs(got - want));
                problems.push_back(oss.str());
            }
        }
    }
    if (!report("p-values match the integration oracle", problems)) {
        FAIL_CHECK("tail probability deviates from quadrature");
    }
}

TEST_CASE("clustering reaches the exact optimum") {
    std::vector<std::string> problems;
    oracles::Lcg rng(424242);
    int tried = 0;
    while (tried < 50) {
        const int n = static_cast<int>(rng.range(8, 64));
        const int k = static_cast<int>(rng.range(2, 5));
        std::vector<double> scores;
        std::set<double> distinct;
        for (int i = 0; i < n; ++i) {
            const double s = std::round(rng.uniform() * 1000.0) / 1000.0;
            scores.push_back(s);
            distinct.insert(s);
        }
        if (static_cast<int>(distinct.size()) < k) continue;
        ++tried;
        const ClusterModel model = kmeans_1d(scores, k, 500, 1e-12);
        double objective = 0.0;
        for (double s : scores) {
            const double c = model.centroids[assign_cluster(s, model)];
            objective += (s - c) * (s - c);
        }
        const double best = oracles::kmeans_dp_objective(scores, k);
        if (std::abs(objective - best) > 1e-9) {
            std::ostringstream oss;
            oss << "instance " << tried << " (n=" << n << ", k=" << k
                << "): objective " << real6(objective) << ", optimum "
                << real6(best);
            problems.push_back(oss.str());
        }
    }
    if (!report("clustering reaches the exact optimum", problems)) {
        FAIL_CHECK("a clustering instance missed the optimum");
    }
}

TEST_CASE("external dataset calibration") {
    // Party-summary calibration against the published corpus needs that
    // corpus on disk; it is not bundled, so this check cannot run here.
    std::cout << "[SKIP] external dataset calibration: requires the published"
                 " source corpus (not bundled)\n";
}

TEST_CASE("determinism and property suites") {
    std::vector<std::string> problems;

    // Text normalization is idempotent on arbitrary garbage.
    {
        const ContractionTable& table = ContractionTable::builtin();
        oracles::Lcg rng(20260822);
        const std::string alphabet =
            "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
            " \t\n'.,!?@#:/-_()[]&%$\"";
        for (int trial = 0; trial < 200; ++trial) {
            std::string s;
            const int len = rng.range(0, 80);
            for (int i = 0; i < len; ++i) {
                const int pick =
                    rng.range(0, static_cast<int>(alphabet.size()));
                if (pick == static_cast<int>(alphabet.size())) {
                    s += "\xE2\x80\x99";  // curly apostrophe
                } else {
                    s += alphabet[static_cast<std::size_t>(pick)];
                }
            }
            const std::string once = normalize_text(s, table, {});
            const std::string twice = normalize_text(once, table, {});
            if (once != twice) {
                problems.push_back("normalization not idempotent on: " + s);
                break;
            }
        }
    }

    // The valence squashing map is odd, bounded, and strictly increasing.
    {
        double last = -1.0;
        bool ok = true;
        for (double s = -40.0; s <= 40.0; s += 0.125) {
            const double v = normalize_valence(s, 15.0);
            if (!(v > -1.0 && v < 1.0) || v <= last ||
                std::abs(normalize_valence(-s, 15.0) + v) > 1e-15) {
                ok = false;
                break;
            }
            last = v;
        }
        if (!ok) problems.push_back("valence normalization property failed");
    }

    // Window counts and merge-order independence for phrase tables.
    {
        oracles::Lcg rng(7);
        const std::vector<std::string> vocab = {"aa", "bb", "cc", "dd", "ee"};
        NgramTable forward, backward;
        forward.n = backward.n = 2;
        std::vector<std::vector<std::string>> messages;
        bool counts_ok = true;
        for (int i = 0; i < 40; ++i) {
            std::vector<std::string> msg;
            const int len = rng.range(0, 10);
            for (int j = 0; j < len; ++j)
                msg.push_back(vocab[static_cast<std::size_t>(
                    rng.range(0, static_cast<int>(vocab.size()) - 1))]);
            NgramTable solo;
            solo.n = 2;
            accumulate_ngrams(msg, 2, solo);
            uint64_t total = 0;
            for (const auto& [phrase, count] : solo.counts) total += count;
            const uint64_t expect = msg.size() >= 2 ? msg.size() - 1 : 0;
            if (total != expect) counts_ok = false;
            messages.push_back(std::move(msg));
        }
        if (!counts_ok) problems.push_back("phrase window count identity failed");
        for (std::size_t i = 0; i < messages.size(); ++i)
            accumulate_ngrams(messages[i], 2, forward);
        for (std::size_t i = messages.size(); i-- > 0;)
            accumulate_ngrams(messages[i], 2, backward);
        if (forward.counts != backward.counts) {
            problems.push_back("phrase tables depend on aggregation order");
        }
    }

    // Swapping the two samples negates t and preserves df and p.
    {
        oracles::Lcg rng(99);
        for (int i = 0; i < 50; ++i) {
            DescriptiveStats a, b;
            a.count = static_cast<std::size_t>(rng.range(2, 500));
            b.count = static_cast<std::size_t>(rng.range(2, 500));
            a.mean = rng.uniform() * 2.0 - 1.0;
            b.mean = rng.uniform() * 2.0 - 1.0;
            a.std = 0.05 + rng.uniform();
            b.std = 0.05 + rng.uniform();
            const PairwiseTest fwd = pooled_t_test(a, b);
            const PairwiseTest rev = pooled_t_test(b, a);
            if (std::abs(fwd.t + rev.t) > 1e-12 || fwd.df != rev.df ||
                std::abs(fwd.p - rev.p) > 1e-12) {
                problems.push_back("pooled test is not antisymmetric");
                break;
            }
        }
    }

    // End to end: identical bytes across repeated runs and thread counts.
    {
        auto run_into = [](const std::string& dir, int threads) {
            RunConfig cfg;
            cfg.members_path = "data/sample/members.csv";
            cfg.tweets_path = "data/sample/tweets.csv";
            cfg.output_dir = dir;
            cfg.threads = threads;
            run_pipeline(cfg);
        };
        const std::string base = scratch_dir("acceptance_run_a");
        const std::string again = scratch_dir("acceptance_run_b");
        const std::string threaded = scratch_dir("acceptance_run_c");
        run_into(base, 1);
        run_into(again, 1);
        run_into(threaded, 7);
        std::set<std::string> names;
        for (const auto& entry : std::filesystem::directory_iterator(base)) {
            names.insert(entry.path().filename().string());
        }
        if (names.empty()) problems.push_back("pipeline produced no files");
        for (const std::string& other : {again, threaded}) {
            std::set<std::string> other_names;
            for (const auto& entry :
                 std::filesystem::directory_iterator(other)) {
                other_names.insert(entry.path().filename().string());
            }
            if (other_names != names) {
                problems.push_back("run in " + other +
                                   " produced a different file set");
                continue;
            }
            for (const std::string& name : names) {
                if (read_file(base + "/" + name) !=
                    read_file(other + "/" + name)) {
                    problems.push_back(name + " differs between " + base +
                                       " and " + other);
                }
            }
        }
    }

    if (!report("determinism and property suites", problems)) {
        FAIL_CHECK("a determinism or property check failed");
    }
}
