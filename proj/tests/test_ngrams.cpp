#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "polarimeter/ngrams.hpp"
#include "polarimeter/textprep.hpp"
#include "polarimeter/util.hpp"

using namespace polarimeter;

namespace {

std::vector<std::string> toks(const std::string& s) {
    return split_whitespace(s);
}

}  // namespace

TEST_CASE("window counts cover every position") {
    const std::vector<std::string> tokens =
        toks("we must pass the bill to pass the senate");
    for (int n = 1; n <= 4; ++n) {
        NgramTable table;
        table.n = n;
        accumulate_ngrams(tokens, n, table);
        uint64_t total = 0;
        for (const auto& [phrase, count] : table.counts) total += count;
        CHECK(total == tokens.size() - static_cast<size_t>(n) + 1);
    }
    NgramTable bigrams;
    bigrams.n = 2;
    accumulate_ngrams(tokens, 2, bigrams);
    CHECK(bigrams.counts.at("pass the") == 2);
    CHECK(bigrams.counts.at("the bill") == 1);
}

TEST_CASE("short messages yield no windows") {
    NgramTable table;
    table.n = 3;
    accumulate_ngrams(toks("two words"), 3, table);
    CHECK(table.counts.empty());
    accumulate_ngrams({}, 3, table);
    CHECK(table.counts.empty());
}

TEST_CASE("window width outside one through four is rejected") {
    NgramTable table;
    CHECK_THROWS_AS(accumulate_ngrams(toks("a b c"), 0, table), Error);
    CHECK_THROWS_AS(accumulate_ngrams(toks("a b c"), 5, table), Error);
}

TEST_CASE("merge order does not change totals") {
    // Distribute 60 random messages across tables in two different orders.
    oracles::Lcg rng(404);
    const std::vector<std::string> vocab = {"tax",  "vote", "bill", "care",
                                            "jobs", "debt", "farm", "gun"};
    std::vector<std::vector<std::string>> messages;
    for (int i = 0; i < 60; ++i) {
        std::vector<std::string> msg;
        const int len = rng.range(1, 9);
        for (int j = 0; j < len; ++j)
            msg.push_back(vocab[static_cast<std::size_t>(
                rng.range(0, static_cast<int>(vocab.size()) - 1))]);
        messages.push_back(std::move(msg));
    }
    NgramTable forward, reverse;
    forward.n = reverse.n = 2;
    for (size_t i = 0; i < messages.size(); ++i)
        accumulate_ngrams(messages[i], 2, forward);
    // Reverse order through intermediate shard tables.
    NgramTable shard_a, shard_b;
    shard_a.n = shard_b.n = 2;
    for (size_t i = messages.size(); i-- > 0;) {
        NgramTable& shard = (i % 2 == 0) ? shard_a : shard_b;
        accumulate_ngrams(messages[i], 2, shard);
    }
    reverse.merge(shard_b);
    reverse.merge(shard_a);
    REQUIRE(forward.counts.size() == reverse.counts.size());
    for (const auto& [phrase, count] : forward.counts)
        CHECK(reverse.counts.at(phrase) == count);
}

TEST_CASE("merging tables of different widths is an error") {
    NgramTable unigrams, bigrams;
    unigrams.n = 1;
    bigrams.n = 2;
    CHECK_THROWS_AS(unigrams.merge(bigrams), Error);
}

TEST_CASE("top_k orders by count then phrase") {
    NgramTable table;
    table.n = 1;
    table.counts = {{"banana", 4}, {"apple", 4}, {"cherry", 7}, {"date", 1}};
    const auto top = top_k(table, 3);
    REQUIRE(top.size() == 3);
    CHECK(top[0] == std::pair<std::string, uint64_t>{"cherry", 7});
    CHECK(top[1] == std::pair<std::string, uint64_t>{"apple", 4});
    CHECK(top[2] == std::pair<std::string, uint64_t>{"banana", 4});
    const auto all = top_k(table, 99);
    CHECK(all.size() == 4);
    CHECK(all[3].first == "date");
    CHECK(top_k(NgramTable{}, 10).empty());
}

TEST_CASE("stopword filtering removes listed words only") {
    const std::set<std::string> stop = {"the", "to", "of"};
    const std::vector<std::string> in =
        toks("the right to repair of devices");
    CHECK(filter_tokens(in, &stop) ==
          std::vector<std::string>{"right", "repair", "devices"});
    CHECK(filter_tokens(in, nullptr) == in);
    CHECK(filter_tokens({}, &stop).empty());
}

TEST_CASE("bundled stopword list matches the data file") {
    const std::set<std::string> from_file =
        load_stopwords("data/stopwords.txt");
    CHECK(from_file.size() == 170);
    CHECK(default_stopwords() == from_file);
    CHECK(default_stopwords().count("the") == 1);
    CHECK(default_stopwords().count("senate") == 0);
}
