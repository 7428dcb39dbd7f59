#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace polarimeter {

// Phrase (space-joined tokens) -> occurrence count. Windows never span
// message boundaries; corpus totals are pointwise sums of per-message tables,
// so aggregation order cannot change the result.
struct NgramTable {
    int n = 1;
    std::unordered_map<std::string, uint64_t> counts;

    void merge(const NgramTable& other);
};

// Fixed default stopword list (~170 common English words) used when no file
// is supplied; loadable from a one-word-per-line file.
const std::set<std::string>& default_stopwords();
std::set<std::string> load_stopwords(const std::string& path);

// Whitespace tokens of a cleaned message, minus stopwords when a list is
// given (phrase reporting uses the list; topic matching passes nullptr).
std::vector<std::string> filter_tokens(const std::vector<std::string>& tokens,
                                       const std::set<std::string>* stopwords);

// Sliding window of width n, stride 1. n must be within [1, 4].
void accumulate_ngrams(const std::vector<std::string>& tokens, int n,
                       NgramTable& table);

// Descending by count, ties broken by phrase ascending.
std::vector<std::pair<std::string, uint64_t>> top_k(const NgramTable& table,
                                                    size_t k);

}  // namespace polarimeter
