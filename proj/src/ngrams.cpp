#include "polarimeter/ngrams.hpp"

#include <algorithm>

#include "polarimeter/util.hpp"

namespace polarimeter {

void NgramTable::merge(const NgramTable& other) {
    if (other.n != n) throw Error("cannot merge n-gram tables of different n");
    for (const auto& [phrase, count] : other.counts) {
        counts[phrase] += count;
    }
}

const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words = {
        "about", "above", "after", "again", "against", "all", "also", "am",
        "an", "and", "any", "are", "as", "at", "back", "be", "because", "been",
        "before", "being", "below", "between", "both", "but", "by", "came",
        "can", "cannot", "come", "could", "day", "did", "do", "does", "doing",
        "down", "during", "each", "even", "every", "few", "for", "from",
        "further", "get", "go", "going", "got", "had", "has", "have", "having",
        "he", "her", "here", "hers", "herself", "him", "himself", "his", "how",
        "if", "in", "into", "is", "it", "its", "itself", "just", "know", "let",
        "like", "made", "make", "many", "may", "me", "might", "more", "most",
        "much", "must", "my", "myself", "need", "never", "new", "no", "nor",
        "not", "now", "of", "off", "on", "once", "one", "only", "or", "other",
        "our", "ours", "ourselves", "out", "over", "own", "put", "said",
        "same", "say", "see", "shall", "she", "should", "since", "so", "some",
        "still", "such", "take", "than", "that", "the", "their", "theirs",
        "them", "themselves", "then", "there", "these", "they", "this",
        "those", "through", "time", "to", "today", "too", "two", "under",
        "until", "up", "upon", "us", "use", "very", "want", "was", "way", "we",
        "well", "were", "what", "when", "where", "which", "while", "who",
        "whom", "why", "will", "with", "within", "without", "would", "year",
        "you", "your", "yours", "yourself", "yourselves"};
    return words;
}

std::set<std::string> load_stopwords(const std::string& path) {
    std::set<std::string> words;
    const std::string data = read_file(path);
    size_t pos = 0;
    while (pos <= data.size()) {
        const size_t eol = data.find('\n', pos);
        const std::string word =
            trim(data.substr(pos, eol == std::string::npos ? eol : eol - pos));
        pos = (eol == std::string::npos) ? data.size() + 1 : eol + 1;
        if (!word.empty()) words.insert(word);
    }
    return words;
}

std::vector<std::string> filter_tokens(const std::vector<std::string>& tokens,
                                       const std::set<std::string>* stopwords) {
    if (stopwords == nullptr) return tokens;
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) {
        if (!stopwords->count(t)) out.push_back(t);
    }
    return out;
}

void accumulate_ngrams(const std::vector<std::string>& tokens, int n,
                       NgramTable& table) {
    if (n < 1 || n > 4) {
        throw Error("n-gram width must be between 1 and 4, got " +
                    std::to_string(n));
    }
    table.n = n;
    if (tokens.size() < static_cast<size_t>(n)) return;
    for (size_t i = 0; i + n <= tokens.size(); ++i) {
        std::string phrase = tokens[i];
        for (size_t j = 1; j < static_cast<size_t>(n); ++j) {
            phrase.push_back(' ');
            phrase += tokens[i + j];
        }
        ++table.counts[phrase];
    }
}

std::vector<std::pair<std::string, uint64_t>> top_k(const NgramTable& table,
                                                    size_t k) {
    std::vector<std::pair<std::string, uint64_t>> entries(table.counts.begin(),
                                                          table.counts.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (entries.size() > k) entries.resize(k);
    return entries;
}

}  // namespace polarimeter
