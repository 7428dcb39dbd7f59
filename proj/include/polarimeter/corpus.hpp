#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polarimeter {

enum class Party { Democrat, Republican, Independent };

Party parse_party(const std::string& text);  // throws on anything else
std::string to_string(Party party);

struct MemberRecord {
    std::string name;
    std::string handle;  // as written in the roster, possibly with leading @
    Party party = Party::Independent;
    double govtrack_score = 0.0;  // 0 = most progressive, 1 = most conservative
};

struct TweetRecord {
    std::string handle;
    std::string date;  // ISO yyyy-mm-dd
    std::string text;
    std::int64_t retweets = 0;
    std::int64_t likes = 0;
};

// A tweet that survived the roster join and window filter, tied back to its
// author by index into the member list.
struct JoinedTweet {
    std::size_t member_index = 0;
    TweetRecord tweet;
};

struct Corpus {
    std::vector<MemberRecord> members;
    std::vector<JoinedTweet> tweets;  // retained tweets in input order
    std::size_t dropped_unknown = 0;  // author not in the roster
    std::size_t dropped_window = 0;   // outside [window_start, window_end]
    std::string window_start;
    std::string window_end;
};

inline constexpr std::string_view kDefaultWindowStart = "2021-01-01";
inline constexpr std::string_view kDefaultWindowEnd = "2022-12-31";

// Lowercases and strips one leading '@'; used for all handle comparisons.
std::string canonical_handle(std::string_view handle);

// Roster parsing. Validates the header, the party enum, govtrack_score in
// [0, 1], and rejects duplicate handles (after canonicalization). Errors
// carry the origin and 1-based data row number.
std::vector<MemberRecord> parse_members(std::string_view csv_text,
                                        const std::string& origin);
std::vector<MemberRecord> load_members(const std::string& path);

// Tweet parsing. Validates the header, ISO dates, and non-negative counts.
std::vector<TweetRecord> parse_tweets(std::string_view csv_text,
                                      const std::string& origin);
std::vector<TweetRecord> load_tweets(const std::string& path);

// Inverse of the parsers; parse(serialize(x)) == x.
std::string serialize_members(const std::vector<MemberRecord>& members);
std::string serialize_tweets(const std::vector<TweetRecord>& tweets);

// Joins tweets to roster members (case-insensitive handles, leading '@'
// ignored) and keeps those dated within the inclusive window. Counters
// satisfy retained + dropped_unknown + dropped_window == input size.
Corpus join_corpus(std::vector<MemberRecord> members,
                   const std::vector<TweetRecord>& tweets,
                   const std::string& window_start,
                   const std::string& window_end);

}  // namespace polarimeter
