#include "polarimeter/corpus.hpp"

#include <unordered_map>
#include <utility>

#include "polarimeter/csv.hpp"
#include "polarimeter/util.hpp"

namespace polarimeter {

namespace {

const std::vector<std::string> kMemberHeader = {"name", "handle", "party",
                                                "govtrack_score"};
const std::vector<std::string> kTweetHeader = {"handle", "date", "text",
                                               "retweets", "likes"};

[[noreturn]] void row_fail(const std::string& origin, std::size_t row,
                           const std::string& what) {
    throw Error(origin + ": data row " + std::to_string(row) + ": " + what);
}

}  // namespace

Party parse_party(const std::string& text) {
    if (text == "Democrat") return Party::Democrat;
    if (text == "Republican") return Party::Republican;
    if (text == "Independent") return Party::Independent;
    throw Error("unknown party '" + text +
                "' (want Democrat, Republican, or Independent)");
}

std::string to_string(Party party) {
    switch (party) {
        case Party::Democrat: return "Democrat";
        case Party::Republican: return "Republican";
        case Party::Independent: return "Independent";
    }
    throw Error("invalid party value");
}

std::string canonical_handle(std::string_view handle) {
    if (!handle.empty() && handle.front() == '@') handle.remove_prefix(1);
    return to_lower_ascii(handle);
}

std::vector<MemberRecord> parse_members(std::string_view csv_text,
                                        const std::string& origin) {
    const CsvTable table = make_table(csv_text, origin, kMemberHeader);
    std::vector<MemberRecord> members;
    members.reserve(table.rows.size());
    std::unordered_map<std::string, std::size_t> seen;  // canonical -> row

    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::size_t rowno = r + 1;
        MemberRecord m;
        m.name = row[0];
        m.handle = row[1];
        if (m.name.empty()) row_fail(origin, rowno, "empty name");
        const std::string canon = canonical_handle(m.handle);
        if (canon.empty()) row_fail(origin, rowno, "empty handle");
        auto [it, inserted] = seen.emplace(canon, rowno);
        if (!inserted) {
            row_fail(origin, rowno,
                     "duplicate handle '" + m.handle + "' (also data row " +
                         std::to_string(it->second) + ")");
        }
        try {
            m.party = parse_party(row[2]);
            m.govtrack_score = parse_real(row[3], "govtrack_score");
        } catch (const Error& e) {
            row_fail(origin, rowno, e.what());
        }
        if (!(m.govtrack_score >= 0.0 && m.govtrack_score <= 1.0)) {
            row_fail(origin, rowno,
                     "govtrack_score " + row[3] + " outside [0, 1]");
        }
        members.push_back(std::move(m));
    }
    return members;
}

std::vector<MemberRecord> load_members(const std::string& path) {
    return parse_members(read_file(path), path);
}

std::vector<TweetRecord> parse_tweets(std::string_view csv_text,
                                      const std::string& origin) {
    const CsvTable table = make_table(csv_text, origin, kTweetHeader);
    std::vector<TweetRecord> tweets;
    tweets.reserve(table.rows.size());

    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::size_t rowno = r + 1;
        TweetRecord t;
        t.handle = row[0];
        t.date = row[1];
        t.text = row[2];
        if (canonical_handle(t.handle).empty()) {
            row_fail(origin, rowno, "empty handle");
        }
        if (!valid_iso_date(t.date)) {
            row_fail(origin, rowno,
                     "invalid date '" + t.date + "' (want YYYY-MM-DD)");
        }
        try {
            t.retweets = parse_int(row[3], "retweets");
            t.likes = parse_int(row[4], "likes");
        } catch (const Error& e) {
            row_fail(origin, rowno, e.what());
        }
        if (t.retweets < 0) row_fail(origin, rowno, "negative retweets");
        if (t.likes < 0) row_fail(origin, rowno, "negative likes");
        tweets.push_back(std::move(t));
    }
    return tweets;
}

std::vector<TweetRecord> load_tweets(const std::string& path) {
    return parse_tweets(read_file(path), path);
}

std::string serialize_members(const std::vector<MemberRecord>& members) {
    std::string out;
    append_csv_row(out, kMemberHeader);
    for (const MemberRecord& m : members) {
        append_csv_row(out, {m.name, m.handle, to_string(m.party),
                             format_real_exact(m.govtrack_score)});
    }
    return out;
}

std::string serialize_tweets(const std::vector<TweetRecord>& tweets) {
    std::string out;
    append_csv_row(out, kTweetHeader);
    for (const TweetRecord& t : tweets) {
        append_csv_row(out, {t.handle, t.date, t.text,
                             std::to_string(t.retweets),
                             std::to_string(t.likes)});
    }
    return out;
}

Corpus join_corpus(std::vector<MemberRecord> members,
                   const std::vector<TweetRecord>& tweets,
                   const std::string& window_start,
                   const std::string& window_end) {
    if (!valid_iso_date(window_start)) {
        throw Error("invalid window start '" + window_start + "'");
    }
    if (!valid_iso_date(window_end)) {
        throw Error("invalid window end '" + window_end + "'");
    }
    if (window_start > window_end) {
        throw Error("window start " + window_start + " is after end " +
                    window_end);
    }

    std::unordered_map<std::string, std::size_t> by_handle;
    by_handle.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        by_handle.emplace(canonical_handle(members[i].handle), i);
    }

    Corpus corpus;
    corpus.members = std::move(members);
    corpus.window_start = window_start;
    corpus.window_end = window_end;
    for (const TweetRecord& t : tweets) {
        auto it = by_handle.find(canonical_handle(t.handle));
        if (it == by_handle.end()) {
            ++corpus.dropped_unknown;
            continue;
        }
        if (t.date < window_start || t.date > window_end) {
            ++corpus.dropped_window;
            continue;
        }
        corpus.tweets.push_back(JoinedTweet{it->second, t});
    }
    return corpus;
}

}  // namespace polarimeter
