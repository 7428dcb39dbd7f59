#include "polarimeter/grouping.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "polarimeter/util.hpp"

namespace polarimeter {

namespace {

std::vector<double> quantile_init(const std::vector<double>& sorted, int k) {
    const std::size_t n = sorted.size();
    std::vector<double> centroids(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const double q = (2.0 * i + 1.0) / (2.0 * k);
        const double h = static_cast<double>(n - 1) * q;
        const std::size_t lo = static_cast<std::size_t>(h);
        const double frac = h - static_cast<double>(lo);
        double c = sorted[lo];
        if (frac > 0.0 && lo + 1 < n) c += frac * (sorted[lo + 1] - sorted[lo]);
        centroids[static_cast<std::size_t>(i)] = c;
    }
    return centroids;
}

// Quantile init can collide on heavily duplicated data (e.g. half the scores
// identical). Fall back to evenly spaced distinct values, which are strictly
// ascending whenever there are at least k of them.
std::vector<double> distinct_init(const std::vector<double>& distinct, int k) {
    std::vector<double> centroids(static_cast<std::size_t>(k));
    const std::size_t m = distinct.size();
    for (int i = 0; i < k; ++i) {
        const std::size_t idx =
            (k == 1) ? (m - 1) / 2
                     : static_cast<std::size_t>(i) * (m - 1) /
                           (static_cast<std::size_t>(k) - 1);
        centroids[static_cast<std::size_t>(i)] = distinct[idx];
    }
    return centroids;
}

bool strictly_ascending(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i - 1] < v[i])) return false;
    }
    return true;
}

std::vector<double> midpoints(const std::vector<double>& centroids) {
    std::vector<double> b;
    b.reserve(centroids.size() > 0 ? centroids.size() - 1 : 0);
    for (std::size_t i = 1; i < centroids.size(); ++i) {
        b.push_back(0.5 * (centroids[i - 1] + centroids[i]));
    }
    return b;
}

std::size_t nearest_lower_tie(double score, const std::vector<double>& bounds) {
    // Clusters are separated by ascending boundaries; a score exactly on a
    // boundary belongs to the cluster below it.
    std::size_t c = 0;
    while (c < bounds.size() && score > bounds[c]) ++c;
    return c;
}

}  // namespace

ClusterModel kmeans_1d(const std::vector<double>& scores, int k, int max_iter,
                       double tol) {
    if (k < 1) throw Error("k must be at least 1");
    if (max_iter < 1) throw Error("max_iter must be at least 1");
    if (!(tol >= 0.0)) throw Error("tol must be non-negative");
    if (scores.empty()) throw Error("no scores to cluster");

    std::vector<double> sorted = scores;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> distinct = sorted;
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    if (distinct.size() < static_cast<std::size_t>(k)) {
        throw Error("insufficient distinct scores");
    }

    std::vector<double> centroids = quantile_init(sorted, k);
    if (!strictly_ascending(centroids)) {
        centroids = distinct_init(distinct, k);
    }

    std::vector<std::size_t> assignment(sorted.size(), 0);
    std::vector<std::size_t> previous;
    for (int iter = 0; iter < max_iter; ++iter) {
        const std::vector<double> bounds = midpoints(centroids);
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            assignment[i] = nearest_lower_tie(sorted[i], bounds);
        }
        if (assignment == previous) break;
        previous = assignment;

        std::vector<double> sums(static_cast<std::size_t>(k), 0.0);
        std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            sums[assignment[i]] += sorted[i];
            ++counts[assignment[i]];
        }
        double max_shift = 0.0;
        for (std::size_t c = 0; c < centroids.size(); ++c) {
            if (counts[c] == 0) continue;  // keep the previous centroid
            const double next = sums[c] / static_cast<double>(counts[c]);
            max_shift = std::max(max_shift, std::abs(next - centroids[c]));
            centroids[c] = next;
        }
        if (max_shift < tol) break;
    }

    ClusterModel model;
    model.k = k;
    model.centroids = std::move(centroids);
    model.boundaries = midpoints(model.centroids);
    return model;
}

std::size_t assign_cluster(double score, const ClusterModel& model) {
    return nearest_lower_tie(score, model.boundaries);
}

std::string assign_group(double score, const ClusterModel& model,
                         const std::vector<std::string>& labels) {
    if (labels.size() != static_cast<std::size_t>(model.k)) {
        throw Error("label list size " + std::to_string(labels.size()) +
                    " does not match k=" + std::to_string(model.k));
    }
    return labels[assign_cluster(score, model)];
}

std::vector<std::string> group_labels(int k) {
    if (k == 5) {
        return {"Far Left", "Left Centrist", "Centrist", "Right Centrist",
                "Far Right"};
    }
    if (k == 4) {
        return {"Far Left", "Left Centrist", "Right Centrist", "Far Right"};
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) labels.push_back("Cluster " + std::to_string(i));
    return labels;
}

std::vector<PartySummary> party_summary(
    const std::vector<MemberRecord>& members) {
    std::vector<PartySummary> out;
    for (Party party :
         {Party::Democrat, Party::Republican, Party::Independent}) {
        PartySummary s;
        s.party = party;
        double sum = 0.0;
        std::map<long long, std::size_t> bins;  // 0.1-wide, keyed by 10*score
        for (const MemberRecord& m : members) {
            if (m.party != party) continue;
            const double v = m.govtrack_score;
            if (s.count == 0) {
                s.min = s.max = v;
            } else {
                s.min = std::min(s.min, v);
                s.max = std::max(s.max, v);
            }
            sum += v;
            ++s.count;
            // Scores arrive as short decimal strings, so a value like 0.15
            // sits a hair below the true half in binary. The nudge keeps
            // decimal .x5 halves rounding up (away from zero) consistently
            // while staying far below the data's resolution.
            ++bins[std::llround(v * 10.0 + 5e-12)];
        }
        if (s.count == 0) continue;
        s.mean = sum / static_cast<double>(s.count);
        s.range = s.max - s.min;
        std::size_t best = 0;
        long long best_bin = 0;
        for (const auto& [bin, n] : bins) {  // ascending keys, so the first
            if (n > best) {                  // maximum is the smallest bin
                best = n;
                best_bin = bin;
            }
        }
        s.mode = static_cast<double>(best_bin) / 10.0;
        out.push_back(s);
    }
    return out;
}

}  // namespace polarimeter
