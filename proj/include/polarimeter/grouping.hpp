#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polarimeter/corpus.hpp"

namespace polarimeter {

struct ClusterModel {
    int k = 0;
    std::vector<double> centroids;   // strictly ascending
    std::vector<double> boundaries;  // k-1 midpoints between neighbors
};

// Deterministic 1-D k-means: quantile initialization (centroid i at the
// ((2i+1)/(2k))-quantile, linear interpolation) followed by Lloyd iterations.
// Converges when assignments stop changing or every centroid moves less than
// tol. Requires at least k distinct scores. No randomness anywhere, so
// identical inputs always produce the identical model.
ClusterModel kmeans_1d(const std::vector<double>& scores, int k, int max_iter,
                       double tol);

// Nearest-centroid cluster index; an exact midpoint tie goes to the lower
// (more-left) cluster.
std::size_t assign_cluster(double score, const ClusterModel& model);

// labels must have exactly model.k entries, ordered left to right.
std::string assign_group(double score, const ClusterModel& model,
                         const std::vector<std::string>& labels);

// The named label sets for the common cluster counts; "Cluster N" otherwise.
std::vector<std::string> group_labels(int k);

struct PartySummary {
    Party party = Party::Independent;
    std::size_t count = 0;
    double mean = 0.0;
    double mode = 0.0;  // most frequent 0.1-wide bin; ties go to the smaller
    double min = 0.0;
    double max = 0.0;
    double range = 0.0;
};

// One summary per party present in the roster, in Democrat, Republican,
// Independent order.
std::vector<PartySummary> party_summary(const std::vector<MemberRecord>& members);

}  // namespace polarimeter
