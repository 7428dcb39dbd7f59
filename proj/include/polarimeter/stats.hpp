#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace polarimeter {

struct DescriptiveStats {
    std::size_t count = 0;
    double mean = 0.0;
    double median = 0.0;
    double std = 0.0;        // sample standard deviation (n-1 denominator)
    bool std_defined = true;  // false for count == 1, where std is set to 0
};

// Throws on an empty list. Median averages the two central order statistics
// for even counts.
DescriptiveStats describe(const std::vector<double>& values);

struct PairwiseTest {
    std::string topic;
    std::string label;    // display label for the pair, fixed per column
    std::string group_a;  // baseline group
    std::string group_b;  // comparison group; t = (mean_b - mean_a) / se
    bool skipped = false;
    bool welch = false;  // true when df came from the Welch approximation
    double df = 0.0;     // integer-valued unless welch
    double t = 0.0;
    double p = 1.0;
    std::string stratum;  // "***" | "**" | "*" | "ns" | "skipped"
};

// "***" below 0.001, "**" below 0.01, "*" below 0.05, otherwise "ns".
std::string stratum_of(double p);

// Equal-variance two-sample t-test: pooled variance, df = n_a + n_b - 2,
// t = (mean_b - mean_a)/se. Both counts must be at least 2. Zero pooled
// variance yields t=0, p=1 when the means agree and throws "degenerate
// variance" otherwise. Fills df/t/p/stratum only.
PairwiseTest pooled_t_test(const DescriptiveStats& a, const DescriptiveStats& b);

// Unequal-variance variant (Welch-Satterthwaite df); provided for
// sensitivity analysis and never used for the headline tables.
PairwiseTest welch_t_test(const DescriptiveStats& a, const DescriptiveStats& b);

// Two-sided Student-t tail probability via the regularized incomplete beta
// function: p = I_x(df/2, 1/2) with x = df/(df + t^2). df must be >= 1.
// Continued-fraction evaluation, absolute accuracy well below 1e-10.
double student_t_p(double t, double df);

struct PairSpec {
    std::string label;
    std::string group_a;
    std::string group_b;
};

// The six report columns in fixed order. Labels are fixed display strings;
// the direction is always t = mean(group_b) - mean(group_a) over se.
const std::vector<PairSpec>& table_pairs();

// table_pairs() plus a comparison of each non-centrist group against the
// Centrist cluster, for runs that keep it in the analysis.
std::vector<PairSpec> pairs_with_centrist();

using StatsKey = std::pair<std::string, std::string>;  // (topic, group)
using StatsCells = std::map<StatsKey, DescriptiveStats>;

// One test per (topic in topic_order) x (pair in pairs), in that order.
// A pair whose cells are missing, too small (count < 2), or degenerate is
// emitted as a skipped row rather than aborting the run.
std::vector<PairwiseTest> run_all_tests(const StatsCells& cells,
                                        const std::vector<std::string>& topic_order,
                                        const std::vector<PairSpec>& pairs,
                                        bool welch = false);

struct PolarizationRank {
    std::size_t rank = 0;  // 1-based position after sorting
    std::string topic;
    std::size_t n_sig = 0;   // tests with p < 0.05 (same as n_p05)
    std::size_t n_p001 = 0;  // p < 0.001
    std::size_t n_p01 = 0;   // p < 0.01 (includes n_p001)
    std::size_t n_p05 = 0;   // p < 0.05 (includes n_p01)
};

// Orders topics by n_sig, then n_p001, then n_p01 (all descending), then
// topic name ascending. Skipped tests count as non-significant.
std::vector<PolarizationRank> rank_policies(const std::vector<PairwiseTest>& tests);

}  // namespace polarimeter
