#include "polarimeter/stats.hpp"

#include <algorithm>
#include <cmath>

#include "polarimeter/util.hpp"

namespace polarimeter {

namespace {

// Continued fraction for the regularized incomplete beta function
// (modified Lentz's method).
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-16;
    constexpr double kFpMin = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) <= kEps) return h;
    }
    throw Error("incomplete beta continued fraction did not converge");
}

double reg_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) -
                            std::lgamma(b) + a * std::log(x) +
                            b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * betacf(a, b, x) / a;
    }
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

PairwiseTest finish(PairwiseTest test) {
    test.p = student_t_p(test.t, test.df);
    test.stratum = stratum_of(test.p);
    return test;
}

}  // namespace

DescriptiveStats describe(const std::vector<double>& values) {
    if (values.empty()) throw Error("cannot describe an empty sample");
    DescriptiveStats s;
    s.count = values.size();

    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(s.count);

    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = s.count / 2;
    s.median = (s.count % 2 == 1) ? sorted[mid]
                                  : 0.5 * (sorted[mid - 1] + sorted[mid]);

    if (s.count < 2) {
        s.std = 0.0;
        s.std_defined = false;
        return s;
    }
    double ss = 0.0;
    for (double v : values) {
        const double d = v - s.mean;
        ss += d * d;
    }
    s.std = std::sqrt(ss / static_cast<double>(s.count - 1));
    return s;
}

std::string stratum_of(double p) {
    if (p < 0.001) return "***";
    if (p < 0.01) return "**";
    if (p < 0.05) return "*";
    return "ns";
}

double student_t_p(double t, double df) {
    if (!(df >= 1.0)) {
        throw Error("degrees of freedom must be at least 1");
    }
    if (t == 0.0) return 1.0;
    const double x = df / (df + t * t);
    return reg_incomplete_beta(0.5 * df, 0.5, x);
}

PairwiseTest pooled_t_test(const DescriptiveStats& a,
                           const DescriptiveStats& b) {
    if (a.count < 2 || b.count < 2) {
        throw Error("both samples need at least 2 observations");
    }
    const double na = static_cast<double>(a.count);
    const double nb = static_cast<double>(b.count);
    PairwiseTest test;
    test.df = na + nb - 2.0;
    const double pooled_var =
        ((na - 1.0) * a.std * a.std + (nb - 1.0) * b.std * b.std) / test.df;
    if (pooled_var <= 0.0) {
        if (a.mean == b.mean) {
            test.t = 0.0;
            test.p = 1.0;
            test.stratum = stratum_of(test.p);
            return test;
        }
        throw Error("degenerate variance");
    }
    const double se = std::sqrt(pooled_var) * std::sqrt(1.0 / na + 1.0 / nb);
    test.t = (b.mean - a.mean) / se;
    return finish(std::move(test));
}

PairwiseTest welch_t_test(const DescriptiveStats& a,
                          const DescriptiveStats& b) {
    if (a.count < 2 || b.count < 2) {
        throw Error("both samples need at least 2 observations");
    }
    const double na = static_cast<double>(a.count);
    const double nb = static_cast<double>(b.count);
    const double va = a.std * a.std / na;
    const double vb = b.std * b.std / nb;
    PairwiseTest test;
    test.welch = true;
    if (va + vb <= 0.0) {
        if (a.mean == b.mean) {
            test.df = na + nb - 2.0;
            test.t = 0.0;
            test.p = 1.0;
            test.stratum = stratum_of(test.p);
            return test;
        }
        throw Error("degenerate variance");
    }
    test.df = (va + vb) * (va + vb) /
              (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
    test.t = (b.mean - a.mean) / std::sqrt(va + vb);
    return finish(std::move(test));
}

const std::vector<PairSpec>& table_pairs() {
    static const std::vector<PairSpec> kPairs = {
        {"Far Left - Far Right", "Far Left", "Far Right"},
        {"Far Right - Left Centrist", "Left Centrist", "Far Right"},
        {"Right Centrist - Left Centrist", "Right Centrist", "Left Centrist"},
        {"Right Centrist - Far Left", "Far Left", "Right Centrist"},
        {"Far Right - Right Centrist", "Right Centrist", "Far Right"},
        {"Left Centrist - Far Left", "Far Left", "Left Centrist"},
    };
    return kPairs;
}

std::vector<PairSpec> pairs_with_centrist() {
    std::vector<PairSpec> pairs = table_pairs();
    for (const char* group :
         {"Far Left", "Left Centrist", "Right Centrist", "Far Right"}) {
        pairs.push_back(
            {std::string(group) + " - Centrist", group, "Centrist"});
    }
    return pairs;
}

std::vector<PairwiseTest> run_all_tests(
    const StatsCells& cells, const std::vector<std::string>& topic_order,
    const std::vector<PairSpec>& pairs, bool welch) {
    std::vector<PairwiseTest> tests;
    tests.reserve(topic_order.size() * pairs.size());
    for (const std::string& topic : topic_order) {
        for (const PairSpec& pair : pairs) {
            PairwiseTest test;
            test.topic = topic;
            test.label = pair.label;
            test.group_a = pair.group_a;
            test.group_b = pair.group_b;

            const auto ia = cells.find({topic, pair.group_a});
            const auto ib = cells.find({topic, pair.group_b});
            const bool usable = ia != cells.end() && ib != cells.end() &&
                                ia->second.count >= 2 && ib->second.count >= 2;
            if (!usable) {
                test.skipped = true;
                test.stratum = "skipped";
                tests.push_back(std::move(test));
                continue;
            }
            try {
                PairwiseTest computed = welch
                                            ? welch_t_test(ia->second, ib->second)
                                            : pooled_t_test(ia->second, ib->second);
                test.welch = computed.welch;
                test.df = computed.df;
                test.t = computed.t;
                test.p = computed.p;
                test.stratum = computed.stratum;
            } catch (const Error&) {
                test.skipped = true;  // degenerate variance, unequal means
                test.stratum = "skipped";
            }
            tests.push_back(std::move(test));
        }
    }
    return tests;
}

std::vector<PolarizationRank> rank_policies(
    const std::vector<PairwiseTest>& tests) {
    std::vector<PolarizationRank> ranks;
    auto find_topic = [&](const std::string& topic) -> PolarizationRank& {
        for (PolarizationRank& r : ranks) {
            if (r.topic == topic) return r;
        }
        ranks.push_back(PolarizationRank{});
        ranks.back().topic = topic;
        return ranks.back();
    };

    for (const PairwiseTest& test : tests) {
        PolarizationRank& r = find_topic(test.topic);
        if (test.skipped) continue;
        if (test.p < 0.001) ++r.n_p001;
        if (test.p < 0.01) ++r.n_p01;
        if (test.p < 0.05) ++r.n_p05;
    }
    for (PolarizationRank& r : ranks) r.n_sig = r.n_p05;

    std::stable_sort(ranks.begin(), ranks.end(),
                     [](const PolarizationRank& a, const PolarizationRank& b) {
                         if (a.n_sig != b.n_sig) return a.n_sig > b.n_sig;
                         if (a.n_p001 != b.n_p001) return a.n_p001 > b.n_p001;
                         if (a.n_p01 != b.n_p01) return a.n_p01 > b.n_p01;
                         return a.topic < b.topic;
                     });
    for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i].rank = i + 1;
    return ranks;
}

}  // namespace polarimeter
