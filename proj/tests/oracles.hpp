#pragma once

// Independent reference implementations used only by tests, kept separate
// from the library so the two sides cannot share a bug: a quadrature-based
// t-distribution tail and an exact dynamic-programming 1-D k-means.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace oracles {

inline double t_density(double x, double df) {
    const double ln_c = std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
                        0.5 * std::log(df * std::acos(-1.0));
    return std::exp(ln_c - 0.5 * (df + 1.0) * std::log1p(x * x / df));
}

inline double simpson(double (*f)(double, double), double df, double a,
                      double b) {
    const double m = 0.5 * (a + b);
    return (b - a) / 6.0 * (f(a, df) + 4.0 * f(m, df) + f(b, df));
}

inline double adaptive_simpson(double (*f)(double, double), double df,
                               double a, double b, double eps, double whole,
                               int depth) {
    const double m = 0.5 * (a + b);
    const double left = simpson(f, df, a, m);
    const double right = simpson(f, df, m, b);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(f, df, a, m, 0.5 * eps, left, depth - 1) +
           adaptive_simpson(f, df, m, b, 0.5 * eps, right, depth - 1);
}

// Two-sided Student-t tail probability: 1 - 2 * integral of the density
// from 0 to |t|, by adaptive Simpson quadrature.
inline double student_t_p_quadrature(double t, double df) {
    const double at = std::abs(t);
    if (at == 0.0) return 1.0;
    const double body = adaptive_simpson(t_density, df, 0.0, at, 1e-13,
                                         simpson(t_density, df, 0.0, at), 60);
    return 1.0 - 2.0 * body;
}

// Exact optimal 1-D k-means objective over contiguous partitions of the
// sorted scores, O(k * n^2) dynamic programming with prefix sums.
inline double kmeans_dp_objective(std::vector<double> scores, int k) {
    std::sort(scores.begin(), scores.end());
    const std::size_t n = scores.size();
    std::vector<double> s1(n + 1, 0.0);
    std::vector<double> s2(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        s1[i + 1] = s1[i] + scores[i];
        s2[i + 1] = s2[i] + scores[i] * scores[i];
    }
    // Sum of squared deviations from the mean of scores[i..j] inclusive.
    auto cost = [&](std::size_t i, std::size_t j) {
        const double cnt = static_cast<double>(j - i + 1);
        const double sum = s1[j + 1] - s1[i];
        return (s2[j + 1] - s2[i]) - sum * sum / cnt;
    };

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> prev(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) prev[j] = cost(0, j);
    for (int c = 2; c <= k; ++c) {
        std::vector<double> cur(n, inf);
        for (std::size_t j = static_cast<std::size_t>(c) - 1; j < n; ++j) {
            for (std::size_t i = static_cast<std::size_t>(c) - 1; i <= j; ++i) {
                const double candidate = prev[i - 1] + cost(i, j);
                cur[j] = std::min(cur[j], candidate);
            }
        }
        prev = std::move(cur);
    }
    return prev[n - 1];
}

// Small deterministic generator for property-test inputs (64-bit LCG,
// identical on every platform).
class Lcg {
  public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 11;
    }
    double uniform() {
        return static_cast<double>(next() % (1ULL << 40)) /
               static_cast<double>(1ULL << 40);
    }
    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(
                                                  hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

}  // namespace oracles
