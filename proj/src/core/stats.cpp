#include "core/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "core/error.hpp"

namespace ideasim {

namespace {

double pearson_on_ranks(const std::vector<double>& rx, const std::vector<double>& ry) {
    const std::size_t n = rx.size();
    const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = rx[i] - mx;
        const double dy = ry[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return sxy / std::sqrt(sxx * syy);
}

// Regularized incomplete gamma, series form (x < a+1).
double gamma_p_series(double a, double x) {
    double sum = 1.0 / a;
    double term = sum;
    for (int i = 1; i < 500; ++i) {
        term *= x / (a + i);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma, continued fraction (x >= a+1).
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double mean(const std::vector<double>& xs) {
    if (xs.empty()) throw ConfigError("mean of an empty sample");
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_std(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean(xs);
    double ss = 0.0;
    for (const double x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

std::vector<double> average_ranks(const std::vector<double>& xs) {
    const std::size_t n = xs.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&xs](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;  // 1-based
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

std::optional<double> spearman_rho(const std::vector<double>& xs,
                                   const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw ConfigError("spearman: size mismatch");
    if (xs.size() < 2) throw ConfigError("spearman: need at least 2 rows");
    const double rho = pearson_on_ranks(average_ranks(xs), average_ranks(ys));
    if (std::isnan(rho)) return std::nullopt;
    return rho;
}

TrendResult spearman_permutation_test(const std::vector<double>& xs,
                                      const std::vector<double>& ys,
                                      int permutations, std::uint64_t seed) {
    TrendResult result;
    result.rows = xs.size();
    const auto observed = spearman_rho(xs, ys);
    if (!observed) return result;  // no-trend: rho 0, p 1
    result.rho = *observed;

    const auto rx = average_ranks(xs);
    std::vector<double> ry = average_ranks(ys);

    Rng rng(seed);
    int at_most = 0;   // rho_perm <= rho_obs
    int at_least = 0;  // rho_perm >= rho_obs
    for (int p = 0; p < permutations; ++p) {
        for (std::size_t i = ry.size() - 1; i > 0; --i)
            std::swap(ry[i], ry[rng.index(i + 1)]);
        const double rho = pearson_on_ranks(rx, ry);
        if (rho <= result.rho) ++at_most;
        if (rho >= result.rho) ++at_least;
    }
    result.p_negative = static_cast<double>(at_most + 1) / (permutations + 1);
    result.p_positive = static_cast<double>(at_least + 1) / (permutations + 1);
    return result;
}

TwoSampleResult two_sample_permutation_test(const std::vector<double>& a,
                                            const std::vector<double>& b,
                                            int permutations, std::uint64_t seed) {
    if (a.empty() || b.empty()) throw ConfigError("two-sample test: empty sample");
    TwoSampleResult result;
    result.mean_a = mean(a);
    result.mean_b = mean(b);
    result.diff = result.mean_a - result.mean_b;

    std::vector<double> pool(a);
    pool.insert(pool.end(), b.begin(), b.end());
    const std::size_t na = a.size();
    const double total = std::accumulate(pool.begin(), pool.end(), 0.0);

    Rng rng(seed);
    int at_least = 0;  // diff_perm >= diff_obs
    int at_most = 0;
    for (int p = 0; p < permutations; ++p) {
        for (std::size_t i = pool.size() - 1; i > 0; --i)
            std::swap(pool[i], pool[rng.index(i + 1)]);
        const double sum_a = std::accumulate(pool.begin(), pool.begin() + na, 0.0);
        const double diff = sum_a / na - (total - sum_a) / (pool.size() - na);
        if (diff >= result.diff) ++at_least;
        if (diff <= result.diff) ++at_most;
    }
    result.p_a_greater = static_cast<double>(at_least + 1) / (permutations + 1);
    result.p_b_greater = static_cast<double>(at_most + 1) / (permutations + 1);
    return result;
}

double chi_square_p(double statistic, int dof) {
    if (dof < 1) throw ConfigError("chi_square_p: dof must be >= 1");
    if (statistic <= 0.0) return 1.0;
    const double a = 0.5 * dof;
    const double x = 0.5 * statistic;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

}  // namespace ideasim
