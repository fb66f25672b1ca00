#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/rng.hpp"

namespace ideasim {

double mean(const std::vector<double>& xs);
// Sample standard deviation (n-1 denominator); 0 for fewer than two values.
double sample_std(const std::vector<double>& xs);

// Average ranks (1-based, ties averaged).
std::vector<double> average_ranks(const std::vector<double>& xs);

// Spearman rank correlation; nullopt when either side has zero rank variance.
std::optional<double> spearman_rho(const std::vector<double>& xs,
                                   const std::vector<double>& ys);

struct TrendResult {
    double rho = 0.0;        // 0 when undefined (no-trend)
    double p_negative = 1.0; // P(rho_perm <= rho_obs), +1 smoothed
    double p_positive = 1.0; // P(rho_perm >= rho_obs)
    std::size_t rows = 0;
};

// Permutation test on the Spearman correlation: `permutations` shuffles of y,
// seeded. Zero-variance input reports rho 0 with p 1 on both sides.
TrendResult spearman_permutation_test(const std::vector<double>& xs,
                                      const std::vector<double>& ys,
                                      int permutations, std::uint64_t seed);

struct TwoSampleResult {
    double mean_a = 0.0;
    double mean_b = 0.0;
    double diff = 0.0;        // mean_a - mean_b
    double p_a_greater = 1.0; // P(diff_perm >= diff_obs)
    double p_b_greater = 1.0; // P(diff_perm <= diff_obs)
};

// Two-sample permutation test on the difference of means.
TwoSampleResult two_sample_permutation_test(const std::vector<double>& a,
                                            const std::vector<double>& b,
                                            int permutations, std::uint64_t seed);

// Upper tail of the chi-square distribution with `dof` degrees of freedom.
double chi_square_p(double statistic, int dof);

}  // namespace ideasim
