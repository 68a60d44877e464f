#ifndef COEVOLVE_STATS_HPP
#define COEVOLVE_STATS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace coevolve::stats {

double mean(std::span<const double> xs);
// Unbiased sample variance; zero for fewer than two values.
double variance(std::span<const double> xs);

// sup |F_n - F| against a continuous CDF.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);

// Against the unit-rate exponential law.
double ks_exponential(std::vector<double> sample);

// sup |F_a - F_b| between two empirical distributions.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// Asymptotic Kolmogorov tail P(D_n > d) with Stephens' small-sample
// correction; `n` is the effective sample size.
double ks_p_value(double d, double n);

struct ChiSquareResult {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
};

// Two-sample homogeneity test on category counts. Categories whose pooled
// expected count falls below `min_expected` are merged into one bin.
ChiSquareResult chi_square_homogeneity(std::span<const std::uint64_t> a,
                                       std::span<const std::uint64_t> b,
                                       double min_expected = 5.0);

// Kendall's tau-b (tie-corrected); O(n^2).
double kendall_tau(std::span<const double> x, std::span<const double> y);

}  // namespace coevolve::stats

#endif  // COEVOLVE_STATS_HPP
