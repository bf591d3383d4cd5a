#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace riskml::stats {

double mean(std::span<const double> v);
double sample_var(std::span<const double> v);   // n-1 divisor
double sample_sd(std::span<const double> v);

double sigmoid(double x);
double logit(double p);
// log(1 + exp(x)) without overflow
double log1pexp(double x);

double normal_cdf(double x);
double normal_sf(double x);
double normal_pdf(double x);

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double reg_inc_beta(double a, double b, double x);
// Regularized lower incomplete gamma P(a, x).
double reg_lower_gamma(double a, double x);

double student_t_cdf(double t, double df);
double chi2_cdf(double x, double df);
double chi2_sf(double x, double df);

struct TTestResult {
    double t = 0.0;
    double df = 0.0;
    double p = 1.0;
};

// Classic pooled-variance two-sample t test (two-sided).
TTestResult t_test_pooled(std::span<const double> g0, std::span<const double> g1);
// Welch variant, offered behind a flag.
TTestResult t_test_welch(std::span<const double> g0, std::span<const double> g1);

struct Chi2Result {
    double chi2 = 0.0;
    double df = 0.0;
    double p = 1.0;
};

// Pearson chi-square on an R x C count table, no continuity correction.
Chi2Result chi2_test(const std::vector<std::vector<double>>& table);

// Moments of a normal(mean, sd) truncated to [lo, hi].
struct TruncatedMoments {
    double mean;
    double sd;
};
TruncatedMoments truncated_normal_moments(double mean, double sd, double lo, double hi);

} // namespace riskml::stats
