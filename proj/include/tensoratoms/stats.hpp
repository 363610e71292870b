#pragma once

#include <cstddef>
#include <vector>

namespace ta {

// Two-sample Kolmogorov-Smirnov statistic sup_t |F1(t) - F2(t)|.
double ks_two_sample_statistic(std::vector<double> a, std::vector<double> b);

// Asymptotic two-sample critical value at the given significance:
// sqrt(-ln(alpha/2)/2) * sqrt((m+n)/(m n)).
double ks_critical_value(std::size_t m, std::size_t n, double significance);

// Regularized upper incomplete gamma Q(a, x).
double gamma_q(double a, double x);

// Survival function of the chi-square distribution with df degrees of
// freedom: P(X > x).
double chi2_survival(double x, int df);

// Pearson statistic against expected counts; p-value via chi2_survival
// with (cells - 1) degrees of freedom.
struct Chi2Result {
    double statistic;
    int df;
    double p_value;
};
Chi2Result chi2_goodness_of_fit(const std::vector<double>& observed,
                                const std::vector<double>& expected);

}  // namespace ta
