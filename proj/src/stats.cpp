#include "tensoratoms/stats.hpp"

#include <algorithm>
#include <cmath>

#include "tensoratoms/errors.hpp"

namespace ta {

double ks_two_sample_statistic(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw validation_error("KS requires non-empty samples");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double t = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= t) ++i;
        while (j < b.size() && b[j] <= t) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

double ks_critical_value(std::size_t m, std::size_t n, double significance) {
    if (significance <= 0.0 || significance >= 1.0)
        throw validation_error("significance must lie in (0,1)");
    const double c = std::sqrt(-std::log(significance / 2.0) / 2.0);
    const double mm = static_cast<double>(m), nn = static_cast<double>(n);
    return c * std::sqrt((mm + nn) / (mm * nn));
}

namespace {

// Lower regularized gamma P(a,x) by series expansion; valid for x < a+1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw numerics_error("incomplete gamma series did not converge");
}

// Upper regularized gamma Q(a,x) by continued fraction; valid for x >= a+1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw numerics_error("incomplete gamma continued fraction did not converge");
}

}  // namespace

double gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw validation_error("gamma_q requires a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi2_survival(double x, int df) {
    if (df < 1) throw validation_error("chi2 needs df >= 1");
    if (x <= 0.0) return 1.0;
    return gamma_q(df / 2.0, x / 2.0);
}

Chi2Result chi2_goodness_of_fit(const std::vector<double>& observed,
                                const std::vector<double>& expected) {
    if (observed.size() != expected.size() || observed.size() < 2)
        throw validation_error("chi2 needs matching cell vectors with >= 2 cells");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0.0) throw validation_error("chi2 expected counts must be positive");
        const double diff = observed[i] - expected[i];
        stat += diff * diff / expected[i];
    }
    const int df = static_cast<int>(observed.size()) - 1;
    return {stat, df, chi2_survival(stat, df)};
}

}  // namespace ta
