#include "tensoratoms/rmt.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tensoratoms/errors.hpp"
#include "tensoratoms/stats.hpp"

namespace ta {

namespace {

constexpr double kOffDiagonalTol = 1e-12;
constexpr int kMaxSweeps = 100;

double normal_variate(Xoshiro256& rng) {
    // Box-Muller; the cosine branch only
    const double u1 = 1.0 - rng.next_double();
    const double u2 = rng.next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

CMatrix ginibre(int n, Xoshiro256& rng) {
    CMatrix a(n, std::vector<Complex>(n));
    for (auto& row : a)
        for (auto& x : row) x = Complex(normal_variate(rng), normal_variate(rng));
    return a;
}

double off_diagonal_norm(const CMatrix& a) {
    double sum = 0.0;
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) sum += std::norm(a[i][j]);
    return std::sqrt(sum);
}

}  // namespace

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw validation_error("spectrum must be non-empty");
    for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
        if (values_[i] < values_[i + 1])
            throw validation_error("spectrum must be weakly decreasing");
    }
}

Spectrum Spectrum::parse(const std::string& text) {
    std::vector<double> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(token, &used));
            while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
                ++used;
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw validation_error("invalid spectrum entry '" + token + "'");
        }
    }
    return Spectrum(std::move(values));
}

std::string Spectrum::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out << ',';
        out << values_[i];
    }
    return out.str();
}

CMatrix haar_unitary(int n, Xoshiro256& rng) {
    CMatrix a = ginibre(n, rng);
    // Householder QR; q accumulates the reflectors
    CMatrix q(n, std::vector<Complex>(n, Complex(0)));
    for (int i = 0; i < n; ++i) q[i][i] = Complex(1);
    for (int k = 0; k < n; ++k) {
        double norm_x = 0.0;
        for (int i = k; i < n; ++i) norm_x += std::norm(a[i][k]);
        norm_x = std::sqrt(norm_x);
        if (norm_x == 0.0) continue;
        const Complex x0 = a[k][k];
        const Complex phase = std::abs(x0) == 0.0 ? Complex(1) : x0 / std::abs(x0);
        const Complex alpha = -phase * norm_x;
        std::vector<Complex> v(n, Complex(0));
        for (int i = k; i < n; ++i) v[i] = a[i][k];
        v[k] -= alpha;
        double vv = 0.0;
        for (int i = k; i < n; ++i) vv += std::norm(v[i]);
        if (vv == 0.0) continue;
        // a <- (I - 2 v v^* / v^*v) a ; q <- q (I - 2 v v^* / v^*v)
        for (int j = 0; j < n; ++j) {
            Complex dot(0);
            for (int i = k; i < n; ++i) dot += std::conj(v[i]) * a[i][j];
            dot *= 2.0 / vv;
            for (int i = k; i < n; ++i) a[i][j] -= dot * v[i];
        }
        for (int i = 0; i < n; ++i) {
            Complex dot(0);
            for (int j = k; j < n; ++j) dot += q[i][j] * v[j];
            dot *= 2.0 / vv;
            for (int j = k; j < n; ++j) q[i][j] -= dot * std::conj(v[j]);
        }
    }
    // rescale column j by the phase of r_jj so that the implied R has a
    // positive diagonal
    for (int j = 0; j < n; ++j) {
        const Complex rjj = a[j][j];
        const Complex phase = std::abs(rjj) == 0.0 ? Complex(1) : rjj / std::abs(rjj);
        for (int i = 0; i < n; ++i) q[i][j] *= phase;
    }
    return q;
}

EigenSystem hermitian_eigen(CMatrix a) {
    const int n = static_cast<int>(a.size());
    CMatrix v(n, std::vector<Complex>(n, Complex(0)));
    for (int i = 0; i < n; ++i) v[i][i] = Complex(1);
    if (n == 1) return {{a[0][0].real()}, v};

    int sweep = 0;
    while (off_diagonal_norm(a) >= kOffDiagonalTol) {
        if (++sweep > kMaxSweeps) throw numerics_error("Jacobi eigensolver did not converge");
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = std::abs(a[p][q]);
                if (apq == 0.0) continue;
                const Complex phase = a[p][q] / apq;
                const double app = a[p][p].real();
                const double aqq = a[q][q].real();
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // columns: (A J) with J_pp=c, J_pq=s*phase, J_qp=-s*conj(phase), J_qq=c
                for (int i = 0; i < n; ++i) {
                    const Complex aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * std::conj(phase) * aiq;
                    a[i][q] = s * phase * aip + c * aiq;
                }
                // rows: (J^* A)
                for (int j = 0; j < n; ++j) {
                    const Complex apj = a[p][j], aqj = a[q][j];
                    a[p][j] = c * apj - s * phase * aqj;
                    a[q][j] = s * std::conj(phase) * apj + c * aqj;
                }
                for (int i = 0; i < n; ++i) {
                    const Complex vip = v[i][p], viq = v[i][q];
                    v[i][p] = c * vip - s * std::conj(phase) * viq;
                    v[i][q] = s * phase * vip + c * viq;
                }
            }
        }
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a[i][i].real() > a[j][j].real(); });
    EigenSystem out;
    out.values.reserve(n);
    out.vectors.assign(n, std::vector<Complex>(n));
    for (int j = 0; j < n; ++j) {
        out.values.push_back(a[order[j]][order[j]].real());
        for (int i = 0; i < n; ++i) out.vectors[i][j] = v[i][order[j]];
    }
    return out;
}

HermitianSample sample_invariant_hermitian(const Spectrum& spec, std::uint64_t seed) {
    const int n = spec.size();
    if (spec.is_constant()) {
        // c * identity regardless of the conjugating unitary
        CMatrix h(n, std::vector<Complex>(n, Complex(0)));
        for (int i = 0; i < n; ++i) h[i][i] = Complex(spec.values()[0], 0.0);
        return {std::move(h)};
    }
    Xoshiro256 rng(seed);
    const CMatrix u = haar_unitary(n, rng);
    CMatrix h(n, std::vector<Complex>(n, Complex(0)));
    for (int i = 0; i < n; ++i) {
        for (int k = i; k < n; ++k) {
            Complex sum(0);
            for (int j = 0; j < n; ++j) sum += u[i][j] * spec.values()[j] * std::conj(u[k][j]);
            if (i == k) {
                h[i][i] = Complex(sum.real(), 0.0);
            } else {
                h[i][k] = sum;
                h[k][i] = std::conj(sum);
            }
        }
    }
    return {std::move(h)};
}

std::vector<double> corner_top_eigs(const HermitianSample& m) {
    const int n = m.size();
    std::vector<double> tops;
    tops.reserve(n);
    for (int k = 1; k <= n; ++k) {
        if (k == 1) {
            tops.push_back(m.entries[0][0].real());
            continue;
        }
        CMatrix corner(k, std::vector<Complex>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) corner[i][j] = m.entries[i][j];
        tops.push_back(hermitian_eigen(std::move(corner)).values.front());
    }
    return tops;
}

namespace {

// Eigenvalues carry the solver's 1e-9 accuracy, no more; quantizing there
// turns pure floating-point jitter in degenerate (atomic) laws into exact
// ties without disturbing continuous laws.
double quantize(double v) { return std::round(v * 1e9) / 1e9; }

}  // namespace

std::pair<std::vector<double>, std::vector<double>> corollary_samples(const Spectrum& spec_a,
                                                                      const Spectrum& spec_b,
                                                                      std::size_t samples,
                                                                      std::uint64_t seed) {
    if (spec_a.size() != spec_b.size()) throw validation_error("spectra must have the same size");
    const int n = spec_a.size();
    std::vector<double> sum_tops, corner_maxes;
    sum_tops.reserve(samples);
    corner_maxes.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        const auto a = sample_invariant_hermitian(spec_a, derive_stream_seed(seed, 4 * s));
        const auto b = sample_invariant_hermitian(spec_b, derive_stream_seed(seed, 4 * s + 1));
        CMatrix sum(n, std::vector<Complex>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sum[i][j] = a.entries[i][j] + b.entries[i][j];
        sum_tops.push_back(quantize(hermitian_eigen(std::move(sum)).values.front()));

        const auto a2 = sample_invariant_hermitian(spec_a, derive_stream_seed(seed, 4 * s + 2));
        const auto b2 = sample_invariant_hermitian(spec_b, derive_stream_seed(seed, 4 * s + 3));
        const auto ak = corner_top_eigs(a2);
        const auto bl = corner_top_eigs(b2);
        double best = ak[0] + bl[n - 1];
        for (int k = 2; k <= n; ++k) best = std::max(best, ak[k - 1] + bl[n - k]);
        corner_maxes.push_back(quantize(best));
    }
    return {std::move(sum_tops), std::move(corner_maxes)};
}

RmtReport corollary_experiment(const Spectrum& spec_a, const Spectrum& spec_b,
                               std::size_t samples, std::uint64_t seed, double significance) {
    if (samples < 1000) throw validation_error("corollary experiment needs samples >= 1000");
    auto [sum_tops, corner_maxes] = corollary_samples(spec_a, spec_b, samples, seed);
    RmtReport report{spec_a, spec_b, samples, seed, significance};
    report.ks_statistic = ks_two_sample_statistic(std::move(sum_tops), std::move(corner_maxes));
    report.critical_value = ks_critical_value(samples, samples, significance);
    report.pass = report.ks_statistic <= report.critical_value;
    return report;
}

}  // namespace ta
