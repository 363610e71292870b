#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "tensoratoms/rng.hpp"

namespace ta {

using Complex = std::complex<double>;
using CMatrix = std::vector<std::vector<Complex>>;

// Weakly decreasing real n-vector of prescribed eigenvalues.
class Spectrum {
public:
    explicit Spectrum(std::vector<double> values);
    static Spectrum parse(const std::string& text);

    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<double>& values() const { return values_; }
    bool is_constant() const { return values_.front() == values_.back(); }
    std::string to_string() const;

private:
    std::vector<double> values_;
};

// n x n Hermitian matrix built as U diag(spec) U^*.
struct HermitianSample {
    CMatrix entries;
    int size() const { return static_cast<int>(entries.size()); }
};

// Haar-distributed unitary: QR of a complex Ginibre matrix, each Q column
// rescaled by the phase of the matching R diagonal entry (the uncorrected
// QR is not Haar).
CMatrix haar_unitary(int n, Xoshiro256& rng);

// Eigenvalues (descending) and eigenvectors (columns of `vectors`) of a
// Hermitian matrix by cyclic Jacobi rotations. Throws numerics_error when
// the off-diagonal mass has not dropped below tolerance within 100 sweeps.
struct EigenSystem {
    std::vector<double> values;
    CMatrix vectors;
};
EigenSystem hermitian_eigen(CMatrix a);

HermitianSample sample_invariant_hermitian(const Spectrum& spec, std::uint64_t seed);

// a_k = largest eigenvalue of the leading k x k corner, k = 1..n; weakly
// increasing by Cauchy interlacing.
std::vector<double> corner_top_eigs(const HermitianSample& m);

struct RmtReport {
    Spectrum spec_a;
    Spectrum spec_b;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double significance = 0.0;
    double ks_statistic = 0.0;
    double critical_value = 0.0;
    bool pass = false;
};

// The two independent sample streams behind the experiment: .first holds
// top eigenvalues of A+B, .second the max corner sums of fresh samples.
// Sample s consumes the four streams derived from (seed, 4s..4s+3).
std::pair<std::vector<double>, std::vector<double>> corollary_samples(const Spectrum& spec_a,
                                                                      const Spectrum& spec_b,
                                                                      std::size_t samples,
                                                                      std::uint64_t seed);

// Draws two independent streams of `samples` values each - the top
// eigenvalue of A+B, and max_{k+l=n+1} a_k+b_l from fresh samples - and
// compares them with a two-sample Kolmogorov-Smirnov test.
RmtReport corollary_experiment(const Spectrum& spec_a, const Spectrum& spec_b,
                               std::size_t samples, std::uint64_t seed, double significance);

}  // namespace ta
