#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tensoratoms/lr.hpp"
#include "tensoratoms/measure.hpp"
#include "tensoratoms/weight.hpp"

namespace ta {

// One evaluated bound instance: lhs is the extremal atom, rhs_scale the
// variable part of the bound, ratio their exact quotient. Degenerate gaps
// make the bound vacuous (scale and ratio are then 0 by convention).
struct BoundReport {
    Weight lambda = Weight(std::vector<Int>{Int(0)});
    std::optional<Weight> mu;  // theorem-style reports
    std::optional<int> k;      // first-row reports
    Rat lhs = Rat(0);
    Rat rhs_scale = Rat(0);
    Rat ratio = Rat(0);
    bool vacuous = false;
    std::string witness;  // argmax nu as "a,b,c" or the argmax integer x
};

// The nu with the largest atom of P_{lambda,mu} and its exact mass; ties
// broken by lexicographically smallest nu.
std::pair<Weight, Rat> max_atom(const Weight& lambda, const Weight& mu);

// ratio = max_atom / (1/(lambda_1-lambda_n) + 1/(mu_1-mu_n)).
BoundReport theorem_ratio(const Weight& lambda, const Weight& mu);

// ratio = max_x P(a_k = x) * (lambda_1 - lambda_{n+1-k}), 1 <= k <= n-1.
BoundReport firstrow_ratio(const Weight& lambda, int k, const Int& row_cap = Int(kDefaultRowCap));

// SL(n) corollary: with lambda_n = mu_n = 0 and positive lambda_1, mu_1,
// checks d_nu/(d_lambda d_mu) <= C (1/lambda_1 + 1/mu_1) for every nu in
// the support. The failing nu, if any, is reported through `witness`.
bool sln_corollary_check(const Weight& lambda, const Weight& mu, const Rat& c_bound,
                         Weight* witness = nullptr);

// Smallest i with lambda_i - lambda_{i+1} >= (lambda_1 - lambda_n)/(n-1),
// together with that gap. Requires lambda_1 > lambda_n.
std::pair<int, Int> pigeonhole_witness(const Weight& lambda);

// One cell of the saturation family lambda = (N,0,...), mu = (M,0,...).
// The constraint set {(A,B,0,..): A+B = N+M, A >= max(N,M)} has
// min(N,M)+1 elements; the actual support count is recorded next to
// min(N,M) so the off-by-one is visible in reports.
struct SaturationReport {
    int big_n = 0;
    int big_m = 0;
    BoundReport bound;           // max-atom report for the cell
    Int support_count;           // actual size of the support
    Int min_nm;                  // min(N,M)
    bool support_exact = false;  // support == the constraint set above
    bool all_multiplicity_one = false;
    bool atom_bound_ok = false;  // max atom >= 1/support_count
};

// Scans N, M in 1..nmax.
std::vector<SaturationReport> saturation_scan(int n, int nmax);

// Grid scans feeding the empirical constants. Rows are ordered by
// (lambda, mu) resp. (lambda, k); the supremum row index is reported.
struct ScanResult {
    std::vector<BoundReport> rows;
    Rat supremum = Rat(0);
    std::size_t argmax = 0;
};

// All shift-normalized pairs with 1 <= gap <= max_gap on both sides.
ScanResult theorem_scan(int n, int max_gap, int workers = 1);

// All shift-normalized lambda with 1 <= gap <= max_gap and k in 1..n-1
// (or the single k when `only_k` is set).
ScanResult firstrow_scan(int n, int max_gap, std::optional<int> only_k = std::nullopt,
                         int workers = 1);

// Shift-normalized weights of rank n with gap between 1 and max_gap
// (lambda_n = 0, lambda_1 <= max_gap, lambda_1 >= 1), in lexicographic
// order. Shared by the scans and the acceptance suite.
std::vector<Weight> normalized_weight_grid(int n, int max_gap, bool include_degenerate = false);

}  // namespace ta
