#pragma once

#include <map>
#include <vector>

#include "tensoratoms/tableau.hpp"
#include "tensoratoms/weight.hpp"

namespace ta {

inline constexpr unsigned long kDefaultPairCap = 1000000;

// One isotypic component of lambda (x) mu.
struct LRTerm {
    Weight nu;
    Int multiplicity;  // c_{lambda,mu}^nu >= 1
    Rat atom;          // c * d_nu / (d_lambda * d_mu)
};

// Exact decomposition of a tensor product together with the
// Littlewood-Richardson measure. Terms are sorted by nu, lexicographically
// decreasing, and the atoms sum to exactly 1.
class LRDecomposition {
public:
    LRDecomposition(Weight lambda, Weight mu, std::vector<LRTerm> terms);

    const Weight& lambda() const { return lambda_; }
    const Weight& mu() const { return mu_; }
    const std::vector<LRTerm>& terms() const { return terms_; }
    const Int& dim_lambda() const { return dim_lambda_; }
    const Int& dim_mu() const { return dim_mu_; }

    // Multiplicity of nu (0 when absent).
    Int multiplicity(const Weight& nu) const;

    // Atom mass of nu (0 when absent).
    Rat atom(const Weight& nu) const;

private:
    Weight lambda_;
    Weight mu_;
    std::vector<LRTerm> terms_;
    Int dim_lambda_;
    Int dim_mu_;
};

// Exact multiplicities of every nu with c >= 1, by enumerating
// Littlewood-Richardson skew tableaux (horizontal strips with the lattice
// condition) after shift-normalizing both inputs to Young diagrams.
std::map<Weight, Int> lr_coefficients(const Weight& lambda, const Weight& mu);

// Brute-force oracle: tallies the shape of S*T over every ordered pair of
// tableaux of shapes lambda and mu. The tally of nu equals c * d_nu.
// Throws cap_exceeded when d_lambda * d_mu > pair_cap.
std::map<Weight, Int> plactic_product_histogram(const YoungDiagram& lambda, const YoungDiagram& mu,
                                                const Int& pair_cap = Int(kDefaultPairCap));

// The Littlewood-Richardson measure P_{lambda,mu}.
LRDecomposition lr_measure(const Weight& lambda, const Weight& mu);

// Checks P_{lambda+p1, mu+q1}(nu + (p+q)1) = P_{lambda,mu}(nu) atom by atom.
bool verify_shift_invariance(const Weight& lambda, const Weight& mu, const Int& p, const Int& q);

}  // namespace ta
