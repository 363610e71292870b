#include "tensoratoms/lr.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

#include "tensoratoms/dims.hpp"
#include "tensoratoms/plactic.hpp"

namespace ta {

LRDecomposition::LRDecomposition(Weight lambda, Weight mu, std::vector<LRTerm> terms)
    : lambda_(std::move(lambda)),
      mu_(std::move(mu)),
      terms_(std::move(terms)),
      dim_lambda_(dim_by_product(lambda_)),
      dim_mu_(dim_by_product(mu_)) {
    std::sort(terms_.begin(), terms_.end(),
              [](const LRTerm& a, const LRTerm& b) { return b.nu < a.nu; });
    Rat total = 0;
    Int weighted = 0;
    const Int denom = dim_lambda_ * dim_mu_;
    for (const auto& term : terms_) {
        if (term.multiplicity < 1) throw error("internal: LR term with multiplicity < 1");
        const Int isotypic = term.multiplicity * dim_by_product(term.nu);
        if (term.atom != make_rat(isotypic, denom))
            throw error("internal: LR atom inconsistent with multiplicity");
        total += term.atom;
        weighted += isotypic;
    }
    if (total != 1) throw error("internal: LR atoms do not sum to 1");
    if (weighted != denom) throw error("internal: sum of c * d_nu does not match d_lambda * d_mu");
}

Int LRDecomposition::multiplicity(const Weight& nu) const {
    for (const auto& term : terms_)
        if (term.nu == nu) return term.multiplicity;
    return 0;
}

Rat LRDecomposition::atom(const Weight& nu) const {
    for (const auto& term : terms_)
        if (term.nu == nu) return term.atom;
    return Rat(0);
}

namespace {

// Enumerates Littlewood-Richardson skew tableaux extending lambda with
// content mu: for each letter j = 1..n in turn a horizontal strip of
// mu[j-1] boxes is added to the growing shape, subject to the lattice
// condition on the reverse reading word, which row by row reads
// (# letter j in rows <= i) <= (# letter j-1 in rows <= i-1).
// Each complete filling contributes one LR tableau of its final shape nu.
class LRCounter {
public:
    LRCounter(const Weight& lambda, const Weight& mu)
        : n_(lambda.rank()), shape_(lambda.parts()), mu_(mu.parts()) {
        cum_.assign(n_ + 1, std::vector<Int>(n_ + 1, Int(0)));
    }

    std::map<Weight, Int> run() {
        place_letter(1);
        return std::move(tally_);
    }

private:
    void place_letter(int j) {
        if (j > n_) {
            ++tally_[Weight(std::vector<Int>(shape_))];
            return;
        }
        const std::vector<Int> before = shape_;
        place_row(j, 0, mu_[j - 1], before);
    }

    // Distributes `remaining` boxes of letter j over rows i, i+1, ...;
    // `before` is the shape as of the start of this strip.
    void place_row(int j, int i, const Int& remaining, const std::vector<Int>& before) {
        if (i == n_) {
            if (remaining == 0) place_letter(j + 1);
            return;
        }
        auto& cum = cum_[j];
        Int cap = remaining;
        if (i == 0) {
            if (j > 1) cap = 0;  // rows above the first hold no letter j-1 yet
        } else {
            cap = std::min(cap, Int(before[i - 1] - before[i]));  // horizontal strip
            if (j > 1) cap = std::min(cap, Int(cum_[j - 1][i] - cum[i]));
        }
        for (Int take = 0; take <= cap; ++take) {
            shape_[i] = before[i] + take;
            cum[i + 1] = cum[i] + take;
            place_row(j, i + 1, remaining - take, before);
        }
        shape_[i] = before[i];
        cum[i + 1] = cum[i];
    }

    int n_;
    std::vector<Int> shape_;
    std::vector<Int> mu_;
    // cum_[j][i]: copies of letter j placed in rows 0..i-1 along the current path
    std::vector<std::vector<Int>> cum_;
    std::map<Weight, Int> tally_;
};

// Decompositions of shift-normalized pairs are cached: scans and the
// shift-invariance checks revisit the same normalized pair many times.
std::map<Weight, Int> lr_normalized_cached(const Weight& lam0, const Weight& mu0) {
    static std::map<std::pair<std::vector<Int>, std::vector<Int>>, std::map<Weight, Int>> cache;
    static std::mutex cache_mutex;
    constexpr std::size_t kMaxEntries = 1 << 16;

    // c is symmetric in (lambda, mu); canonicalize the key order.
    const bool swapped = mu0.parts() < lam0.parts();
    const Weight& a = swapped ? mu0 : lam0;
    const Weight& b = swapped ? lam0 : mu0;
    const std::pair key{a.parts(), b.parts()};
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto result = LRCounter(a, b).run();
    {
        std::lock_guard lock(cache_mutex);
        if (cache.size() < kMaxEntries) cache.emplace(key, result);
    }
    return result;
}

}  // namespace

std::map<Weight, Int> lr_coefficients(const Weight& lambda, const Weight& mu) {
    if (lambda.rank() != mu.rank()) throw validation_error("weights must have the same rank");
    const auto [lam0, p] = lambda.normalized();
    const auto [mu0, q] = mu.normalized();
    auto raw = lr_normalized_cached(lam0, mu0);
    const Int back = -(p + q);
    if (back == 0) return raw;
    std::map<Weight, Int> out;
    for (auto& [nu0, c] : raw) out.emplace(nu0.shifted(back), c);
    return out;
}

std::map<Weight, Int> plactic_product_histogram(const YoungDiagram& lambda, const YoungDiagram& mu,
                                                const Int& pair_cap) {
    if (lambda.rank() != mu.rank()) throw validation_error("shapes must have the same rank");
    const Int pairs = dim_by_product(lambda.weight()) * dim_by_product(mu.weight());
    if (pairs > pair_cap)
        throw cap_exceeded("histogram would enumerate " + pairs.get_str() +
                           " tableau pairs, above the cap of " + pair_cap.get_str());
    std::map<Weight, Int> tally;
    const auto left = enumerate_tableaux(lambda, pair_cap);
    const auto right = enumerate_tableaux(mu, pair_cap);
    for (const auto& s : left) {
        for (const auto& t : right) {
            ++tally[plactic_product(s, t).shape().weight()];
        }
    }
    return tally;
}

LRDecomposition lr_measure(const Weight& lambda, const Weight& mu) {
    const auto coeffs = lr_coefficients(lambda, mu);
    const Int denom = dim_by_product(lambda) * dim_by_product(mu);
    std::vector<LRTerm> terms;
    terms.reserve(coeffs.size());
    for (const auto& [nu, c] : coeffs)
        terms.push_back({nu, c, make_rat(c * dim_by_product(nu), denom)});
    return LRDecomposition(lambda, mu, std::move(terms));
}

bool verify_shift_invariance(const Weight& lambda, const Weight& mu, const Int& p, const Int& q) {
    const auto base = lr_measure(lambda, mu);
    const auto shifted = lr_measure(lambda.shifted(p), mu.shifted(q));
    if (base.terms().size() != shifted.terms().size()) return false;
    const Int back = -(p + q);
    for (std::size_t i = 0; i < base.terms().size(); ++i) {
        const auto& a = base.terms()[i];
        const auto& b = shifted.terms()[i];
        if (b.nu.shifted(back) != a.nu) return false;
        if (b.multiplicity != a.multiplicity || b.atom != a.atom) return false;
    }
    return true;
}

}  // namespace ta
