#pragma once

#include <cstdint>
#include <map>

#include "tensoratoms/lr.hpp"
#include "tensoratoms/pattern.hpp"
#include "tensoratoms/weight.hpp"

namespace ta {

inline constexpr unsigned long kDefaultRowCap = 1000000;

// Finite probability distribution with exact rational masses. Outcomes are
// integers or integer vectors; masses are positive and sum to exactly 1.
template <typename K>
class ExactDist {
public:
    static ExactDist from_counts(const std::map<K, Int>& counts) {
        Int total = 0;
        for (const auto& [k, c] : counts) total += c;
        if (total <= 0) throw error("distribution with empty support");
        ExactDist dist;
        for (const auto& [k, c] : counts) {
            if (c < 0) throw error("negative count");
            if (c > 0) dist.mass_.emplace(k, make_rat(c, total));
        }
        return dist;
    }

    static ExactDist from_masses(std::map<K, Rat> masses) {
        Rat total = 0;
        for (auto it = masses.begin(); it != masses.end();) {
            if (it->second == 0) {
                it = masses.erase(it);
                continue;
            }
            if (it->second < 0) throw error("negative mass");
            total += it->second;
            ++it;
        }
        if (total != 1) throw error("masses do not sum to 1");
        ExactDist dist;
        dist.mass_ = std::move(masses);
        return dist;
    }

    static ExactDist point_mass(const K& outcome) {
        ExactDist dist;
        dist.mass_.emplace(outcome, Rat(1));
        return dist;
    }

    const std::map<K, Rat>& support() const { return mass_; }

    Rat mass(const K& outcome) const {
        auto it = mass_.find(outcome);
        return it == mass_.end() ? Rat(0) : it->second;
    }

    // Largest mass and its smallest attaining outcome.
    std::pair<K, Rat> max_atom() const {
        auto best = mass_.begin();
        for (auto it = mass_.begin(); it != mass_.end(); ++it) {
            if (it->second > best->second) best = it;
        }
        return {best->first, best->second};
    }

    friend bool operator==(const ExactDist& a, const ExactDist& b) { return a.mass_ == b.mass_; }

private:
    ExactDist() = default;
    std::map<K, Rat> mass_;
};

using IntDist = ExactDist<Int>;
using VecDist = ExactDist<std::vector<Int>>;

// Exact uniform sample over all patterns of shape lambda. Rows are drawn
// top-down; within a row, coordinates are fixed one at a time with
// probability proportional to the number of pattern completions, so the
// full candidate-row set (capped at `row_cap` rows per level) is never
// materialized. Deterministic given the seed.
GTPattern sample_uniform_pattern(const Weight& lambda, std::uint64_t seed,
                                 const Int& row_cap = Int(kDefaultRowCap));

// Exact joint law of (a_1, ..., a_{n-1}) under the uniform pattern law.
VecDist first_row_joint(const Weight& lambda, const Int& row_cap = Int(kDefaultRowCap));

// Marginal of the joint at coordinate k; k = n gives the point mass at
// lambda_1 (the convention a_n = lambda_1).
IntDist marginal_ak(const Weight& lambda, int k, const Int& row_cap = Int(kDefaultRowCap));

// Law of max_{k+l=n+1} (a_k + b_l) for independent uniform patterns of
// shapes lambda and mu.
IntDist max_convolution(const Weight& lambda, const Weight& mu,
                        const Int& row_cap = Int(kDefaultRowCap));

// Pushforward of the Littlewood-Richardson measure under nu -> nu_1.
IntDist nu1_from_lr(const Weight& lambda, const Weight& mu);

// True iff max_convolution and nu1_from_lr agree as exact distributions.
bool check_identity(const Weight& lambda, const Weight& mu,
                    const Int& row_cap = Int(kDefaultRowCap));

}  // namespace ta
