#include "tensoratoms/measure.hpp"

#include <mutex>

#include "tensoratoms/dims.hpp"
#include "tensoratoms/rng.hpp"

namespace ta {

namespace {

void check_row_cap(const std::vector<Int>& row, const Int& row_cap) {
    if (interlacing_row_count(row) > row_cap)
        throw cap_exceeded("interlacing-row enumeration cap exceeded below row (" +
                           Weight(row).to_string() + ")");
}

// Sum of count_completions over all interlacing rows extending `prefix`
// (coordinates prefix.size().. of a row below `x`).
Int sum_over_extensions(const std::vector<Int>& x, std::vector<Int>& prefix) {
    const std::size_t m = x.size() - 1;
    if (prefix.size() == m) return count_completions(prefix);
    const std::size_t i = prefix.size();
    Int total = 0;
    for (Int v = x[i + 1]; v <= x[i]; ++v) {
        prefix.push_back(v);
        total += sum_over_extensions(x, prefix);
        prefix.pop_back();
    }
    return total;
}

// Unnormalized joint counts of (a_1, ..., a_{n-1}) for a shift-normalized
// shape (last part zero). Memoized.
std::map<std::vector<Int>, Int> joint_counts_normalized(const std::vector<Int>& shape,
                                                        const Int& row_cap) {
    static std::map<std::vector<Int>, std::map<std::vector<Int>, Int>> memo;
    static std::mutex memo_mutex;

    if (shape.size() == 1) return {{{}, Int(1)}};
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = memo.find(shape); it != memo.end()) return it->second;
    }
    check_row_cap(shape, row_cap);
    std::map<std::vector<Int>, Int> counts;
    for_each_interlacing_row(shape, [&](const std::vector<Int>& next) {
        const Int base = next.back();
        std::vector<Int> next0(next);
        for (auto& x : next0) x -= base;
        const auto sub = joint_counts_normalized(next0, row_cap);
        for (const auto& [key0, c] : sub) {
            std::vector<Int> key;
            key.reserve(key0.size() + 1);
            for (const auto& x : key0) key.push_back(x + base);
            key.push_back(next[0]);
            counts[std::move(key)] += c;
        }
    });
    {
        std::lock_guard lock(memo_mutex);
        memo.emplace(shape, counts);
    }
    return counts;
}

// b_1, i.e. the first joint coordinate, falling back to mu_1 when n = 1.
const Int& b_first(const std::vector<Int>& b, const Weight& mu) {
    return b.empty() ? mu.first() : b[0];
}

std::map<std::vector<Int>, Int> joint_counts(const Weight& lambda, const Int& row_cap) {
    const auto [lam0, p] = lambda.normalized();
    auto counts0 = joint_counts_normalized(lam0.parts(), row_cap);
    if (p == 0) return counts0;
    std::map<std::vector<Int>, Int> counts;
    for (auto& [key0, c] : counts0) {
        std::vector<Int> key(key0);
        for (auto& x : key) x -= p;
        counts.emplace(std::move(key), c);
    }
    return counts;
}

}  // namespace

GTPattern sample_uniform_pattern(const Weight& lambda, std::uint64_t seed, const Int& row_cap) {
    std::vector<std::vector<Int>> rows{lambda.parts()};
    // Level k below the top draws from its own stream, so a row's bits do
    // not depend on how many rejection retries earlier rows consumed.
    for (std::uint64_t level = 1; rows.back().size() > 1; ++level) {
        const std::vector<Int>& x = rows.back();
        check_row_cap(x, row_cap);
        Xoshiro256 rng(derive_stream_seed(seed, level));
        Int u = uniform_below(rng, count_completions(x));
        // Walk coordinates; u stays a uniform index into the remaining block.
        std::vector<Int> y;
        const std::size_t m = x.size() - 1;
        for (std::size_t i = 0; i < m; ++i) {
            for (Int v = x[i + 1];; ++v) {
                if (v > x[i]) throw error("internal: sampler walked past its block");
                y.push_back(v);
                const Int block = sum_over_extensions(x, y);
                if (u < block) break;
                u -= block;
                y.pop_back();
            }
        }
        rows.push_back(std::move(y));
    }
    return GTPattern(std::move(rows));
}

VecDist first_row_joint(const Weight& lambda, const Int& row_cap) {
    return VecDist::from_counts(joint_counts(lambda, row_cap));
}

IntDist marginal_ak(const Weight& lambda, int k, const Int& row_cap) {
    const int n = lambda.rank();
    if (k < 1 || k > n) throw validation_error("k must lie in 1..n");
    if (k == n) return IntDist::point_mass(lambda.first());
    std::map<Int, Int> counts;
    for (const auto& [key, c] : joint_counts(lambda, row_cap)) counts[key[k - 1]] += c;
    return IntDist::from_counts(counts);
}

IntDist max_convolution(const Weight& lambda, const Weight& mu, const Int& row_cap) {
    const int n = lambda.rank();
    if (mu.rank() != n) throw validation_error("weights must have the same rank");
    const auto a_counts = joint_counts(lambda, row_cap);
    const auto b_counts = joint_counts(mu, row_cap);
    std::map<Int, Int> tally;
    for (const auto& [a, ca] : a_counts) {
        for (const auto& [b, cb] : b_counts) {
            // max over k+l = n+1 of a_k + b_l, with a_n = lambda_1 and
            // b_n = mu_1 adjoined
            Int best = lambda.first() + b_first(b, mu);  // k = n, l = 1
            for (int k = 1; k < n; ++k) {
                const int l = n + 1 - k;
                Int value = a[k - 1] + (l == n ? mu.first() : b[l - 1]);
                if (value > best) best = value;
            }
            tally[best] += ca * cb;
        }
    }
    return IntDist::from_counts(tally);
}

IntDist nu1_from_lr(const Weight& lambda, const Weight& mu) {
    const auto measure = lr_measure(lambda, mu);
    std::map<Int, Rat> masses;
    for (const auto& term : measure.terms()) masses[term.nu[0]] += term.atom;
    return IntDist::from_masses(std::move(masses));
}

bool check_identity(const Weight& lambda, const Weight& mu, const Int& row_cap) {
    return max_convolution(lambda, mu, row_cap) == nu1_from_lr(lambda, mu);
}

}  // namespace ta
