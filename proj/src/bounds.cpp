#include "tensoratoms/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "tensoratoms/dims.hpp"

namespace ta {

namespace {

// Runs fn(i) for i in [0, count) across `workers` threads. Results land in
// caller-owned slots indexed by i, so output order is independent of the
// schedule; the first captured exception is rethrown.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

ScanResult finish_scan(std::vector<BoundReport> rows) {
    ScanResult result;
    result.rows = std::move(rows);
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const auto& row = result.rows[i];
        if (row.vacuous) continue;
        if (row.ratio > result.supremum) {
            result.supremum = row.ratio;
            result.argmax = i;
        }
    }
    return result;
}

}  // namespace

std::pair<Weight, Rat> max_atom(const Weight& lambda, const Weight& mu) {
    const auto measure = lr_measure(lambda, mu);
    const auto& terms = measure.terms();
    // terms carry nu in lexicographically decreasing order; scanning from
    // the back makes ties resolve to the smallest nu
    std::size_t best = terms.size() - 1;
    for (std::size_t i = terms.size(); i-- > 0;) {
        if (terms[i].atom > terms[best].atom) best = i;
    }
    return {terms[best].nu, terms[best].atom};
}

BoundReport theorem_ratio(const Weight& lambda, const Weight& mu) {
    BoundReport report;
    report.lambda = lambda;
    report.mu = mu;
    const auto [nu, atom] = max_atom(lambda, mu);
    report.lhs = atom;
    report.witness = nu.to_string();
    if (lambda.gap() == 0 || mu.gap() == 0) {
        report.vacuous = true;
        return report;
    }
    report.rhs_scale = make_rat(1, lambda.gap()) + make_rat(1, mu.gap());
    report.ratio = report.lhs / report.rhs_scale;
    return report;
}

BoundReport firstrow_ratio(const Weight& lambda, int k, const Int& row_cap) {
    const int n = lambda.rank();
    if (k < 1 || k >= n) throw validation_error("firstrow_ratio needs 1 <= k <= n-1");
    BoundReport report;
    report.lambda = lambda;
    report.k = k;
    const auto marginal = marginal_ak(lambda, k, row_cap);
    const auto [x, mass] = marginal.max_atom();
    report.lhs = mass;
    report.witness = x.get_str();
    const Int gap = lambda.first() - lambda[static_cast<std::size_t>(n - k)];
    if (gap == 0) {
        report.vacuous = true;
        return report;
    }
    report.rhs_scale = make_rat(1, gap);
    report.ratio = report.lhs * Rat(gap);
    return report;
}

bool sln_corollary_check(const Weight& lambda, const Weight& mu, const Rat& c_bound,
                         Weight* witness) {
    if (lambda.rank() != mu.rank()) throw validation_error("weights must have the same rank");
    if (lambda.last() != 0 || mu.last() != 0)
        throw validation_error("SL(n) weights must be normalized to last component zero");
    if (lambda.first() <= 0 || mu.first() <= 0)
        throw validation_error("SL(n) corollary needs lambda_1 > 0 and mu_1 > 0");
    const Rat bound = c_bound * (make_rat(1, lambda.first()) + make_rat(1, mu.first()));
    const Int denom = dim_by_product(lambda) * dim_by_product(mu);
    const auto measure = lr_measure(lambda, mu);
    for (const auto& term : measure.terms()) {
        if (make_rat(dim_by_product(term.nu), denom) > bound) {
            if (witness) *witness = term.nu;
            return false;
        }
    }
    return true;
}

std::pair<int, Int> pigeonhole_witness(const Weight& lambda) {
    const int n = lambda.rank();
    if (n < 2 || lambda.gap() == 0)
        throw validation_error("pigeonhole_witness needs lambda_1 > lambda_n");
    const Int total = lambda.gap();
    for (int i = 1; i < n; ++i) {
        const Int gap = lambda[i - 1] - lambda[i];
        // gap >= total/(n-1), compared in integers
        if (gap * (n - 1) >= total) return {i, gap};
    }
    throw error("internal: pigeonhole had no witness");
}

std::vector<SaturationReport> saturation_scan(int n, int nmax) {
    if (n < 2) throw validation_error("saturation scan needs n >= 2");
    if (nmax < 1) throw validation_error("saturation scan needs Nmax >= 1");
    std::vector<SaturationReport> out;
    out.reserve(static_cast<std::size_t>(nmax) * nmax);
    for (int big_n = 1; big_n <= nmax; ++big_n) {
        for (int big_m = 1; big_m <= nmax; ++big_m) {
            std::vector<Int> lam(static_cast<std::size_t>(n), Int(0));
            std::vector<Int> mur(static_cast<std::size_t>(n), Int(0));
            lam[0] = big_n;
            mur[0] = big_m;
            const Weight lambda{std::move(lam)}, mu{std::move(mur)};
            const auto measure = lr_measure(lambda, mu);

            SaturationReport cell;
            cell.big_n = big_n;
            cell.big_m = big_m;
            cell.bound = theorem_ratio(lambda, mu);
            cell.support_count = static_cast<unsigned long>(measure.terms().size());
            cell.min_nm = std::min(big_n, big_m);

            const Int total = Int(big_n) + Int(big_m);
            const Int amin = std::max(Int(big_n), Int(big_m));
            const Int expected_count = total - amin + 1;  // A in [max(N,M), N+M]
            bool members_ok = true;
            cell.all_multiplicity_one = true;
            for (const auto& term : measure.terms()) {
                const auto& nu = term.nu;
                bool ok = nu[0] >= amin && nu[0] + nu[1] == total;
                for (int i = 2; i < n; ++i) ok = ok && nu[static_cast<std::size_t>(i)] == 0;
                members_ok = members_ok && ok;
                if (term.multiplicity != 1) cell.all_multiplicity_one = false;
            }
            cell.support_exact = members_ok && cell.support_count == expected_count;
            cell.atom_bound_ok = cell.bound.lhs * Rat(cell.support_count) >= 1;
            out.push_back(std::move(cell));
        }
    }
    return out;
}

std::vector<Weight> normalized_weight_grid(int n, int max_gap, bool include_degenerate) {
    if (n < 1) throw validation_error("rank must be >= 1");
    if (max_gap < 0) throw validation_error("max_gap must be >= 0");
    std::vector<Weight> out;
    std::vector<Int> parts(static_cast<std::size_t>(n), Int(0));
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n - 1) {
            if (include_degenerate || parts[0] >= 1) out.emplace_back(parts);
            return;
        }
        const Int upper = i == 0 ? Int(max_gap) : parts[static_cast<std::size_t>(i - 1)];
        for (Int v = upper; v >= 0; --v) {
            parts[static_cast<std::size_t>(i)] = v;
            self(self, i + 1);
        }
        parts[static_cast<std::size_t>(i)] = 0;
    };
    if (n == 1) {
        out.emplace_back(std::vector<Int>{Int(0)});
        return out;
    }
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

ScanResult theorem_scan(int n, int max_gap, int workers) {
    const auto grid = normalized_weight_grid(n, max_gap, false);
    const std::size_t cells = grid.size() * grid.size();
    std::vector<BoundReport> rows(cells);
    parallel_for(cells, workers, [&](std::size_t idx) {
        const auto& lambda = grid[idx / grid.size()];
        const auto& mu = grid[idx % grid.size()];
        rows[idx] = theorem_ratio(lambda, mu);
    });
    return finish_scan(std::move(rows));
}

ScanResult firstrow_scan(int n, int max_gap, std::optional<int> only_k, int workers) {
    if (n < 2) throw validation_error("firstrow scan needs n >= 2");
    if (only_k && (*only_k < 1 || *only_k >= n))
        throw validation_error("k must lie in 1..n-1");
    const auto grid = normalized_weight_grid(n, max_gap, false);
    std::vector<int> ks;
    if (only_k)
        ks.push_back(*only_k);
    else
        for (int k = 1; k < n; ++k) ks.push_back(k);
    const std::size_t cells = grid.size() * ks.size();
    std::vector<BoundReport> rows(cells);
    parallel_for(cells, workers, [&](std::size_t idx) {
        const auto& lambda = grid[idx / ks.size()];
        const int k = ks[idx % ks.size()];
        rows[idx] = firstrow_ratio(lambda, k);
    });
    return finish_scan(std::move(rows));
}

}  // namespace ta
