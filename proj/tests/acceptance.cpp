// Acceptance suite: every release-gating property runs here, one line of
// output per criterion. Exact checks are exact; the two statistical
// criteria use fixed seeds and are therefore reproducible.

#include <atomic>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "tensoratoms/bounds.hpp"
#include "tensoratoms/dims.hpp"
#include "tensoratoms/lr.hpp"
#include "tensoratoms/measure.hpp"
#include "tensoratoms/pattern.hpp"
#include "tensoratoms/rmt.hpp"
#include "tensoratoms/rng.hpp"
#include "tensoratoms/stats.hpp"

using namespace ta;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s%s%s\n", pass ? "PASS" : "FAIL", id, title.c_str(),
                detail.empty() ? "" : " - ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::vector<std::pair<Weight, Weight>> identity_grid() {
    std::vector<std::pair<Weight, Weight>> pairs;
    for (int n = 2; n <= 4; ++n) {
        const auto grid = normalized_weight_grid(n, 4, /*include_degenerate=*/true);
        for (const auto& lam : grid)
            for (const auto& mu : grid) pairs.emplace_back(lam, mu);
    }
    return pairs;
}

// 1. nu1_from_lr == max_convolution for every shift-normalized pair with
//    n in {2,3,4} and both gaps <= 4. Exact equality.
void criterion_identity() {
    const auto pairs = identity_grid();
    std::atomic<std::size_t> checked{0};
    std::atomic<bool> ok{true};
    parallel_for(pairs.size(), [&](std::size_t i) {
        if (!check_identity(pairs[i].first, pairs[i].second)) {
            ok = false;
        } else {
            ++checked;
        }
    });
    std::ostringstream detail;
    detail << checked.load() << "/" << pairs.size() << " pairs equal";
    report(1, "distributional identity nu_1 = max corner convolution", ok && checked == pairs.size(),
           detail.str());
}

// 2. Histogram of shapes of S*T over all tableau pairs equals c * d_nu,
//    for n <= 3 and d_lambda * d_mu <= 10^4. Exact equality.
void criterion_plactic_oracle() {
    struct Cell {
        Weight lam, mu;
    };
    std::vector<Cell> cells;
    // ambient lambda_1 bounds per rank; at n = 3 the d_lambda d_mu <= 10^4
    // pair cap bites inside this ambient
    const int ambient_cap[4] = {0, 3, 8, 8};
    for (int n = 1; n <= 3; ++n) {
        std::vector<Weight> diagrams;
        std::vector<Int> parts(n, Int(0));
        auto rec = [&](auto&& self, int i) -> void {
            if (i == n) {
                diagrams.emplace_back(std::vector<Int>(parts));
                return;
            }
            const Int upper = i == 0 ? Int(ambient_cap[n]) : parts[i - 1];
            for (Int v = 0; v <= upper; ++v) {
                parts[i] = v;
                self(self, i + 1);
            }
            parts[i] = 0;
        };
        rec(rec, 0);
        for (const auto& lam : diagrams)
            for (const auto& mu : diagrams)
                if (dim_by_product(lam) * dim_by_product(mu) <= 10000)
                    cells.push_back({lam, mu});
    }

    std::atomic<bool> ok{true};
    std::atomic<std::size_t> pairs_total{0};
    parallel_for(cells.size(), [&](std::size_t i) {
        const auto& [lam, mu] = cells[i];
        const auto hist = plactic_product_histogram(YoungDiagram(lam), YoungDiagram(mu));
        const auto coeffs = lr_coefficients(lam, mu);
        if (hist.size() != coeffs.size()) {
            ok = false;
            return;
        }
        for (const auto& [nu, tally] : hist) {
            const auto it = coeffs.find(nu);
            if (it == coeffs.end() || tally != it->second * dim_by_product(nu)) {
                ok = false;
                return;
            }
        }
        pairs_total += 1;
    });
    std::ostringstream detail;
    detail << pairs_total.load() << "/" << cells.size() << " grid cells match the plactic rule";
    report(2, "plactic Littlewood-Richardson oracle", ok && pairs_total == cells.size(),
           detail.str());
}

// 3. dim_by_counting == dim_by_product, exhaustively for n <= 5, gap <= 6.
void criterion_dimensions() {
    bool ok = true;
    std::size_t checked = 0;
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lam : normalized_weight_grid(n, 6, true)) {
            ok = ok && dim_by_counting(lam) == dim_by_product(lam);
            ++checked;
        }
    }
    ok = ok && dim_by_counting(Weight::parse("9,7,3")) == 60;
    ok = ok && dim_by_product(Weight::parse("9,7,3")) == 60;
    ok = ok && dim_by_counting(Weight::parse("2,1,0")) == 8;
    std::ostringstream detail;
    detail << checked << " weights plus the pinned values 60 and 8";
    report(3, "dimension counting vs. Weyl product", ok, detail.str());
}

// 4. Measure normalization, shift invariance for p, q in {-2..2} on the
//    criterion-1 grid, and contragredient invariance of theorem ratios.
void criterion_invariances() {
    const auto pairs = identity_grid();
    std::atomic<bool> ok{true};
    parallel_for(pairs.size(), [&](std::size_t i) {
        const auto& [lam, mu] = pairs[i];
        Rat total = 0;
        const auto measure = lr_measure(lam, mu);
        for (const auto& term : measure.terms()) total += term.atom;
        if (total != 1) ok = false;
        for (long p = -2; p <= 2 && ok; ++p)
            for (long q = -2; q <= 2 && ok; ++q)
                if (!verify_shift_invariance(lam, mu, Int(p), Int(q))) ok = false;
        const auto direct = theorem_ratio(lam, mu);
        const auto barred = theorem_ratio(lam.contragredient(), mu.contragredient());
        if (direct.lhs != barred.lhs || direct.vacuous != barred.vacuous ||
            direct.ratio != barred.ratio)
            ok = false;
    });
    std::ostringstream detail;
    detail << pairs.size() << " pairs, 25 shifts each";
    report(4, "normalization, shift and contragredient invariance", ok, detail.str());
}

// 5. Grid suprema for the two bounds, with the exact n = 2 first-row value.
void criterion_empirical_constants() {
    bool ok = true;
    std::ostringstream detail;
    for (int n = 2; n <= 3; ++n) {
        const auto scan = theorem_scan(n, 6, 2);
        ok = ok && scan.supremum > 0;
        const auto& best = scan.rows[scan.argmax];
        detail << "C_" << n << " >= " << scan.supremum.get_str() << " at lambda="
               << best.lambda.to_string() << " mu=" << best.mu->to_string() << "; ";
    }
    for (int n = 2; n <= 3; ++n) {
        const auto scan = firstrow_scan(n, n == 2 ? 20 : 6);
        ok = ok && scan.supremum > 0;
        detail << "D_" << n << " >= " << scan.supremum.get_str() << "; ";
        if (n == 2) ok = ok && scan.supremum == make_rat(20, 21);
    }
    report(5, "empirical constants from grid suprema", ok, detail.str());
}

// 6. Saturation family: exact support, multiplicity one, atom lower bound.
void criterion_saturation() {
    bool ok = true;
    std::size_t cells = 0;
    for (int n = 2; n <= 3; ++n) {
        for (const auto& cell : saturation_scan(n, 20)) {
            const Int min_nm = std::min(cell.big_n, cell.big_m);
            ok = ok && cell.support_exact && cell.all_multiplicity_one;
            ok = ok && cell.support_count == min_nm + 1;
            ok = ok && cell.bound.lhs * Rat(min_nm + 1) >= 1;
            ++cells;
        }
    }
    std::ostringstream detail;
    detail << cells << " cells with N,M <= 20";
    report(6, "saturation of the bound on one-row families", ok, detail.str());
}

// 7. Uniform sampler: chi-square against the exhaustive pattern list at
//    significance 0.001 with 10^5 seeded samples per shape.
void criterion_sampler() {
    bool ok = true;
    std::ostringstream detail;
    const int draws = 100000;
    for (const char* shape_text : {"2,1,0", "1,1,0", "3,1", "9,7,3"}) {
        const Weight shape = Weight::parse(shape_text);
        const auto all = enumerate_patterns(shape, Int(1000));
        std::map<GTPattern, int> counts;
        for (int i = 0; i < draws; ++i)
            ++counts[sample_uniform_pattern(shape, derive_stream_seed(20240917, i))];
        std::vector<double> observed, expected;
        for (const auto& p : all) {
            observed.push_back(counts.count(p) ? counts.at(p) : 0.0);
            expected.push_back(static_cast<double>(draws) / all.size());
        }
        const auto result = chi2_goodness_of_fit(observed, expected);
        ok = ok && result.p_value > 0.001;
        detail << shape_text << ": p=" << result.p_value << "; ";
    }
    report(7, "sampler chi-square goodness of fit", ok, detail.str());
}

// 8. Corner-process corollary: two-sample KS at significance 0.001 with
//    10^5 samples per stream, spectra with entries in {-1,0,1,2}.
void criterion_rmt() {
    const std::size_t samples = 100000;
    const std::vector<std::pair<std::string, std::string>> grid = {
        {"1,0", "2,-1"},        {"1,-1", "1,0"},           // n = 2
        {"2,1,0", "1,0,-1"},    {"2,0,-1", "1,1,0"},       // n = 3
        {"2,1,0,-1", "1,1,0,0"}, {"2,2,-1,-1", "1,0,0,-1"}  // n = 4
    };
    bool ok = true;
    std::ostringstream detail;
    std::uint64_t seed = 90210;
    for (const auto& [a, b] : grid) {
        const auto report_ab = corollary_experiment(Spectrum::parse(a), Spectrum::parse(b),
                                                    samples, seed++, 0.001);
        ok = ok && report_ab.pass;
        detail << "(" << a << ")x(" << b << "): KS=" << report_ab.ks_statistic << "; ";
    }
    // scalar B: both statistics share the law of top(A) + beta
    const auto scalar = corollary_experiment(Spectrum::parse("2,1,0"), Spectrum::parse("1,1,1"),
                                             samples, seed, 0.001);
    ok = ok && scalar.pass;
    detail << "scalar-B KS=" << scalar.ks_statistic;
    report(8, "random-matrix corollary (two-sample KS)", ok, detail.str());
}

// 9. Rounding closure: 10^4 rejection-sampled real patterns per shape all
//    round to valid integer patterns.
void criterion_rounding() {
    bool ok = true;
    std::size_t rounded = 0;
    Xoshiro256 rng(31337);
    // shapes with distinct parts keep the interlacing polytope
    // full-dimensional, so box rejection terminates
    for (const char* shape_text : {"2,0", "3,1", "2,1,0", "4,2,0", "2,1,0,-1"}) {
        const Weight shape = Weight::parse(shape_text);
        const int n = shape.rank();
        const double lo = shape.last().get_d(), hi = shape.first().get_d();
        int accepted = 0;
        long attempts = 0;
        while (accepted < 10000) {
            if (++attempts > 100000000L) {
                ok = false;
                break;
            }
            std::vector<std::vector<double>> rows;
            rows.emplace_back();
            for (const auto& part : shape.parts()) rows.back().push_back(part.get_d());
            bool valid = true;
            for (int len = n - 1; len >= 1 && valid; --len) {
                std::vector<double> row;
                for (int i = 0; i < len; ++i) row.push_back(lo + (hi - lo) * rng.next_double());
                for (int i = 0; i + 1 < len; ++i) valid = valid && row[i] >= row[i + 1];
                const auto& above = rows.back();
                for (int i = 0; i < len && valid; ++i)
                    valid = valid && above[i] >= row[i] && row[i] >= above[i + 1];
                rows.push_back(std::move(row));
            }
            if (!valid) continue;
            ++accepted;
            try {
                round_real_pattern(RealGTPattern(rows));
                ++rounded;
            } catch (const std::exception&) {
                ok = false;
            }
        }
    }
    std::ostringstream detail;
    detail << rounded << " real patterns rounded to valid integer patterns";
    report(9, "rounding closure of the interlacing system", ok && rounded == 50000, detail.str());
}

}  // namespace

int main() {
    criterion_identity();
    criterion_plactic_oracle();
    criterion_dimensions();
    criterion_invariances();
    criterion_empirical_constants();
    criterion_saturation();
    criterion_sampler();
    criterion_rmt();
    criterion_rounding();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
