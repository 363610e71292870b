#include <doctest.h>

#include <map>

#include "tensoratoms/measure.hpp"
#include "tensoratoms/serialize.hpp"
#include "tensoratoms/stats.hpp"

using namespace ta;

namespace {
Weight w(const std::string& s) { return Weight::parse(s); }

std::vector<Int> vec(std::initializer_list<long> xs) {
    std::vector<Int> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}
}

TEST_CASE("sampler hits the unique constant pattern") {
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
        const auto p = sample_uniform_pattern(w("4,4,4"), seed);
        CHECK(p.shape() == w("4,4,4"));
        CHECK(p.level(1)[0] == 4);
    }
}

TEST_CASE("sampler determinism") {
    const auto a = sample_uniform_pattern(w("5,2,0"), 42);
    const auto b = sample_uniform_pattern(w("5,2,0"), 42);
    CHECK(a == b);
}

TEST_CASE("sampler frequency for (1,0)") {
    int zeros = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const auto p = sample_uniform_pattern(w("1,0"), derive_stream_seed(2024, i));
        zeros += p.level(1)[0] == 0 ? 1 : 0;
    }
    const double freq = static_cast<double>(zeros) / draws;
    CHECK(freq > 0.49);
    CHECK(freq < 0.51);
}

TEST_CASE("sampler chi-square against the exhaustive pattern list") {
    const Weight shape = w("2,1,0");
    const auto all = enumerate_patterns(shape, Int(100));
    REQUIRE(all.size() == 8);
    std::map<GTPattern, int> counts;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i)
        ++counts[sample_uniform_pattern(shape, derive_stream_seed(7, i))];
    std::vector<double> observed, expected;
    for (const auto& p : all) {
        observed.push_back(counts.count(p) ? counts.at(p) : 0.0);
        expected.push_back(static_cast<double>(draws) / all.size());
    }
    const auto result = chi2_goodness_of_fit(observed, expected);
    CHECK(result.p_value > 0.001);
}

TEST_CASE("sampler cap") {
    CHECK_THROWS_AS(sample_uniform_pattern(w("1000000,0"), 1, Int(1000)), cap_exceeded);
}

TEST_CASE("first_row_joint examples") {
    const auto j1 = first_row_joint(w("1,0,0"));
    CHECK(j1.support().size() == 3);
    CHECK(j1.mass(vec({1, 1})) == make_rat(1, 3));
    CHECK(j1.mass(vec({0, 1})) == make_rat(1, 3));
    CHECK(j1.mass(vec({0, 0})) == make_rat(1, 3));

    const auto j2 = first_row_joint(w("5,0"));
    CHECK(j2.support().size() == 6);
    for (const auto& [v, mass] : j2.support()) {
        (void)v;
        CHECK(mass == make_rat(1, 6));
    }

    const auto j3 = first_row_joint(w("4,4,4"));
    CHECK(j3.support().size() == 1);
    CHECK(j3.mass(vec({4, 4})) == 1);
}

TEST_CASE("marginal_ak examples") {
    const auto m1 = marginal_ak(w("1,0,0"), 2);
    CHECK(m1.mass(Int(0)) == make_rat(1, 3));
    CHECK(m1.mass(Int(1)) == make_rat(2, 3));

    const auto m2 = marginal_ak(w("3,1,0"), 3);
    CHECK(m2.support().size() == 1);
    CHECK(m2.mass(Int(3)) == 1);

    const auto m3 = marginal_ak(w("6,0"), 1);
    CHECK(m3.max_atom().second == make_rat(1, 7));

    CHECK_THROWS_AS(marginal_ak(w("1,0"), 3), validation_error);
}

TEST_CASE("max_convolution examples") {
    const auto d1 = max_convolution(w("1,0,0"), w("1,0,0"));
    CHECK(d1.mass(Int(2)) == make_rat(2, 3));
    CHECK(d1.mass(Int(1)) == make_rat(1, 3));

    // degenerate lambda: law equals nu1_from_lr directly
    const auto d2 = max_convolution(w("2,2,2"), w("3,1,0"));
    CHECK(d2 == nu1_from_lr(w("2,2,2"), w("3,1,0")));

    const auto d3 = max_convolution(w("4"), w("-1"));
    CHECK(d3.support().size() == 1);
    CHECK(d3.mass(Int(3)) == 1);
}

TEST_CASE("nu1_from_lr examples") {
    const auto d1 = nu1_from_lr(w("1,0,0"), w("1,0,0"));
    CHECK(d1.mass(Int(2)) == make_rat(2, 3));
    CHECK(d1.mass(Int(1)) == make_rat(1, 3));

    // Pieri formula: P(nu_1 = A) = (2A-N-M+1)/((N+1)(M+1))
    for (int n_boxes = 0; n_boxes <= 4; ++n_boxes) {
        for (int m_boxes = 0; m_boxes <= 4; ++m_boxes) {
            const auto d = nu1_from_lr(Weight({Int(n_boxes), Int(0)}),
                                       Weight({Int(m_boxes), Int(0)}));
            for (const auto& [a, mass] : d.support()) {
                CHECK(mass == make_rat(2 * a - n_boxes - m_boxes + 1,
                                       Int((n_boxes + 1) * (m_boxes + 1))));
            }
        }
    }

    const auto d2 = nu1_from_lr(w("3,1,0"), w("0,0,0"));
    CHECK(d2.support().size() == 1);
    CHECK(d2.mass(Int(3)) == 1);
}

TEST_CASE("check_identity on mixed and shifted pairs") {
    CHECK(check_identity(w("1,0,0"), w("1,0,0")));
    CHECK(check_identity(w("2,1,0"), w("1,1,0")));
    CHECK(check_identity(w("3,0,-1"), w("2,2,0")));
    // frozen law for ((2,1,0),(1,1,0)): {3 -> 7/8, 2 -> 1/8}
    const auto d = max_convolution(w("2,1,0"), w("1,1,0"));
    CHECK(d.mass(Int(3)) == make_rat(7, 8));
    CHECK(d.mass(Int(2)) == make_rat(1, 8));
}

TEST_CASE("identity on rank one") {
    CHECK(check_identity(w("4"), w("-2")));
    const auto d = max_convolution(w("4"), w("-2"));
    CHECK(d.mass(Int(2)) == 1);
}

TEST_CASE("marginals agree with exhaustive pattern histograms") {
    for (const char* s : {"2,1,0", "3,1", "2,0,-1", "2,1,1,0"}) {
        const Weight lam = w(s);
        const auto patterns = enumerate_patterns(lam, Int(100000));
        for (int k = 1; k <= lam.rank(); ++k) {
            std::map<Int, Int> hist;
            for (const auto& p : patterns) ++hist[p.first_row_vector()[k - 1]];
            CHECK(marginal_ak(lam, k) == IntDist::from_counts(hist));
        }
    }
}

TEST_CASE("max_convolution support bounds on the small grid") {
    for (int n = 2; n <= 3; ++n) {
        std::vector<Weight> grid;
        std::vector<Int> parts(n, Int(0));
        auto rec = [&](auto&& self, int i) -> void {
            if (i == n - 1) {
                grid.emplace_back(parts);
                return;
            }
            const Int upper = i == 0 ? Int(3) : parts[i - 1];
            for (Int v = 0; v <= upper; ++v) {
                parts[i] = v;
                self(self, i + 1);
            }
            parts[i] = 0;
        };
        rec(rec, 0);
        for (const auto& a : grid) {
            for (const auto& b : grid) {
                const auto d = max_convolution(a, b);
                CHECK(d.support().rbegin()->first == a.first() + b.first());
                CHECK(d.support().begin()->first >= a.last() + b.last());
            }
        }
    }
}

TEST_CASE("joint enumeration cap") {
    CHECK_THROWS_AS(first_row_joint(w("1000000,0"), Int(100)), cap_exceeded);
    CHECK_THROWS_AS(max_convolution(w("1000000,0"), w("1,0"), Int(100)), cap_exceeded);
}

TEST_CASE("joint distribution serialization") {
    const auto j = first_row_joint(w("1,0,0"));
    const auto dumped = dist_to_json(j);
    CHECK(dumped.at("outcomes").size() == 3);
    const auto csv = dist_to_csv(marginal_ak(w("1,0,0"), 2));
    CHECK(csv.find("outcome,numerator,denominator,approx") == 0);
    CHECK(csv.find("1,2,3,") != std::string::npos);
}
