#include <doctest.h>

#include "tensoratoms/bounds.hpp"
#include "tensoratoms/serialize.hpp"

using namespace ta;

namespace {
Weight w(const std::string& s) { return Weight::parse(s); }
}

TEST_CASE("max_atom examples") {
    const auto [nu1, atom1] = max_atom(w("1,0,0"), w("1,0,0"));
    CHECK(nu1 == w("2,0,0"));
    CHECK(atom1 == make_rat(2, 3));

    for (int n_boxes = 1; n_boxes <= 4; ++n_boxes) {
        for (int m_boxes = 1; m_boxes <= 4; ++m_boxes) {
            const auto [nu, atom] =
                max_atom(Weight({Int(n_boxes), Int(0)}), Weight({Int(m_boxes), Int(0)}));
            CHECK(nu == Weight({Int(n_boxes + m_boxes), Int(0)}));
            CHECK(atom == make_rat(n_boxes + m_boxes + 1, Int((n_boxes + 1) * (m_boxes + 1))));
        }
    }

    const auto [nu3, atom3] = max_atom(w("3,1,0"), w("0,0,0"));
    CHECK(nu3 == w("3,1,0"));
    CHECK(atom3 == 1);
}

TEST_CASE("theorem_ratio examples") {
    const auto r = theorem_ratio(w("1,0"), w("1,0"));
    CHECK_FALSE(r.vacuous);
    CHECK(r.lhs == make_rat(3, 4));
    CHECK(r.rhs_scale == 2);
    CHECK(r.ratio == make_rat(3, 8));
    CHECK(r.witness == "2,0");

    const auto vac = theorem_ratio(w("3,3,3"), w("2,1,0"));
    CHECK(vac.vacuous);
    CHECK(vac.lhs == 1);  // point mass
}

TEST_CASE("theorem_ratio is contragredient invariant") {
    for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"2,1,0", "1,1,0"}, {"3,0", "2,0"}, {"3,1,0", "2,2,0"}}) {
        const auto direct = theorem_ratio(w(a), w(b));
        const auto barred = theorem_ratio(w(a).contragredient(), w(b).contragredient());
        CHECK(direct.lhs == barred.lhs);
        CHECK(direct.rhs_scale == barred.rhs_scale);
        CHECK(direct.ratio == barred.ratio);
    }
}

TEST_CASE("firstrow_ratio examples") {
    const auto r1 = firstrow_ratio(w("5,0"), 1);
    CHECK(r1.lhs == make_rat(1, 6));
    CHECK(r1.ratio == make_rat(5, 6));

    const auto r2 = firstrow_ratio(w("1,0,0"), 2);
    CHECK(r2.lhs == make_rat(2, 3));
    CHECK(r2.rhs_scale == 1);
    CHECK(r2.ratio == make_rat(2, 3));

    const auto r3 = firstrow_ratio(w("1,1,0"), 1);
    CHECK_FALSE(r3.vacuous);
    CHECK(r3.ratio <= 1);

    // lambda_1 = lambda_2 makes k = n-1 vacuous
    const auto vac = firstrow_ratio(w("2,2,0"), 2);
    CHECK(vac.vacuous);

    CHECK_THROWS_AS(firstrow_ratio(w("2,0"), 2), validation_error);
}

TEST_CASE("sln_corollary_check examples") {
    CHECK(sln_corollary_check(w("1,0,0"), w("1,0,0"), make_rat(1, 1)));
    for (int n_boxes = 1; n_boxes <= 6; ++n_boxes)
        for (int m_boxes = 1; m_boxes <= 6; ++m_boxes)
            CHECK(sln_corollary_check(Weight({Int(n_boxes), Int(0)}),
                                      Weight({Int(m_boxes), Int(0)}), make_rat(2, 1)));

    Weight witness = w("0");
    CHECK_FALSE(sln_corollary_check(w("1,0,0"), w("1,0,0"), make_rat(1, 4), &witness));
    CHECK(witness == w("2,0,0"));

    CHECK_THROWS_AS(sln_corollary_check(w("2,1"), w("1,0"), make_rat(1, 1)), validation_error);
    CHECK_THROWS_AS(sln_corollary_check(w("0,0"), w("1,0"), make_rat(1, 1)), validation_error);
}

TEST_CASE("pigeonhole_witness examples") {
    CHECK(pigeonhole_witness(w("9,7,3")) == std::pair<int, Int>{2, Int(4)});
    CHECK(pigeonhole_witness(w("5,0")) == std::pair<int, Int>{1, Int(5)});
    CHECK(pigeonhole_witness(w("3,3,0")) == std::pair<int, Int>{2, Int(3)});
    CHECK_THROWS_AS(pigeonhole_witness(w("4,4,4")), validation_error);
}

TEST_CASE("saturation_scan small cells") {
    const auto rows = saturation_scan(3, 2);
    REQUIRE(rows.size() == 4);
    for (const auto& cell : rows) {
        CHECK(cell.support_exact);
        CHECK(cell.all_multiplicity_one);
        CHECK(cell.atom_bound_ok);
        CHECK(cell.support_count == std::min(cell.big_n, cell.big_m) + 1);
        CHECK(cell.support_count == cell.min_nm + 1);
    }

    // n=2, N=M=3: max atom 7/16 >= 1/4
    const auto rows2 = saturation_scan(2, 3);
    const auto& nm3 = rows2.back();
    CHECK(nm3.big_n == 3);
    CHECK(nm3.big_m == 3);
    CHECK(nm3.bound.lhs == make_rat(7, 16));
    CHECK(nm3.atom_bound_ok);
}

TEST_CASE("saturation ratios stay within a constant factor") {
    for (int n = 2; n <= 3; ++n) {
        for (int big : {1, 2, 5, 10, 20}) {
            std::vector<Int> parts(static_cast<std::size_t>(n), Int(0));
            parts[0] = big;
            const Weight lam{std::move(parts)};
            const auto r = theorem_ratio(lam, lam);
            CHECK(r.ratio >= make_rat(1, 8));
            CHECK(r.ratio <= 1);
        }
    }
}

TEST_CASE("grid enumeration") {
    const auto grid = normalized_weight_grid(3, 2, false);
    // (a,b,0) with 1 <= a <= 2, 0 <= b <= a
    CHECK(grid.size() == 5);
    for (const auto& lam : grid) {
        CHECK(lam.last() == 0);
        CHECK(lam.first() >= 1);
        CHECK(lam.first() <= 2);
    }
    const auto with_zero = normalized_weight_grid(3, 2, true);
    CHECK(with_zero.size() == 6);
}

TEST_CASE("theorem_scan matches serial execution under workers") {
    const auto serial = theorem_scan(2, 3, 1);
    const auto parallel = theorem_scan(2, 3, 4);
    REQUIRE(serial.rows.size() == parallel.rows.size());
    CHECK(serial.supremum == parallel.supremum);
    CHECK(serial.argmax == parallel.argmax);
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
        CHECK(serial.rows[i].ratio == parallel.rows[i].ratio);
        CHECK(serial.rows[i].witness == parallel.rows[i].witness);
    }
    CHECK(serial.supremum > 0);
}

TEST_CASE("firstrow_scan for n=2 tracks N/(N+1)") {
    const auto scan = firstrow_scan(2, 6);
    Rat expect(0);
    for (const auto& row : scan.rows) {
        CHECK_FALSE(row.vacuous);
        CHECK(row.ratio == make_rat(row.lambda.first(), row.lambda.first() + 1));
        if (row.ratio > expect) expect = row.ratio;
    }
    CHECK(scan.supremum == make_rat(6, 7));
}

TEST_CASE("grid suprema grow with the grid") {
    Rat previous(0);
    for (int gap = 1; gap <= 4; ++gap) {
        const auto scan = theorem_scan(2, gap, 1);
        CHECK(scan.supremum >= previous);
        previous = scan.supremum;
    }
    previous = 0;
    for (int gap = 1; gap <= 4; ++gap) {
        const auto scan = firstrow_scan(3, gap);
        CHECK(scan.supremum >= previous);
        previous = scan.supremum;
    }
}

TEST_CASE("bound report CSV") {
    const auto scan = theorem_scan(2, 2, 1);
    const auto csv = bound_reports_to_csv(scan.rows);
    CHECK(csv.find("lambda,mu_or_k,lhs_num,lhs_den,scale_num,scale_den,ratio_num,ratio_den,"
                   "witness,vacuous_flag") == 0);
    CHECK(csv.find("\"1,0\",\"1,0\",3,4,2,1,3,8,\"2,0\",0") != std::string::npos);
}
