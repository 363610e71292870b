#pragma once

#include <cstdint>
#include <vector>

#include "tensoratoms/weight.hpp"

namespace ta {

// Rows (x_1 >= ... >= x_{m+1}) and (y_1 >= ... >= y_m) interlace when
// x_i >= y_i >= x_{i+1} for all i.
bool rows_interlace(const std::vector<Int>& above, const std::vector<Int>& below);

// Number of rows of length m interlacing `row` of length m+1, i.e. the
// product of (gap_i + 1) over consecutive entries.
Int interlacing_row_count(const std::vector<Int>& row);

// Gelfand-Tsetlin pattern. rows[0] is the top row (the shape, n entries)
// and rows[k] has n-k entries; every adjacent pair interlaces. The row of
// length l holds the entries a_l(1), ..., a_l(l).
class GTPattern {
public:
    explicit GTPattern(std::vector<std::vector<Int>> rows);

    int rank() const { return static_cast<int>(rows_[0].size()); }
    const std::vector<std::vector<Int>>& rows() const { return rows_; }

    // Row holding (a_l(1), ..., a_l(l)).
    const std::vector<Int>& level(int l) const { return rows_[rows_[0].size() - l]; }

    Weight shape() const { return Weight(rows_[0]); }

    // (a_1, ..., a_{n-1}, lambda_1): the first entry of each level plus
    // the conventional a_n = lambda_1. Weakly increasing.
    std::vector<Int> first_row_vector() const;

    friend bool operator==(const GTPattern& a, const GTPattern& b) { return a.rows_ == b.rows_; }
    friend bool operator<(const GTPattern& a, const GTPattern& b) { return a.rows_ < b.rows_; }

private:
    std::vector<std::vector<Int>> rows_;
};

// Same triangular layout with real entries and weak interlacing; the top
// row must be integral. Used only for the rounding invariant.
class RealGTPattern {
public:
    explicit RealGTPattern(std::vector<std::vector<double>> rows);

    int rank() const { return static_cast<int>(rows_[0].size()); }
    const std::vector<std::vector<double>>& rows() const { return rows_; }

private:
    std::vector<std::vector<double>> rows_;
};

// Coordinate-wise rounding to the nearest integer, halves toward negative
// infinity; the consistent tie rule keeps the interlacing system closed.
GTPattern round_real_pattern(const RealGTPattern& x);

// Visits every row of length m-1 interlacing `row` (length m >= 2), in
// lexicographically increasing coordinate order.
template <typename F>
void for_each_interlacing_row(const std::vector<Int>& row, F&& visit) {
    const std::size_t m = row.size() - 1;
    std::vector<Int> next(m);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == m) {
            visit(static_cast<const std::vector<Int>&>(next));
            return;
        }
        for (Int v = row[i + 1]; v <= row[i]; ++v) {
            next[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

// Visits every pattern of the given shape (depth-first, rows enumerated in
// lexicographic order). Intended for small shapes; guard with
// interlacing_row_count when the shape is not known to be tiny.
template <typename F>
void for_each_pattern(const Weight& shape, F&& visit) {
    std::vector<std::vector<Int>> rows;
    // fixed capacity: pushing rows must not invalidate the reference the
    // row enumeration holds to the current last row
    rows.reserve(shape.rank());
    rows.push_back(shape.parts());
    auto rec = [&](auto&& self) -> void {
        if (rows.back().size() == 1) {
            visit(static_cast<const std::vector<std::vector<Int>>&>(rows));
            return;
        }
        for_each_interlacing_row(rows.back(), [&](const std::vector<Int>& next) {
            rows.push_back(next);
            self(self);
            rows.pop_back();
        });
    };
    rec(rec);
}

// Materializes all patterns of a shape; throws cap_exceeded once more than
// `cap` patterns have been produced.
std::vector<GTPattern> enumerate_patterns(const Weight& shape, const Int& cap);

}  // namespace ta
