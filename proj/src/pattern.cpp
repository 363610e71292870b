#include "tensoratoms/pattern.hpp"

#include <cmath>

namespace ta {

bool rows_interlace(const std::vector<Int>& above, const std::vector<Int>& below) {
    if (below.size() + 1 != above.size()) return false;
    for (std::size_t i = 0; i < below.size(); ++i) {
        if (!(above[i] >= below[i] && below[i] >= above[i + 1])) return false;
    }
    return true;
}

Int interlacing_row_count(const std::vector<Int>& row) {
    Int count = 1;
    for (std::size_t i = 0; i + 1 < row.size(); ++i) count *= row[i] - row[i + 1] + 1;
    return count;
}

GTPattern::GTPattern(std::vector<std::vector<Int>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw validation_error("pattern must have a top row");
    const std::size_t n = rows_[0].size();
    if (n == 0) throw validation_error("pattern top row must be non-empty");
    if (rows_.size() != n)
        throw validation_error("pattern must have n rows of decreasing length");
    for (std::size_t k = 0; k < n; ++k) {
        if (rows_[k].size() != n - k)
            throw validation_error("pattern row has wrong length");
    }
    for (std::size_t i = 0; i + 1 < rows_[0].size(); ++i) {
        if (rows_[0][i] < rows_[0][i + 1])
            throw validation_error("pattern shape must be weakly decreasing");
    }
    for (std::size_t k = 0; k + 1 < rows_.size(); ++k) {
        if (!rows_interlace(rows_[k], rows_[k + 1]))
            throw validation_error("pattern rows do not interlace");
    }
}

std::vector<Int> GTPattern::first_row_vector() const {
    const std::size_t n = rows_[0].size();
    std::vector<Int> out(n);
    for (std::size_t l = 1; l < n; ++l) out[l - 1] = rows_[n - l][0];
    out[n - 1] = rows_[0][0];
    return out;
}

RealGTPattern::RealGTPattern(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {
    if (rows_.empty() || rows_[0].empty()) throw validation_error("real pattern must have a top row");
    const std::size_t n = rows_[0].size();
    if (rows_.size() != n) throw validation_error("real pattern must have n rows");
    for (std::size_t k = 0; k < n; ++k) {
        if (rows_[k].size() != n - k) throw validation_error("real pattern row has wrong length");
    }
    for (const double v : rows_[0]) {
        if (v != std::floor(v)) throw validation_error("real pattern shape must be integral");
    }
    for (std::size_t k = 0; k + 1 < rows_.size(); ++k) {
        const auto& above = rows_[k];
        const auto& below = rows_[k + 1];
        for (std::size_t i = 0; i < below.size(); ++i) {
            if (!(above[i] >= below[i] && below[i] >= above[i + 1]))
                throw validation_error("real pattern rows do not interlace");
        }
    }
}

GTPattern round_real_pattern(const RealGTPattern& x) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(x.rows().size());
    for (const auto& row : x.rows()) {
        std::vector<Int> out;
        out.reserve(row.size());
        for (const double v : row) out.emplace_back(std::ceil(v - 0.5));
        rows.push_back(std::move(out));
    }
    return GTPattern(std::move(rows));
}

std::vector<GTPattern> enumerate_patterns(const Weight& shape, const Int& cap) {
    std::vector<GTPattern> out;
    for_each_pattern(shape, [&](const std::vector<std::vector<Int>>& rows) {
        out.emplace_back(rows);
        if (Int(static_cast<unsigned long>(out.size())) > cap)
            throw cap_exceeded("pattern enumeration cap exceeded for shape " + shape.to_string());
    });
    return out;
}

}  // namespace ta
