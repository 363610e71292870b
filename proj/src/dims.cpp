#include "tensoratoms/dims.hpp"

#include <map>
#include <mutex>

#include "tensoratoms/pattern.hpp"

namespace ta {

namespace {

std::vector<Int> shift_normalize(const std::vector<Int>& row) {
    std::vector<Int> key(row);
    const Int base = key.back();
    for (auto& x : key) x -= base;
    return key;
}

Int count_normalized(const std::vector<Int>& row) {
    static std::map<std::vector<Int>, Int> memo;
    static std::mutex memo_mutex;

    if (row.size() == 1) return 1;
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = memo.find(row); it != memo.end()) return it->second;
    }
    Int total = 0;
    for_each_interlacing_row(row, [&](const std::vector<Int>& next) {
        total += count_normalized(shift_normalize(next));
    });
    {
        std::lock_guard lock(memo_mutex);
        memo.emplace(row, total);
    }
    return total;
}

}  // namespace

Int count_completions(const std::vector<Int>& row) {
    if (row.empty()) throw validation_error("empty row");
    for (std::size_t i = 0; i + 1 < row.size(); ++i) {
        if (row[i] < row[i + 1]) throw validation_error("row must be weakly decreasing");
    }
    return count_normalized(shift_normalize(row));
}

Int dim_by_counting(const Weight& lambda) { return count_completions(lambda.parts()); }

Int dim_by_product(const Weight& lambda) {
    const auto& parts = lambda.parts();
    const int n = lambda.rank();
    Int num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num *= parts[i] - parts[j] + (j - i);
            den *= j - i;
        }
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw error("internal: Weyl product is not an integer");
    return num / den;
}

}  // namespace ta
