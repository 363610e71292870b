#pragma once

#include <vector>

#include "tensoratoms/weight.hpp"

namespace ta {

// Number of GT patterns whose top row is `row` (any weakly decreasing
// integer row). Memoized on the shift-normalized row; safe to call
// concurrently.
Int count_completions(const std::vector<Int>& row);

// d_lambda as the number of patterns of shape lambda.
Int dim_by_counting(const Weight& lambda);

// d_lambda by the Weyl product over pairs; independent of the counting
// path. The exact quotient is asserted to be integral.
Int dim_by_product(const Weight& lambda);

}  // namespace ta
