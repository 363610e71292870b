#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "tensoratoms/bounds.hpp"
#include "tensoratoms/lr.hpp"
#include "tensoratoms/measure.hpp"
#include "tensoratoms/pattern.hpp"
#include "tensoratoms/rmt.hpp"

namespace ta {

using nlohmann::json;

// Big integers render as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; rationals always as "num/den" strings.
json int_to_json(const Int& v);
Int int_from_json(const json& j);
std::string rat_to_string(const Rat& q);
double rat_to_double(const Rat& q);

json weight_to_json(const Weight& w);
Weight weight_from_json(const json& j);

json pattern_to_json(const GTPattern& p);
GTPattern pattern_from_json(const json& j);

// {"lambda": [...], "mu": [...], "terms": [{"nu": [...], "c": "<int>",
//  "atom": "<num>/<den>"}]}
json lr_to_json(const LRDecomposition& d);
std::string lr_to_csv(const LRDecomposition& d);

json dist_to_json(const IntDist& d);
json dist_to_json(const VecDist& d);
std::string dist_to_csv(const IntDist& d);

// Scan rows with the fixed column set (lambda, mu_or_k, lhs_num, lhs_den,
// scale_num, scale_den, ratio_num, ratio_den, witness, vacuous_flag).
std::string bound_reports_to_csv(const std::vector<BoundReport>& rows);
std::string saturation_to_csv(const std::vector<SaturationReport>& rows);

json rmt_report_to_json(const RmtReport& r);

}  // namespace ta
