#include "tensoratoms/serialize.hpp"

#include <sstream>

namespace ta {

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw validation_error("expected integer or decimal string");
}

std::string rat_to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rat_to_double(const Rat& q) { return q.get_d(); }

json weight_to_json(const Weight& w) {
    json arr = json::array();
    for (const auto& p : w.parts()) arr.push_back(int_to_json(p));
    return arr;
}

Weight weight_from_json(const json& j) {
    if (!j.is_array()) throw validation_error("weight must be a JSON array");
    std::vector<Int> parts;
    for (const auto& x : j) parts.push_back(int_from_json(x));
    return Weight(std::move(parts));
}

json pattern_to_json(const GTPattern& p) {
    json arr = json::array();
    for (const auto& row : p.rows()) {
        json jrow = json::array();
        for (const auto& x : row) jrow.push_back(int_to_json(x));
        arr.push_back(std::move(jrow));
    }
    return arr;
}

GTPattern pattern_from_json(const json& j) {
    if (!j.is_array()) throw validation_error("pattern must be a JSON array of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& jrow : j) {
        std::vector<Int> row;
        for (const auto& x : jrow) row.push_back(int_from_json(x));
        rows.push_back(std::move(row));
    }
    return GTPattern(std::move(rows));
}

json lr_to_json(const LRDecomposition& d) {
    json terms = json::array();
    for (const auto& term : d.terms()) {
        terms.push_back({{"nu", weight_to_json(term.nu)},
                         {"c", term.multiplicity.get_str()},
                         {"atom", rat_to_string(term.atom)}});
    }
    return {{"lambda", weight_to_json(d.lambda())},
            {"mu", weight_to_json(d.mu())},
            {"terms", std::move(terms)}};
}

std::string lr_to_csv(const LRDecomposition& d) {
    std::ostringstream out;
    out << "nu,c,atom_num,atom_den,approx\n";
    for (const auto& term : d.terms()) {
        out << '"' << term.nu.to_string() << "\"," << term.multiplicity.get_str() << ','
            << term.atom.get_num().get_str() << ',' << term.atom.get_den().get_str() << ','
            << rat_to_double(term.atom) << '\n';
    }
    return out.str();
}

json dist_to_json(const IntDist& d) {
    json outcomes = json::array();
    for (const auto& [value, mass] : d.support())
        outcomes.push_back({{"value", int_to_json(value)}, {"mass", rat_to_string(mass)}});
    return {{"outcomes", std::move(outcomes)}};
}

json dist_to_json(const VecDist& d) {
    json outcomes = json::array();
    for (const auto& [value, mass] : d.support()) {
        json v = json::array();
        for (const auto& x : value) v.push_back(int_to_json(x));
        outcomes.push_back({{"value", std::move(v)}, {"mass", rat_to_string(mass)}});
    }
    return {{"outcomes", std::move(outcomes)}};
}

std::string dist_to_csv(const IntDist& d) {
    std::ostringstream out;
    out << "outcome,numerator,denominator,approx\n";
    for (const auto& [value, mass] : d.support()) {
        out << value.get_str() << ',' << mass.get_num().get_str() << ','
            << mass.get_den().get_str() << ',' << rat_to_double(mass) << '\n';
    }
    return out.str();
}

namespace {

void bound_report_row(std::ostringstream& out, const BoundReport& row) {
    out << '"' << row.lambda.to_string() << "\",";
    if (row.mu)
        out << '"' << row.mu->to_string() << '"';
    else
        out << *row.k;
    out << ',' << row.lhs.get_num().get_str() << ',' << row.lhs.get_den().get_str() << ','
        << row.rhs_scale.get_num().get_str() << ',' << row.rhs_scale.get_den().get_str() << ','
        << row.ratio.get_num().get_str() << ',' << row.ratio.get_den().get_str() << ",\""
        << row.witness << "\"," << (row.vacuous ? 1 : 0) << '\n';
}

}  // namespace

std::string bound_reports_to_csv(const std::vector<BoundReport>& rows) {
    std::ostringstream out;
    out << "lambda,mu_or_k,lhs_num,lhs_den,scale_num,scale_den,ratio_num,ratio_den,"
           "witness,vacuous_flag\n";
    for (const auto& row : rows) bound_report_row(out, row);
    return out.str();
}

std::string saturation_to_csv(const std::vector<SaturationReport>& rows) {
    std::ostringstream out;
    out << "lambda,mu_or_k,lhs_num,lhs_den,scale_num,scale_den,ratio_num,ratio_den,"
           "witness,vacuous_flag\n";
    for (const auto& row : rows) bound_report_row(out, row.bound);
    return out.str();
}

json rmt_report_to_json(const RmtReport& r) {
    return {{"spec_a", r.spec_a.values()},
            {"spec_b", r.spec_b.values()},
            {"samples", r.samples},
            {"seed", r.seed},
            {"significance", r.significance},
            {"ks_statistic", r.ks_statistic},
            {"critical_value", r.critical_value},
            {"pass", r.pass}};
}

}  // namespace ta
