#include "tensoratoms/weight.hpp"

#include <algorithm>
#include <sstream>

namespace ta {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Weight::Weight(std::vector<Int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw validation_error("weight must have rank >= 1");
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        if (parts_[i] < parts_[i + 1])
            throw validation_error("weight parts must be weakly decreasing: " + to_string());
    }
}

Weight Weight::parse(const std::string& text) {
    std::vector<Int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        // trim surrounding spaces
        const auto b = token.find_first_not_of(" \t");
        const auto e = token.find_last_not_of(" \t");
        if (b == std::string::npos) throw validation_error("empty component in weight '" + text + "'");
        token = token.substr(b, e - b + 1);
        try {
            parts.emplace_back(token);
        } catch (const std::invalid_argument&) {
            throw validation_error("invalid integer '" + token + "' in weight '" + text + "'");
        }
    }
    if (parts.empty()) throw validation_error("empty weight string");
    return Weight(std::move(parts));
}

Int Weight::size() const {
    Int total = 0;
    for (const auto& p : parts_) total += p;
    return total;
}

Weight Weight::shifted(const Int& p) const {
    std::vector<Int> out(parts_);
    for (auto& x : out) x += p;
    return Weight(std::move(out));
}

Weight Weight::contragredient() const {
    std::vector<Int> out(parts_.rbegin(), parts_.rend());
    for (auto& x : out) x = -x;
    return Weight(std::move(out));
}

std::pair<Weight, Int> Weight::normalized() const {
    Int p = -parts_.back();
    return {shifted(p), p};
}

std::string Weight::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

YoungDiagram::YoungDiagram(Weight w) : weight_(std::move(w)) {
    if (!weight_.is_young_diagram())
        throw validation_error("not a Young diagram (negative part): " + weight_.to_string());
}

}  // namespace ta
