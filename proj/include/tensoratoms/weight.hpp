#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "tensoratoms/errors.hpp"

namespace ta {

using Int = mpz_class;
using Rat = mpq_class;

// Builds a canonical rational num/den (den > 0, reduced).
Rat make_rat(const Int& num, const Int& den);

// Highest weight of an irreducible GL(n) representation: a weakly
// decreasing vector of n integers. Immutable after construction.
class Weight {
public:
    explicit Weight(std::vector<Int> parts);

    // Parses the canonical text form "9,7,3".
    static Weight parse(const std::string& text);

    int rank() const { return static_cast<int>(parts_.size()); }
    const std::vector<Int>& parts() const { return parts_; }
    const Int& operator[](std::size_t i) const { return parts_[i]; }
    const Int& first() const { return parts_.front(); }
    const Int& last() const { return parts_.back(); }

    // lambda_1 - lambda_n.
    Int gap() const { return parts_.front() - parts_.back(); }

    bool is_young_diagram() const { return parts_.back() >= 0; }
    bool is_constant() const { return parts_.front() == parts_.back(); }

    // Total number of boxes (meaningful for Young diagrams).
    Int size() const;

    // (lambda_1 + p, ..., lambda_n + p).
    Weight shifted(const Int& p) const;

    // Contragredient weight (-lambda_n, ..., -lambda_1); an involution.
    Weight contragredient() const;

    // Shift making the last part zero; returns {normalized, p} with
    // normalized = *this shifted by p and p = -lambda_n.
    std::pair<Weight, Int> normalized() const;

    std::string to_string() const;

    friend bool operator==(const Weight& a, const Weight& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return a.parts_ != b.parts_; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.parts_ < b.parts_; }

private:
    std::vector<Int> parts_;
};

// A weight with non-negative parts.
class YoungDiagram {
public:
    explicit YoungDiagram(Weight w);

    const Weight& weight() const { return weight_; }
    int rank() const { return weight_.rank(); }
    const Int& operator[](std::size_t i) const { return weight_[i]; }

private:
    Weight weight_;
};

}  // namespace ta
