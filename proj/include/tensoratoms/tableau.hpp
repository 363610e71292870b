#pragma once

#include <vector>

#include "tensoratoms/pattern.hpp"
#include "tensoratoms/weight.hpp"

namespace ta {

// A finite sequence over the alphabet {1, ..., n}.
class Word {
public:
    Word(std::vector<int> letters, int alphabet);

    const std::vector<int>& letters() const { return letters_; }
    int alphabet() const { return alphabet_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    friend bool operator==(const Word& a, const Word& b) {
        return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
    }

private:
    std::vector<int> letters_;
    int alphabet_;
};

// Semi-standard tableau in the alphabet {1, ..., n}: rows weakly increase,
// columns strictly increase. The empty tableau is allowed.
class Tableau {
public:
    Tableau(std::vector<std::vector<int>> rows, int alphabet);

    static Tableau empty(int alphabet) { return Tableau({}, alphabet); }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int alphabet() const { return alphabet_; }
    std::size_t box_count() const;

    // Shape padded with zeros to `alphabet` parts.
    YoungDiagram shape() const;

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.alphabet_ == b.alphabet_ && a.rows_ == b.rows_;
    }
    friend bool operator<(const Tableau& a, const Tableau& b) { return a.rows_ < b.rows_; }

private:
    std::vector<std::vector<int>> rows_;
    int alphabet_;
};

// The bijection of tableaux with patterns: a_l(i) is the number of boxes
// in row i of T filled with letters <= l.
GTPattern pattern_from_tableau(const Tableau& t);

// Inverse direction; the pattern's shape must be a Young diagram.
Tableau tableau_from_pattern(const GTPattern& a);

// All tableaux of the given shape over the alphabet {1..n}, in the order
// induced by pattern enumeration. Throws cap_exceeded past `cap` tableaux.
std::vector<Tableau> enumerate_tableaux(const YoungDiagram& shape, const Int& cap);

}  // namespace ta
