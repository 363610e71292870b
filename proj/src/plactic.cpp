#include "tensoratoms/plactic.hpp"

#include <algorithm>

namespace ta {

Tableau row_insert(const Tableau& t, int letter) {
    if (letter < 1 || letter > t.alphabet())
        throw validation_error("inserted letter outside alphabet");
    std::vector<std::vector<int>> rows = t.rows();
    int x = letter;
    for (auto& row : rows) {
        // leftmost entry strictly greater than x
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return Tableau(std::move(rows), t.alphabet());
        }
        std::swap(x, *it);
    }
    rows.push_back({x});
    return Tableau(std::move(rows), t.alphabet());
}

Tableau insertion_tableau(const Word& w) {
    Tableau t = Tableau::empty(w.alphabet());
    for (const int x : w.letters()) t = row_insert(t, x);
    return t;
}

Word reading_word(const Tableau& t) {
    std::vector<int> letters;
    letters.reserve(t.box_count());
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
        letters.insert(letters.end(), it->begin(), it->end());
    return Word(std::move(letters), t.alphabet());
}

Tableau plactic_product(const Tableau& s, const Tableau& t) {
    if (s.alphabet() != t.alphabet()) throw validation_error("plactic product alphabet mismatch");
    std::vector<int> letters = reading_word(s).letters();
    const auto wt = reading_word(t).letters();
    letters.insert(letters.end(), wt.begin(), wt.end());
    return insertion_tableau(Word(std::move(letters), s.alphabet()));
}

std::size_t lis(const Word& w) {
    // patience tails for the weakly increasing variant
    std::vector<int> tails;
    for (const int x : w.letters()) {
        auto it = std::upper_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return tails.size();
}

Word restrict_word(const Word& w, const std::set<int>& keep) {
    std::vector<int> letters;
    for (const int x : w.letters()) {
        if (keep.count(x)) letters.push_back(x);
    }
    return Word(std::move(letters), w.alphabet());
}

Word alpha_word(const Word& w) {
    const int n = w.alphabet();
    std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
    for (int& x : letters) x = n + 1 - x;
    return Word(std::move(letters), n);
}

Tableau alpha_tableau(const Tableau& t) {
    return insertion_tableau(alpha_word(reading_word(t)));
}

bool knuth_equivalent(const Word& w, const Word& v) {
    if (w.alphabet() != v.alphabet()) return false;
    return insertion_tableau(w) == insertion_tableau(v);
}

}  // namespace ta
