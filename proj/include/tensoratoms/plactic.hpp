#pragma once

#include <set>

#include "tensoratoms/tableau.hpp"

namespace ta {

// Schensted row insertion of one letter (bumping).
Tableau row_insert(const Tableau& t, int letter);

// P(w): left fold of row_insert over the letters of w.
Tableau insertion_tableau(const Word& w);

// Row-by-row reading, bottom line first, each row left to right.
Word reading_word(const Tableau& t);

// S * T = P(w(S) . w(T)).
Tableau plactic_product(const Tableau& s, const Tableau& t);

// Length of the longest weakly increasing subsequence.
std::size_t lis(const Word& w);

// Subsequence of w keeping exactly the letters in `keep`.
Word restrict_word(const Word& w, const std::set<int>& keep);

// Reverse the word and replace each letter i by n+1-i; an involution.
Word alpha_word(const Word& w);

// alpha(T) = P(alpha(w(T))); shape-preserving involution on tableaux.
Tableau alpha_tableau(const Tableau& t);

// True iff the insertion tableaux coincide.
bool knuth_equivalent(const Word& w, const Word& v);

}  // namespace ta
