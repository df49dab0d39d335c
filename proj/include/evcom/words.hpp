#pragma once

#include <string>
#include <vector>

#include "evcom/perm.hpp"

namespace evcom {

/// A multilinear monomial in x_1..x_m as the sequence of its variable
/// indices, e.g. {3,1,2} is x_3 x_1 x_2.
using Word = std::vector<int>;

Word word_of(const Permutation& p);

/// Inverse of word_of; validates that the word uses each of x_1..x_k once.
Permutation perm_of_word(const Word& w);

std::string render_word(const Word& w);

/// Degree raise by literal token surgery on a monomial word over x_1..x_m:
/// for 1 <= i <= m the token i expands to the pair (i, i+1) and every token
/// above i shifts up by one (the substitution of the product x_i x_{i+1}
/// for x_i); i == 0 prefixes a fresh x_1 and shifts everything; i == m+1
/// appends x_{m+1}. This is the check route for the closed-form lift.
Word lift_word(const Word& w, int m, int i);

}  // namespace evcom
