#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "assoc/moves.hpp"

// Words in the generators.
//
// A word is stored in application order: w[0] acts first. Classical
// composition notation writes the same path right to left; everything in
// this library is application-ordered, and inverse_word() is the one place
// a reversal happens.

namespace assoc {

using Word = std::vector<GeneratorLetter>;

// Space-separated letter tokens; the empty word renders as "-".
std::string word_to_string(const Word& w);
Word parse_word(std::string_view text);

// Reverse the word and invert every letter; undoes apply_word.
Word inverse_word(const Word& w);

Expression apply_word(const Word& w, Expression e);

// The unique all-positive word with non-decreasing indices taking e to the
// left comb: while e is not fully normalized, rotate at the current
// normalization level.
Word normalize_word(Expression e);

bool is_canonical_word(const Word& w);  // positive, indices non-decreasing

// Word from e to f routed through the left comb: normalize_word(e) followed
// by the inverse of normalize_word(f). Not freely reduced.
Word canonical_iso(const Expression& e, const Expression& f);

// Cancel adjacent mutually inverse letters.
Word free_reduce(Word w);

// Sort a positive word by the defining relations: an adjacent [a_j, a_i]
// with i < j becomes [a_i, a_{j+1}], leftmost site first, until the indices
// are non-decreasing. The result is the same group element.
Word rewrite_positive(Word w);

}  // namespace assoc
